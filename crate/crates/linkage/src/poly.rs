//! Sparse multivariate polynomials with exact F_p coefficients.
//!
//! Terms are kept sorted strictly descending under the ambient term order,
//! with no zero coefficients and no duplicate monomials; the zero polynomial
//! has an empty term list.

use std::cmp::Ordering;

use crate::field::PrimeField;
use crate::monomial::{Monomial, TermOrder};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u64,
    pub mono: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(field: &PrimeField, c: u64, nvars: usize) -> Self {
        let c = c % field.modulus();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(nvars),
            }],
        }
    }

    pub fn monomial(c: u64, mono: Monomial) -> Self {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term { coeff: c, mono }],
        }
    }

    /// Build from unsorted (coeff, monomial) pairs, combining duplicates.
    pub fn from_terms(field: &PrimeField, order: TermOrder, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono {
                    last.coeff = field.add(last.coeff, t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| t.coeff != 0);
        Polynomial { terms: out }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of a homogeneous polynomial; None when the terms have
    /// mixed degrees. The zero polynomial reports Some for any probe, so it
    /// is handled by the caller.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter();
        let d = it.next()?.mono.degree();
        if it.all(|t| t.mono.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// A nonzero constant (unit in the graded setting), if that is what
    /// this polynomial is.
    pub fn as_unit(&self) -> Option<u64> {
        if self.terms.len() == 1 && self.terms[0].mono.is_one() {
            Some(self.terms[0].coeff)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Polynomial, field: &PrimeField, order: TermOrder) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].mono, &other.terms[j].mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].coeff, other.terms[j].coeff);
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: self.terms[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &PrimeField) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, field: &PrimeField, order: TermOrder) -> Polynomial {
        self.add(&other.neg(field), field, order)
    }

    pub fn scale(&self, c: u64, field: &PrimeField) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiply by the single term c * m. Preserves term ordering.
    pub fn mul_term(&self, c: u64, m: &Monomial, field: &PrimeField) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(t.coeff, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, field: &PrimeField, order: TermOrder) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_term(t.coeff, &t.mono, field), field, order);
        }
        acc
    }
}
