//! Free modules with degree shifts, their elements, and graded matrices.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

/// F = R(-a_1) + ... + R(-a_r); `shifts[i]` is the degree of the i-th
/// basis vector. Rank 0 is the zero module.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeModule {
    pub ring: Ring,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Ring, shifts: Vec<i64>) -> Self {
        FreeModule { ring, shifts }
    }

    pub fn zero(ring: Ring) -> Self {
        FreeModule {
            ring,
            shifts: Vec::new(),
        }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    /// The dual free module, with negated shifts.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            ring: self.ring.clone(),
            shifts: self.shifts.iter().map(|s| -s).collect(),
        }
    }

    pub fn basis_elem(&self, i: usize) -> ModuleElem {
        let mut comps = vec![Polynomial::zero(); self.rank()];
        comps[i] = Polynomial::constant(self.ring.field(), 1, self.ring.nvars());
        ModuleElem { comps }
    }
}

/// An element of a free module: one polynomial per component.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleElem {
    pub comps: Vec<Polynomial>,
}

impl ModuleElem {
    pub fn zero(rank: usize) -> Self {
        ModuleElem {
            comps: vec![Polynomial::zero(); rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn add(&self, other: &ModuleElem, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.add(b, ring.field(), ring.order()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElem, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a.sub(b, ring.field(), ring.order()))
                .collect(),
        }
    }

    pub fn scale(&self, c: u64, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self.comps.iter().map(|p| p.scale(c, ring.field())).collect(),
        }
    }

    pub fn mul_term(&self, c: u64, m: &Monomial, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self
                .comps
                .iter()
                .map(|p| p.mul_term(c, m, ring.field()))
                .collect(),
        }
    }

    pub fn mul_poly(&self, f: &Polynomial, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self
                .comps
                .iter()
                .map(|p| p.mul(f, ring.field(), ring.order()))
                .collect(),
        }
    }

    /// Reduce every component to normal form modulo the defining ideal.
    pub fn nf_ideal(&self, ring: &Ring) -> ModuleElem {
        ModuleElem {
            comps: self.comps.iter().map(|p| ring.nf_ideal(p)).collect(),
        }
    }

    /// Leading (component, term) under the given module order.
    pub fn lead(&self, order: &ModuleOrder) -> Option<(usize, &Term)> {
        let mut best: Option<(usize, &Term)> = None;
        for (i, p) in self.comps.iter().enumerate() {
            if let Some(t) = p.lead() {
                best = match best {
                    None => Some((i, t)),
                    Some((bi, bt)) => {
                        if order.cmp((i, &t.mono), (bi, &bt.mono)) == Ordering::Greater {
                            Some((i, t))
                        } else {
                            Some((bi, bt))
                        }
                    }
                };
            }
        }
        best
    }

    /// Degree of a homogeneous element relative to the shifts, or None if
    /// the element is zero or not homogeneous.
    pub fn homogeneous_degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (i, p) in self.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree()? as i64 + shifts[i];
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }
}

/// Orders on module monomials (component, monomial).
#[derive(Debug, Clone)]
pub enum ModuleOrder {
    /// Term over position: ring order on monomials, lower component wins ties.
    Top(TermOrder),
    /// Position over term: lower component first, ring order inside.
    Pot(TermOrder),
    /// Schreyer order induced by the leading module monomials of a basis:
    /// compare images m * lead(g_i) under TOP, break ties by lower index.
    Schreyer {
        base: TermOrder,
        leads: Vec<(usize, Monomial)>,
    },
}

impl ModuleOrder {
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::Top(o) => o
                .cmp(a.1, b.1)
                .then_with(|| b.0.cmp(&a.0)),
            ModuleOrder::Pot(o) => b.0.cmp(&a.0).then_with(|| o.cmp(a.1, b.1)),
            ModuleOrder::Schreyer { base, leads } => {
                let (ca, ma) = (&leads[a.0], a.1.mul(&leads[a.0].1));
                let (cb, mb) = (&leads[b.0], b.1.mul(&leads[b.0].1));
                base.cmp(&ma, &mb)
                    .then_with(|| cb.0.cmp(&ca.0))
                    .then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

/// A graded matrix between free modules, stored column-major: column j is
/// the image of the j-th basis vector of the source.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    pub source: FreeModule,
    pub target: FreeModule,
    pub cols: Vec<ModuleElem>,
}

impl Matrix {
    /// Validating constructor: every column must be homogeneous of the
    /// degree announced by the source shift.
    pub fn new(source: FreeModule, target: FreeModule, cols: Vec<ModuleElem>) -> Result<Self> {
        assert_eq!(source.rank(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, p) in col.comps.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let d = p
                    .homogeneous_degree()
                    .ok_or(Error::Inhomogeneous { index: j })?;
                let found = d as i64 + target.shifts[i];
                if found != source.shifts[j] {
                    return Err(Error::DegreeMismatch {
                        row: i,
                        col: j,
                        found,
                        expected: source.shifts[j],
                    });
                }
            }
        }
        Ok(Matrix {
            source,
            target,
            cols,
        })
    }

    /// Build from a row-major grid of entries given the target shifts;
    /// source shifts are inferred from the entry degrees.
    pub fn from_rows(
        ring: &Ring,
        target_shifts: Vec<i64>,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let nrows = rows.len();
        assert_eq!(nrows, target_shifts.len());
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut src_shifts = Vec::with_capacity(ncols);
        let mut cols = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let mut col = ModuleElem::zero(nrows);
            let mut shift: Option<i64> = None;
            for i in 0..nrows {
                let p = ring.nf_ideal(&rows[i][j]);
                if !p.is_zero() {
                    let d = p
                        .homogeneous_degree()
                        .ok_or(Error::Inhomogeneous { index: j })?
                        as i64
                        + target_shifts[i];
                    match shift {
                        None => shift = Some(d),
                        Some(e) if e == d => {}
                        Some(e) => {
                            return Err(Error::DegreeMismatch {
                                row: i,
                                col: j,
                                found: d,
                                expected: e,
                            })
                        }
                    }
                }
                col.comps[i] = p;
            }
            src_shifts.push(shift.unwrap_or(0));
            cols.push(col);
        }
        let target = FreeModule::new(ring.clone(), target_shifts);
        let source = FreeModule::new(ring.clone(), src_shifts);
        Matrix::new(source, target, cols)
    }

    pub fn zero_map(source: FreeModule, target: FreeModule) -> Self {
        let rank = target.rank();
        let cols = vec![ModuleElem::zero(rank); source.rank()];
        Matrix {
            source,
            target,
            cols,
        }
    }

    pub fn identity(free: &FreeModule) -> Self {
        let cols = (0..free.rank()).map(|i| free.basis_elem(i)).collect();
        Matrix {
            source: free.clone(),
            target: free.clone(),
            cols,
        }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j].comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Apply to an element written in source coordinates.
    pub fn apply(&self, v: &ModuleElem, ring: &Ring) -> ModuleElem {
        let mut acc = ModuleElem::zero(self.nrows());
        for (j, p) in v.comps.iter().enumerate() {
            if !p.is_zero() {
                acc = acc.add(&self.cols[j].mul_poly(p, ring), ring);
            }
        }
        acc.nf_ideal(ring)
    }

    /// Matrix product self * rhs (composition: apply rhs first).
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        debug_assert_eq!(self.ncols(), rhs.nrows());
        let ring = &self.target.ring;
        let cols = rhs.cols.iter().map(|c| self.apply(c, ring)).collect();
        Matrix {
            source: rhs.source.clone(),
            target: self.target.clone(),
            cols,
        }
    }

    /// The dualized map between dual free modules.
    pub fn transpose(&self) -> Matrix {
        let source = self.target.dual();
        let target = self.source.dual();
        let cols = (0..self.nrows())
            .map(|i| ModuleElem {
                comps: (0..self.ncols()).map(|j| self.entry(i, j).clone()).collect(),
            })
            .collect();
        Matrix {
            source,
            target,
            cols,
        }
    }

    /// [self | other]: concatenation of two maps with a common target.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.target.shifts, other.target.shifts);
        let mut shifts = self.source.shifts.clone();
        shifts.extend_from_slice(&other.source.shifts);
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        Matrix {
            source: FreeModule::new(self.source.ring.clone(), shifts),
            target: self.target.clone(),
            cols,
        }
    }

    /// Restrict to the first k source columns.
    pub fn take_cols(&self, k: usize) -> Matrix {
        Matrix {
            source: FreeModule::new(self.source.ring.clone(), self.source.shifts[..k].to_vec()),
            target: self.target.clone(),
            cols: self.cols[..k].to_vec(),
        }
    }

    pub fn nf_ideal(&self, ring: &Ring) -> Matrix {
        Matrix {
            source: self.source.clone(),
            target: self.target.clone(),
            cols: self.cols.iter().map(|c| c.nf_ideal(ring)).collect(),
        }
    }
}
