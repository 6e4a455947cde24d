//! The graded ring context R = F_p[x_1..x_n]/I with its term order and
//! degree cap. All other structures hold a handle to one of these.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner;
use crate::monomial::TermOrder;
use crate::poly::Polynomial;

pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// Tri-state verdict for properties that may be undecidable on a fixture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

#[derive(Debug)]
pub struct RingData {
    pub field: PrimeField,
    pub vars: Vec<String>,
    pub order: TermOrder,
    pub ideal: Vec<Polynomial>,
    pub degree_cap: u32,
    pub(crate) ideal_gb: OnceLock<Vec<Polynomial>>,
    pub(crate) krull_dim: OnceLock<u32>,
    pub(crate) ring_depth: OnceLock<u32>,
    pub(crate) gorenstein: OnceLock<TriState>,
}

/// Shared-handle graded ring. Cheap to clone; values are immutable after
/// construction and the caches are write-once.
#[derive(Debug, Clone)]
pub struct Ring(pub(crate) Arc<RingData>);

impl Ring {
    pub fn new(
        field: PrimeField,
        vars: Vec<String>,
        order: TermOrder,
        ideal: Vec<Polynomial>,
        degree_cap: u32,
    ) -> Result<Self> {
        for (i, f) in ideal.iter().enumerate() {
            if f.is_zero() || !f.is_homogeneous() {
                return Err(Error::Inhomogeneous { index: i });
            }
        }
        Ok(Ring(Arc::new(RingData {
            field,
            vars,
            order,
            ideal,
            degree_cap,
            ideal_gb: OnceLock::new(),
            krull_dim: OnceLock::new(),
            ring_depth: OnceLock::new(),
            gorenstein: OnceLock::new(),
        })))
    }

    pub fn polynomial_ring(field: PrimeField, vars: Vec<String>) -> Result<Self> {
        Ring::new(field, vars, TermOrder::GrevLex, Vec::new(), DEFAULT_DEGREE_CAP)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.0.order
    }

    #[inline]
    pub fn ideal(&self) -> &[Polynomial] {
        &self.0.ideal
    }

    #[inline]
    pub fn degree_cap(&self) -> u32 {
        self.0.degree_cap
    }

    pub fn is_ambient(&self) -> bool {
        self.0.ideal.is_empty()
    }

    /// The ambient polynomial ring S with the same field, variables and order.
    pub fn ambient(&self) -> Ring {
        if self.is_ambient() {
            return self.clone();
        }
        Ring::new(
            self.0.field,
            self.0.vars.clone(),
            self.0.order,
            Vec::new(),
            self.0.degree_cap,
        )
        .expect("ambient ring is always valid")
    }

    /// R/extra: the quotient by additionally imposed homogeneous generators.
    pub fn quotient_by(&self, extra: Vec<Polynomial>) -> Result<Ring> {
        let mut ideal = self.0.ideal.clone();
        ideal.extend(extra);
        Ring::new(
            self.0.field,
            self.0.vars.clone(),
            self.0.order,
            ideal,
            self.0.degree_cap,
        )
    }

    pub fn same_context(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field
                && self.0.vars == other.0.vars
                && self.0.order == other.0.order
                && self.0.ideal == other.0.ideal)
    }

    /// Reduced Groebner basis of the defining ideal, cached.
    pub fn ideal_gb(&self) -> &[Polynomial] {
        self.0.ideal_gb.get_or_init(|| {
            if self.0.ideal.is_empty() {
                return Vec::new();
            }
            groebner::ideal_groebner(self, &self.0.ideal)
                .expect("defining ideal GB within degree cap")
        })
    }

    /// Normal form of a polynomial modulo the defining ideal.
    pub fn nf_ideal(&self, f: &Polynomial) -> Polynomial {
        if self.is_ambient() || f.is_zero() {
            return f.clone();
        }
        groebner::poly_normal_form(self, f, self.ideal_gb())
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other)
    }
}
impl Eq for Ring {}
