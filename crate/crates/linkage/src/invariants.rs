//! Numerical invariants: depth, dimension, grade, reduced grade,
//! G-dimension, ring-level properties, canonical modules and local
//! cohomology.
//!
//! Depth and dimension are exact: depth comes from the finite resolution
//! over the ambient polynomial ring, dimension from the pole order of the
//! Hilbert series. Quantities defined through infinitely many Ext modules
//! carry an explicit verdict about how far they were verified.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::FreeModule;
use crate::hilbert::hilbert_series;
use crate::homology::{ext, is_k_reflexive};
use crate::module::PresentedModule;
use crate::ring::{Ring, TriState};

/// A value that may only be certified within a probe bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Bounded {
    /// Certified exactly.
    Exact { value: u32 },
    /// Certified to be infinite.
    Infinite,
    /// Equals `value` if the pattern seen up to `bound` persists.
    UpToBound { value: u32, bound: u32 },
    /// Exceeds `bound`; possibly infinite.
    AtLeast { bound: u32 },
}

impl Bounded {
    pub fn value(&self) -> Option<u32> {
        match self {
            Bounded::Exact { value } | Bounded::UpToBound { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn is_finite_claim(&self) -> bool {
        self.value().is_some()
    }
}

fn r_free(ring: &Ring) -> PresentedModule {
    PresentedModule::free(FreeModule::new(ring.clone(), vec![0]))
}

/// depth M over the graded-local ring, computed as n - pd_S(M) over the
/// ambient polynomial ring (Auslander-Buchsbaum).
pub fn depth(m: &PresentedModule) -> Result<u32> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let ms = m.to_ambient();
    let n = ms.ring().nvars();
    let res = ms.resolve(n + 1)?;
    let pd = res.pd().ok_or_else(|| {
        Error::Invariant("ambient resolution did not terminate".into())
    })?;
    Ok(n as u32 - pd as u32)
}

/// Krull dimension of the module, read off the Hilbert series.
pub fn dim(m: &PresentedModule) -> Result<u32> {
    hilbert_series(m)?
        .dimension()
        .ok_or(Error::ZeroModule)
}

pub fn is_cm_module(m: &PresentedModule) -> Result<bool> {
    Ok(depth(m)? == dim(m)?)
}

pub fn ring_depth(ring: &Ring) -> u32 {
    *ring
        .0
        .ring_depth
        .get_or_init(|| depth(&r_free(ring)).expect("ring is a nonzero module"))
}

pub fn ring_dim(ring: &Ring) -> u32 {
    *ring
        .0
        .krull_dim
        .get_or_init(|| dim(&r_free(ring)).expect("ring is a nonzero module"))
}

pub fn is_cm_ring(ring: &Ring) -> bool {
    ring_depth(ring) == ring_dim(ring)
}

/// The graded canonical module omega = Ext^{n-d}_S(R, S)(-n).
pub fn canonical_module(ring: &Ring) -> Result<PresentedModule> {
    let ambient = ring.ambient();
    let n = ambient.nvars();
    let d = ring_dim(ring) as usize;
    let r_over_s = r_free(ring).to_ambient();
    let e = ext(&r_over_s, &r_free(&ambient), n - d)?;
    let omega_s = e.twist(-(n as i64));
    Ok(reinterpret_over(ring, &omega_s))
}

/// View a module annihilated by I as a module over R = S/I: same cover,
/// relations reduced modulo I.
pub fn reinterpret_over(ring: &Ring, m: &PresentedModule) -> PresentedModule {
    let mm = m.minimal();
    let pres = mm.pres();
    let target = FreeModule::new(ring.clone(), pres.target.shifts.clone());
    let source = FreeModule::new(ring.clone(), pres.source.shifts.clone());
    let mat = crate::free::Matrix {
        source,
        target,
        cols: pres.cols.clone(),
    };
    PresentedModule::from_matrix(mat)
}

/// R is Gorenstein iff it is Cohen-Macaulay with a free cyclic canonical
/// module. Exact over these fixtures, cached on the ring.
pub fn is_gorenstein_ring(ring: &Ring) -> TriState {
    *ring.0.gorenstein.get_or_init(|| {
        if !is_cm_ring(ring) {
            return TriState::No;
        }
        match canonical_module(ring) {
            Ok(omega) => {
                let min = omega.minimal();
                if min.cover().rank() == 1 && min.pres().source.rank() == 0 {
                    TriState::Yes
                } else {
                    TriState::No
                }
            }
            Err(_) => TriState::Unknown,
        }
    })
}

/// grade M = inf { i : Ext^i(M,R) != 0 }; None encodes +infinity (the
/// zero module). Exact: the infimum is at most depth R.
pub fn grade(m: &PresentedModule) -> Result<Option<u32>> {
    if m.is_zero() {
        return Ok(None);
    }
    let ring = m.ring().clone();
    let free = r_free(&ring);
    for i in 0..=ring_depth(&ring) {
        if !ext(m, &free, i as usize)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Err(Error::Invariant(
        "no nonvanishing Ext at or below depth R".into(),
    ))
}

/// Reduced grade: inf { i >= 1 : Ext^i(M,R) != 0 }, probed through `bound`.
pub fn reduced_grade(m: &PresentedModule, bound: u32) -> Result<Bounded> {
    if m.is_zero() {
        return Ok(Bounded::Infinite);
    }
    let ring = m.ring().clone();
    let free = r_free(&ring);
    for i in 1..=bound {
        if !ext(m, &free, i as usize)?.is_zero() {
            return Ok(Bounded::Exact { value: i });
        }
    }
    // a finite projective dimension certifies vanishing of all higher Ext
    let res = m.resolve(bound as usize + 1)?;
    if let Some(pd) = res.pd() {
        if pd as u32 <= bound {
            return Ok(Bounded::Infinite);
        }
    }
    Ok(Bounded::AtLeast { bound })
}

/// The k-th syzygy module in the minimal free resolution; Omega^0 M = M
/// (minimalized).
pub fn syzygy(m: &PresentedModule, k: usize) -> Result<PresentedModule> {
    if k == 0 {
        return Ok(m.minimal().clone());
    }
    let res = m.resolve(k + 1)?;
    if res.rank(k) == 0 {
        return Ok(PresentedModule::free(FreeModule::zero(m.ring().clone())));
    }
    if k < res.diffs.len() {
        Ok(PresentedModule::from_matrix(res.diffs[k].clone()))
    } else {
        // resolution ended at F_k: the syzygy is free
        Ok(PresentedModule::free(res.diffs[k - 1].source.clone()))
    }
}

/// G-dimension with explicit certification: finite projective dimension
/// and Gorenstein base rings give exact answers, otherwise the
/// totally-reflexive test on the appropriate syzygy is run through the
/// probe bound.
pub fn gdim(m: &PresentedModule, bound: u32) -> Result<Bounded> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let ring = m.ring().clone();
    let res = m.resolve(bound as usize + 1)?;
    if let Some(pd) = res.pd() {
        return Ok(Bounded::Exact { value: pd as u32 });
    }
    if is_gorenstein_ring(&ring) == TriState::Yes {
        return Ok(Bounded::Exact {
            value: ring_depth(&ring) - depth(m)?,
        });
    }
    let free = r_free(&ring);
    let mut sup = 0u32;
    for i in 1..=bound {
        if !ext(m, &free, i as usize)?.is_zero() {
            sup = i;
        }
    }
    if sup == bound {
        // Ext^bound already nonzero: nothing the reflexivity probe could
        // certify within the bound
        return Ok(Bounded::AtLeast { bound });
    }
    if is_k_reflexive(&syzygy(m, sup as usize)?, &free, bound)? {
        Ok(Bounded::UpToBound { value: sup, bound })
    } else {
        Ok(Bounded::AtLeast { bound })
    }
}

/// H^i_m(M), stored through graded local duality: the module kept here is
/// Ext^{n-i}_S(M, S(-n)), whose Hilbert function at -e is the dimension of
/// H^i_m(M) in degree e.
#[derive(Debug, Clone)]
pub struct LocalCohomology {
    pub matlis_dual: PresentedModule,
}

impl LocalCohomology {
    pub fn dim_in_degree(&self, e: i64) -> Result<i64> {
        Ok(hilbert_series(&self.matlis_dual)?.coeff(-e))
    }

    pub fn is_zero(&self) -> bool {
        self.matlis_dual.is_zero()
    }

    /// Largest degree in which the cohomology is nonzero (finite because
    /// the dual is finitely generated).
    pub fn top_degree(&self) -> Result<Option<i64>> {
        if self.is_zero() {
            return Ok(None);
        }
        let min = self
            .matlis_dual
            .min_gen_shifts()
            .into_iter()
            .min()
            .unwrap();
        Ok(Some(-min))
    }
}

pub fn local_cohomology(m: &PresentedModule, i: usize) -> Result<LocalCohomology> {
    let ms = m.to_ambient();
    let ambient = ms.ring().clone();
    let n = ambient.nvars();
    if i > n {
        return Ok(LocalCohomology {
            matlis_dual: PresentedModule::free(FreeModule::zero(ambient)),
        });
    }
    let e = ext(&ms, &r_free(&ambient), n - i)?;
    Ok(LocalCohomology {
        matlis_dual: e.twist(-(n as i64)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;
    use crate::poly::Polynomial;

    fn s2() -> Ring {
        Ring::polynomial_ring(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()])
            .unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    fn r_xy() -> Ring {
        s2().quotient_by(vec![p(&[1, 1])]).unwrap()
    }

    fn k_over(r: &Ring) -> PresentedModule {
        PresentedModule::cyclic(r, &[p(&[1, 0]), p(&[0, 1])]).unwrap()
    }

    #[test]
    fn ring_invariants() {
        let s = s2();
        assert_eq!(ring_depth(&s), 2);
        assert_eq!(ring_dim(&s), 2);
        assert_eq!(is_gorenstein_ring(&s), TriState::Yes);

        let r = r_xy();
        assert_eq!(ring_depth(&r), 1);
        assert_eq!(ring_dim(&r), 1);
        assert_eq!(is_gorenstein_ring(&r), TriState::Yes);

        // fat point with two-dimensional socle: CM but not Gorenstein
        let fat = s2()
            .quotient_by(vec![p(&[2, 0]), p(&[1, 1]), p(&[0, 2])])
            .unwrap();
        assert_eq!(ring_depth(&fat), 0);
        assert_eq!(ring_dim(&fat), 0);
        assert!(is_cm_ring(&fat));
        assert_eq!(is_gorenstein_ring(&fat), TriState::No);
    }

    #[test]
    fn canonical_module_of_the_plane() {
        let s = s2();
        let omega = canonical_module(&s).unwrap();
        assert_eq!(omega.min_gen_shifts(), vec![2]);
        assert_eq!(omega.minimal().pres().source.rank(), 0);
    }

    #[test]
    fn depth_dim_grade_of_the_residue_field() {
        let s = s2();
        let k = k_over(&s);
        assert_eq!(depth(&k).unwrap(), 0);
        assert_eq!(dim(&k).unwrap(), 0);
        assert_eq!(grade(&k).unwrap(), Some(2));
        assert_eq!(
            reduced_grade(&k, 6).unwrap(),
            Bounded::Exact { value: 2 }
        );
        let free = r_free(&s);
        assert_eq!(grade(&free).unwrap(), Some(0));
        assert_eq!(reduced_grade(&free, 6).unwrap(), Bounded::Infinite);
    }

    #[test]
    fn gdim_branches() {
        let s = s2();
        let k = k_over(&s);
        // finite projective dimension
        assert_eq!(gdim(&k, 6).unwrap(), Bounded::Exact { value: 2 });
        // Gorenstein base: AB formula
        let r = r_xy();
        assert_eq!(gdim(&k_over(&r), 6).unwrap(), Bounded::Exact { value: 1 });
        let mx = PresentedModule::cyclic(&r, &[p(&[1, 0])]).unwrap();
        assert_eq!(gdim(&mx, 6).unwrap(), Bounded::Exact { value: 0 });
        assert_eq!(depth(&mx).unwrap(), 1);
    }

    #[test]
    fn syzygies_walk_down_the_resolution() {
        let s = s2();
        let k = k_over(&s);
        let o1 = syzygy(&k, 1).unwrap();
        assert_eq!(o1.min_gen_shifts(), vec![1, 1]);
        let o2 = syzygy(&k, 2).unwrap();
        assert_eq!(o2.min_gen_shifts(), vec![2]);
        let res = o2.resolve(2).unwrap();
        assert_eq!(res.pd(), Some(0));
        assert!(syzygy(&k, 3).unwrap().is_zero());
    }

    #[test]
    fn local_cohomology_via_duality() {
        let s = s2();
        let k = k_over(&s);
        let h0 = local_cohomology(&k, 0).unwrap();
        assert_eq!(h0.dim_in_degree(0).unwrap(), 1);
        assert_eq!(h0.dim_in_degree(1).unwrap(), 0);
        assert!(local_cohomology(&k, 1).unwrap().is_zero());
        assert!(local_cohomology(&k, 2).unwrap().is_zero());

        // R = F_101[x,y]/(xy): depth 1, so H^0 = 0 and H^1 != 0
        let r = r_xy();
        let rr = r_free(&r);
        assert!(local_cohomology(&rr, 0).unwrap().is_zero());
        let h1 = local_cohomology(&rr, 1).unwrap();
        assert!(!h1.is_zero());
        assert_eq!(h1.dim_in_degree(0).unwrap(), 1);
        assert_eq!(h1.top_degree().unwrap(), Some(0));
    }
}
