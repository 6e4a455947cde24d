//! Finitely presented graded modules: minimal presentations, minimal free
//! resolutions, subquotients, and morphisms.

use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::free::{FreeModule, Matrix, ModuleElem};
use crate::groebner::{self, GBasis};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Drop generators that lie in the submodule spanned by the others. Over a
/// graded ring with all generators in positive-degree cosets this yields a
/// minimal generating set. Deterministic: higher degrees are tried first.
pub fn minimal_gens(target: &FreeModule, gens: &[ModuleElem]) -> Result<Vec<ModuleElem>> {
    minimal_gens_modulo(target, gens, &[])
}

/// Same pruning, but redundancy is tested modulo an extra submodule of
/// relations: the result generates (<gens> + <rels>)/<rels> minimally.
pub fn minimal_gens_modulo(
    target: &FreeModule,
    gens: &[ModuleElem],
    rels: &[ModuleElem],
) -> Result<Vec<ModuleElem>> {
    let ring = &target.ring;
    let rel_gb = if rels.is_empty() {
        None
    } else {
        Some(groebner::module_gb(target, rels)?)
    };
    let mut cur: Vec<(i64, ModuleElem)> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let g = g.nf_ideal(ring);
        if g.is_zero() {
            continue;
        }
        if let Some(gb) = &rel_gb {
            if gb.contains(&g) {
                continue;
            }
        }
        let d = g
            .homogeneous_degree(&target.shifts)
            .ok_or(Error::Inhomogeneous { index: j })?;
        cur.push((d, g));
    }
    cur.sort_by_key(|(d, _)| std::cmp::Reverse(*d));
    'scan: loop {
        for i in 0..cur.len() {
            let mut others: Vec<ModuleElem> = cur
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, (_, g))| g.clone())
                .collect();
            others.extend(rels.iter().cloned());
            let gb = groebner::module_gb(target, &others)?;
            if gb.contains(&cur[i].1) {
                cur.remove(i);
                continue 'scan;
            }
        }
        break;
    }
    cur.sort_by_key(|(d, _)| *d);
    Ok(cur.into_iter().map(|(_, g)| g).collect())
}

/// Remove unit entries from a presentation by the usual column reduction
/// and row/column deletion, then prune redundant relations.
fn minimalize_matrix(pres: &Matrix) -> Result<Matrix> {
    let ring = pres.target.ring.clone();
    let field = *ring.field();
    let mut tgt_shifts = pres.target.shifts.clone();
    let mut cols: Vec<ModuleElem> = pres.cols.iter().map(|c| c.nf_ideal(&ring)).collect();
    let mut src_shifts = pres.source.shifts.clone();

    'pivot: loop {
        for j in 0..cols.len() {
            for i in 0..tgt_shifts.len() {
                if let Some(u) = cols[j].comps[i].as_unit() {
                    let inv = field.inv(u);
                    let pivot = cols[j].clone();
                    for (j2, col) in cols.iter_mut().enumerate() {
                        if j2 == j || col.comps[i].is_zero() {
                            continue;
                        }
                        let q = col.comps[i].scale(inv, &field);
                        *col = col.sub(&pivot.mul_poly(&q, &ring), &ring).nf_ideal(&ring);
                    }
                    cols.remove(j);
                    src_shifts.remove(j);
                    for col in cols.iter_mut() {
                        col.comps.remove(i);
                    }
                    tgt_shifts.remove(i);
                    continue 'pivot;
                }
            }
        }
        break;
    }

    let target = FreeModule::new(ring.clone(), tgt_shifts);
    let kept = minimal_gens(&target, &cols)?;
    let shifts: Vec<i64> = kept
        .iter()
        .map(|c| c.homogeneous_degree(&target.shifts).unwrap())
        .collect();
    Matrix::new(FreeModule::new(ring, shifts), target, kept)
}

#[derive(Debug)]
struct ResCache {
    diffs: Vec<Matrix>,
    complete: bool,
}

#[derive(Debug)]
struct ModuleData {
    pres: Matrix,
    is_minimal: bool,
    gb: OnceLock<GBasis>,
    minimal: OnceLock<PresentedModule>,
    resolution: Mutex<Option<ResCache>>,
}

/// A cokernel presentation F_1 -> F_0 -> M -> 0. Cheap to clone; derived
/// data (Groebner basis of the relations, minimal presentation, resolution)
/// is cached behind the shared handle.
#[derive(Debug, Clone)]
pub struct PresentedModule(Arc<ModuleData>);

/// A partial minimal free resolution: diffs[0] is the minimal presentation
/// F_1 -> F_0 and diffs[i]: F_{i+1} -> F_i. When `complete`, the last
/// computed kernel was zero and the resolution is the whole of it.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub diffs: Vec<Matrix>,
    pub complete: bool,
}

impl Resolution {
    /// Shifts of F_i, empty once the resolution has ended.
    pub fn shifts(&self, i: usize) -> &[i64] {
        if i == 0 {
            &self.diffs[0].target.shifts
        } else if i <= self.diffs.len() {
            &self.diffs[i - 1].source.shifts
        } else {
            &[]
        }
    }

    pub fn rank(&self, i: usize) -> usize {
        self.shifts(i).len()
    }

    /// Projective dimension, available once the resolution is complete.
    pub fn pd(&self) -> Option<usize> {
        if !self.complete {
            return None;
        }
        for i in (0..=self.diffs.len()).rev() {
            if self.rank(i) > 0 {
                return Some(i);
            }
        }
        Some(0)
    }
}

impl PresentedModule {
    fn from_data(pres: Matrix, is_minimal: bool) -> Self {
        PresentedModule(Arc::new(ModuleData {
            pres,
            is_minimal,
            gb: OnceLock::new(),
            minimal: OnceLock::new(),
            resolution: Mutex::new(None),
        }))
    }

    pub fn from_matrix(pres: Matrix) -> Self {
        let ring = pres.target.ring.clone();
        Self::from_data(pres.nf_ideal(&ring), false)
    }

    /// The free module itself, with an empty relation matrix.
    pub fn free(free: FreeModule) -> Self {
        let ring = free.ring.clone();
        let pres = Matrix::zero_map(FreeModule::zero(ring), free);
        Self::from_data(pres, true)
    }

    /// R/(f_1,...,f_s) as a cyclic module.
    pub fn cyclic(ring: &Ring, gens: &[Polynomial]) -> Result<Self> {
        let rows = vec![gens.to_vec()];
        let pres = Matrix::from_rows(ring, vec![0], rows)?;
        Ok(Self::from_matrix(pres))
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.0.pres.target.ring
    }

    #[inline]
    pub fn pres(&self) -> &Matrix {
        &self.0.pres
    }

    /// The free module surjecting onto M.
    #[inline]
    pub fn cover(&self) -> &FreeModule {
        &self.0.pres.target
    }

    pub fn gb(&self) -> &GBasis {
        self.0
            .gb
            .get_or_init(|| groebner::module_gb(&self.0.pres.target, &self.0.pres.cols).expect(
                "relation module Groebner basis within degree cap",
            ))
    }

    /// Canonical representative of an element of M given in cover
    /// coordinates.
    pub fn nf(&self, v: &ModuleElem) -> ModuleElem {
        self.gb().normal_form(v)
    }

    pub fn elem_is_zero(&self, v: &ModuleElem) -> bool {
        self.nf(v).is_zero()
    }

    /// The minimal presentation (no unit entries, irredundant relations).
    pub fn minimal(&self) -> &PresentedModule {
        if self.0.is_minimal {
            return self;
        }
        self.0.minimal.get_or_init(|| {
            let m = minimalize_matrix(&self.0.pres).expect("minimalization within degree cap");
            PresentedModule::from_data(m, true)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.minimal().cover().rank() == 0
    }

    /// Number and degrees of minimal generators.
    pub fn min_gen_shifts(&self) -> Vec<i64> {
        self.minimal().cover().shifts.clone()
    }

    /// M(d): all degrees drop by d.
    pub fn twist(&self, d: i64) -> PresentedModule {
        let p = &self.0.pres;
        let shift = |f: &FreeModule| {
            FreeModule::new(f.ring.clone(), f.shifts.iter().map(|s| s - d).collect())
        };
        PresentedModule::from_data(
            Matrix {
                source: shift(&p.source),
                target: shift(&p.target),
                cols: p.cols.clone(),
            },
            self.0.is_minimal,
        )
    }

    /// The same module viewed over the ambient polynomial ring: the
    /// relations plus a copy of the defining ideal in every component.
    pub fn to_ambient(&self) -> PresentedModule {
        let ring = self.ring();
        if ring.is_ambient() {
            return self.clone();
        }
        let ambient = ring.ambient();
        let target = FreeModule::new(ambient.clone(), self.cover().shifts.clone());
        let mut cols: Vec<ModuleElem> = self.0.pres.cols.clone();
        let mut shifts = self.0.pres.source.shifts.clone();
        for h in ring.ideal_gb() {
            let d = h.homogeneous_degree().unwrap() as i64;
            for i in 0..target.rank() {
                let mut e = ModuleElem::zero(target.rank());
                e.comps[i] = h.clone();
                cols.push(e);
                shifts.push(d + target.shifts[i]);
            }
        }
        let pres = Matrix::new(FreeModule::new(ambient, shifts), target, cols)
            .expect("ambient presentation stays graded");
        PresentedModule::from_matrix(pres)
    }

    /// Extend the cached minimal free resolution until F_len is known (or
    /// the resolution ends sooner).
    pub fn resolve(&self, len: usize) -> Result<Resolution> {
        let min = self.minimal();
        let mut guard = min.0.resolution.lock().unwrap();
        if guard.is_none() {
            *guard = Some(ResCache {
                diffs: vec![min.0.pres.clone()],
                complete: min.0.pres.source.rank() == 0,
            });
        }
        let cache = guard.as_mut().unwrap();
        while !cache.complete && cache.diffs.len() < len {
            let last = cache.diffs.last().unwrap();
            let ker = groebner::kernel_of_matrix(last)?;
            let gens = minimal_gens(&last.source, &ker.cols)?;
            if gens.is_empty() {
                cache.complete = true;
                break;
            }
            let shifts: Vec<i64> = gens
                .iter()
                .map(|g| g.homogeneous_degree(&last.source.shifts).unwrap())
                .collect();
            let ring = last.source.ring.clone();
            let d = Matrix::new(FreeModule::new(ring, shifts), last.source.clone(), gens)?;
            if !last.compose(&d).is_zero() {
                return Err(Error::Invariant(
                    "resolution differentials do not compose to zero".into(),
                ));
            }
            cache.diffs.push(d);
        }
        // hand back only what was asked for: the cache may have been
        // extended further by an earlier, deeper request
        let keep = len.max(1).min(cache.diffs.len());
        Ok(Resolution {
            diffs: cache.diffs[..keep].to_vec(),
            complete: cache.complete && cache.diffs.len() <= keep,
        })
    }
}

/// The module (<gens> + <rels>)/<rels> inside a quotient of the free module
/// `target`; `rels` need not be contained in the span of `gens`.
pub fn subquotient(
    target: &FreeModule,
    gens: &[ModuleElem],
    rels: &[ModuleElem],
) -> Result<PresentedModule> {
    let ring = target.ring.clone();
    let mut u_shifts = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        let g = g.nf_ideal(&ring);
        let d = if g.is_zero() {
            0
        } else {
            g.homogeneous_degree(&target.shifts)
                .ok_or(Error::Inhomogeneous { index: j })?
        };
        u_shifts.push(d);
    }
    let u = Matrix::new(
        FreeModule::new(ring.clone(), u_shifts),
        target.clone(),
        gens.iter().map(|g| g.nf_ideal(&ring)).collect(),
    )?;
    let mut b_cols = Vec::new();
    let mut b_shifts = Vec::new();
    for (j, r) in rels.iter().enumerate() {
        let r = r.nf_ideal(&ring);
        if r.is_zero() {
            continue;
        }
        b_shifts.push(
            r.homogeneous_degree(&target.shifts)
                .ok_or(Error::Inhomogeneous { index: j })?,
        );
        b_cols.push(r);
    }
    let b = Matrix::new(FreeModule::new(ring.clone(), b_shifts), target.clone(), b_cols)?;
    let ker = groebner::kernel_of_matrix(&u.hcat(&b))?;
    let n = u.ncols();
    let rel_cols: Vec<ModuleElem> = ker
        .cols
        .iter()
        .map(|c| ModuleElem {
            comps: c.comps[..n].to_vec(),
        })
        .filter(|c| !c.is_zero())
        .collect();
    let shifts: Vec<i64> = rel_cols
        .iter()
        .map(|c| c.homogeneous_degree(&u.source.shifts).unwrap())
        .collect();
    let pres = Matrix::new(
        FreeModule::new(ring, shifts),
        u.source.clone(),
        rel_cols,
    )?;
    Ok(PresentedModule::from_matrix(pres))
}

/// A map of presented modules, given on the free covers.
#[derive(Debug, Clone)]
pub struct Morphism {
    pub source: PresentedModule,
    pub target: PresentedModule,
    pub map: Matrix,
}

impl Morphism {
    pub fn new(source: PresentedModule, target: PresentedModule, map: Matrix) -> Result<Self> {
        source.ring().check_same(target.ring())?;
        let m = Morphism {
            source,
            target,
            map,
        };
        if !m.is_well_defined()? {
            return Err(Error::Invariant(
                "map does not send relations into relations".into(),
            ));
        }
        Ok(m)
    }

    pub fn is_well_defined(&self) -> Result<bool> {
        let gb = self.target.gb();
        for col in &self.source.pres().cols {
            let img = self.map.apply(col, self.source.ring());
            if !gb.contains(&img) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn kernel(&self) -> Result<PresentedModule> {
        let combined = self.map.hcat(self.target.pres());
        let ker = groebner::kernel_of_matrix(&combined)?;
        let n = self.map.ncols();
        let gens: Vec<ModuleElem> = ker
            .cols
            .iter()
            .map(|c| ModuleElem {
                comps: c.comps[..n].to_vec(),
            })
            .filter(|c| !c.is_zero())
            .collect();
        subquotient(
            &self.map.source,
            &gens,
            &self.source.pres().cols,
        )
    }

    pub fn image(&self) -> Result<PresentedModule> {
        subquotient(&self.map.target, &self.map.cols, &self.target.pres().cols)
    }

    pub fn cokernel(&self) -> PresentedModule {
        PresentedModule::from_matrix(self.target.pres().hcat(&self.map))
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.is_zero())
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_zero()
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_surjective() && self.is_injective()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;

    fn s2() -> Ring {
        Ring::polynomial_ring(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()])
            .unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    #[test]
    fn hypersurface_quotient_resolves() {
        // R/(x) over F_101[x,y]: 0 -> R(-1) -> R -> 0
        let r = s2();
        let m = PresentedModule::cyclic(&r, &[p(&[1, 0])]).unwrap();
        let res = m.resolve(4).unwrap();
        assert!(res.complete);
        assert_eq!(res.pd(), Some(1));
        assert_eq!(res.shifts(0), &[0]);
        assert_eq!(res.shifts(1), &[1]);
    }

    #[test]
    fn koszul_resolution_of_the_residue_field() {
        let r = s2();
        let k = PresentedModule::cyclic(&r, &[p(&[1, 0]), p(&[0, 1])]).unwrap();
        let res = k.resolve(5).unwrap();
        assert!(res.complete);
        assert_eq!(res.pd(), Some(2));
        assert_eq!(res.shifts(1), &[1, 1]);
        assert_eq!(res.shifts(2), &[2]);
    }

    #[test]
    fn unit_entry_collapses_to_zero() {
        // coker [x 1] = 0: the second relation makes the generator redundant
        let r = s2();
        let pres = Matrix::from_rows(&r, vec![0], vec![vec![p(&[1, 0]), p(&[0, 0])]]).unwrap();
        let m = PresentedModule::from_matrix(pres);
        assert!(m.is_zero());
    }

    #[test]
    fn residue_field_over_hypersurface_is_periodic() {
        // k over F_101[x,y]/(xy): betti numbers 1,2,2,2,...
        let r = s2().quotient_by(vec![p(&[1, 1])]).unwrap();
        let k = PresentedModule::cyclic(&r, &[p(&[1, 0]), p(&[0, 1])]).unwrap();
        let res = k.resolve(4).unwrap();
        assert!(!res.complete);
        assert_eq!(res.rank(0), 1);
        assert_eq!(res.rank(1), 2);
        assert_eq!(res.rank(2), 2);
        assert_eq!(res.rank(3), 2);
        assert_eq!(res.rank(4), 2);
    }

    #[test]
    fn multiplication_map_kernel_and_cokernel() {
        // x: R -> R over R = F_101[x,y]/(xy) has kernel (y) and cokernel R/(x)
        let r = s2().quotient_by(vec![p(&[1, 1])]).unwrap();
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        let shifted = PresentedModule::free(FreeModule::new(r.clone(), vec![1]));
        let map = Matrix::new(
            FreeModule::new(r.clone(), vec![1]),
            FreeModule::new(r.clone(), vec![0]),
            vec![ModuleElem {
                comps: vec![p(&[1, 0])],
            }],
        )
        .unwrap();
        let f = Morphism::new(shifted, free, map).unwrap();
        let ker = f.kernel().unwrap();
        assert_eq!(ker.min_gen_shifts(), vec![2]);
        assert!(!ker.is_zero());
        let coker = f.cokernel();
        assert_eq!(coker.min_gen_shifts(), vec![0]);
        assert!(!coker.is_zero());
        assert!(!f.is_injective().unwrap());
        assert!(!f.is_surjective());
    }
}
