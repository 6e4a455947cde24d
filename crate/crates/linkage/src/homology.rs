//! Hom, Ext, Tor, tensor products, duals, annihilators and trace ideals.
//!
//! Everything reduces to three primitives: kernels of graded matrices,
//! subquotients, and block matrices acting on finite direct sums of
//! (twisted) copies of a presented module.

use crate::error::Result;
use crate::free::{FreeModule, Matrix, ModuleElem};
use crate::groebner;
use crate::module::{minimal_gens, subquotient, Morphism, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// The direct sum of copies of N, one per offset, with the cover of copy l
/// twisted by offsets[l]. Returns the big cover and its relation matrix.
fn sum_of_copies(n: &PresentedModule, offsets: &[i64]) -> (FreeModule, Matrix) {
    let ring = n.ring().clone();
    let nsh = &n.cover().shifts;
    let rank = nsh.len();
    let mut shifts = Vec::with_capacity(offsets.len() * rank);
    for off in offsets {
        for s in nsh {
            shifts.push(s + off);
        }
    }
    let cover = FreeModule::new(ring.clone(), shifts);
    let mut rel_cols = Vec::new();
    let mut rel_shifts = Vec::new();
    for (l, off) in offsets.iter().enumerate() {
        for (c, s) in n
            .pres()
            .cols
            .iter()
            .zip(&n.pres().source.shifts)
        {
            let mut big = ModuleElem::zero(cover.rank());
            for (k, p) in c.comps.iter().enumerate() {
                big.comps[l * rank + k] = p.clone();
            }
            rel_cols.push(big);
            rel_shifts.push(s + off);
        }
    }
    let rels = Matrix::new(
        FreeModule::new(ring, rel_shifts),
        cover.clone(),
        rel_cols,
    )
    .expect("copied relations stay graded");
    (cover, rels)
}

/// Matrix between two such sums acting as scal(rb,cb) times the identity
/// of N's cover on each block.
fn block_scalar(
    ring: &Ring,
    n_rank: usize,
    source: &FreeModule,
    target: &FreeModule,
    col_blocks: usize,
    row_blocks: usize,
    scal: impl Fn(usize, usize) -> Polynomial,
) -> Matrix {
    let mut cols = Vec::with_capacity(col_blocks * n_rank);
    for cb in 0..col_blocks {
        for k in 0..n_rank {
            let mut col = ModuleElem::zero(target.rank());
            for rb in 0..row_blocks {
                let p = ring.nf_ideal(&scal(rb, cb));
                if !p.is_zero() {
                    col.comps[rb * n_rank + k] = p;
                }
            }
            cols.push(col);
        }
    }
    Matrix::new(source.clone(), target.clone(), cols).expect("block matrix stays graded")
}

/// Generators x of the cover of `map`'s source with map(x) in the span of
/// the columns of `modulo` (both maps into the same free module).
fn lift_kernel(map: &Matrix, modulo: &Matrix) -> Result<Vec<ModuleElem>> {
    let combined = map.hcat(modulo);
    let ker = groebner::kernel_of_matrix(&combined)?;
    let n = map.ncols();
    Ok(ker
        .cols
        .iter()
        .map(|c| ModuleElem {
            comps: c.comps[..n].to_vec(),
        })
        .filter(|c| !c.is_zero())
        .collect())
}

fn zero_module(ring: &Ring) -> PresentedModule {
    PresentedModule::free(FreeModule::zero(ring.clone()))
}

/// Hom(M, N) along with the chosen generators realized as cover-level
/// matrices F0(M) -> F0(N); reps[g] has source F0(M) twisted so the map is
/// degree zero onto its column degrees.
#[derive(Debug, Clone)]
pub struct HomData {
    pub module: PresentedModule,
    pub reps: Vec<Matrix>,
}

/// Core Ext computation; i = 0 gives Hom. Returns the module together with
/// its generators as elements of the cover of Hom(F_i, N).
fn ext_with_gens(
    m: &PresentedModule,
    n: &PresentedModule,
    i: usize,
) -> Result<(PresentedModule, Vec<ModuleElem>, FreeModule)> {
    let ring = m.ring().clone();
    ring.check_same(n.ring())?;
    let mm = m.minimal();
    let res = mm.resolve(i + 1)?;
    let sh_i: Vec<i64> = res.shifts(i).to_vec();
    let n_rank = n.cover().rank();
    if sh_i.is_empty() || n_rank == 0 {
        return Ok((
            zero_module(&ring),
            Vec::new(),
            FreeModule::zero(ring.clone()),
        ));
    }
    let off_i: Vec<i64> = sh_i.iter().map(|s| -s).collect();
    let (c_i, r_i) = sum_of_copies(n, &off_i);

    let sh_next: Vec<i64> = res.shifts(i + 1).to_vec();
    let gens: Vec<ModuleElem> = if sh_next.is_empty() {
        (0..c_i.rank()).map(|t| c_i.basis_elem(t)).collect()
    } else {
        let off_next: Vec<i64> = sh_next.iter().map(|s| -s).collect();
        let (c_next, r_next) = sum_of_copies(n, &off_next);
        let d_next = &res.diffs[i]; // F_{i+1} -> F_i
        let d_star = block_scalar(
            &ring,
            n_rank,
            &c_i,
            &c_next,
            sh_i.len(),
            sh_next.len(),
            |j, l| d_next.entry(l, j).clone(),
        );
        lift_kernel(&d_star, &r_next)?
    };

    let mut rels: Vec<ModuleElem> = r_i.cols.clone();
    if i >= 1 {
        let sh_prev: Vec<i64> = res.shifts(i - 1).to_vec();
        if !sh_prev.is_empty() {
            let off_prev: Vec<i64> = sh_prev.iter().map(|s| -s).collect();
            let (c_prev, _) = sum_of_copies(n, &off_prev);
            let d_i = &res.diffs[i - 1]; // F_i -> F_{i-1}
            let prev_star = block_scalar(
                &ring,
                n_rank,
                &c_prev,
                &c_i,
                sh_prev.len(),
                sh_i.len(),
                |j, l| d_i.entry(l, j).clone(),
            );
            rels.extend(prev_star.cols);
        }
    }
    // prune to a minimal generating set so that the module's cover stays
    // in bijection with the returned generators
    let gens = crate::module::minimal_gens_modulo(&c_i, &gens, &rels)?;
    let module = subquotient(&c_i, &gens, &rels)?;
    Ok((module, gens, c_i))
}

pub fn ext(m: &PresentedModule, n: &PresentedModule, i: usize) -> Result<PresentedModule> {
    Ok(ext_with_gens(m, n, i)?.0)
}

pub fn hom(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    ext(m, n, 0)
}

/// Hom(M, N) with each generator materialized as a cover-level matrix.
pub fn hom_with_data(m: &PresentedModule, n: &PresentedModule) -> Result<HomData> {
    let (module, gens, cover) = ext_with_gens(m, n, 0)?;
    let ring = m.ring().clone();
    let msh = &m.minimal().cover().shifts;
    let n_rank = n.cover().rank();
    let mut reps = Vec::with_capacity(gens.len());
    for u in &gens {
        let d = u.homogeneous_degree(&cover.shifts).unwrap_or(0);
        let src = FreeModule::new(ring.clone(), msh.iter().map(|a| a + d).collect());
        let cols: Vec<ModuleElem> = (0..msh.len())
            .map(|l| ModuleElem {
                comps: (0..n_rank)
                    .map(|k| u.comps[l * n_rank + k].clone())
                    .collect(),
            })
            .collect();
        reps.push(
            Matrix::new(src, n.cover().clone(), cols).expect("hom generator stays graded"),
        );
    }
    Ok(HomData { module, reps })
}

/// The R-dual M* = Hom(M, R), with its generators as functionals on the
/// minimal generators of M (one component per generator).
pub fn dual_with_reps(m: &PresentedModule) -> Result<(PresentedModule, Vec<ModuleElem>)> {
    let ring = m.ring().clone();
    let r_free = PresentedModule::free(FreeModule::new(ring, vec![0]));
    let data = hom_with_data(m, &r_free)?;
    let reps = data
        .reps
        .iter()
        .map(|rep| ModuleElem {
            comps: rep.cols.iter().map(|c| c.comps[0].clone()).collect(),
        })
        .collect();
    Ok((data.module, reps))
}

pub fn dual(m: &PresentedModule) -> Result<PresentedModule> {
    Ok(dual_with_reps(m)?.0)
}

/// Coordinates of `w` over `gens`, working modulo the span of `rels`.
fn express_modulo(
    cover: &FreeModule,
    gens: &[ModuleElem],
    rels: &[ModuleElem],
    w: &ModuleElem,
) -> Result<Option<Vec<Polynomial>>> {
    let mut all = gens.to_vec();
    all.extend(rels.iter().cloned());
    let gb = groebner::module_gb(cover, &all)?;
    Ok(gb.express(w).map(|mut c| {
        c.truncate(gens.len());
        c
    }))
}

/// The natural map M -> Hom(Hom(M,K),K) evaluated on the minimal
/// generators of M.
pub fn eval_into_bidual(m: &PresentedModule, k: &PresentedModule) -> Result<Morphism> {
    let ring = m.ring().clone();
    let mm = m.minimal().clone();
    let h1 = hom_with_data(&mm, k)?;
    let h2 = hom_with_data(&h1.module, k)?;
    let msh = mm.cover().shifts.clone();
    if h1.module.cover().rank() == 0 || h2.module.cover().rank() == 0 {
        let map = Matrix::zero_map(mm.cover().clone(), h2.module.cover().clone());
        return Morphism::new(mm, h2.module, map);
    }
    let k_rank = k.cover().rank();
    let d1: Vec<i64> = h1.module.cover().shifts.clone();
    let offsets: Vec<i64> = d1.iter().map(|d| -d).collect();
    let (big, rels) = sum_of_copies(k, &offsets);
    // generators of h2 as elements of `big`, rebuilt from their matrices
    let gens2: Vec<ModuleElem> = h2
        .reps
        .iter()
        .map(|rep| {
            let mut u = ModuleElem::zero(big.rank());
            for j in 0..d1.len() {
                for kk in 0..k_rank {
                    u.comps[j * k_rank + kk] = rep.cols[j].comps[kk].clone();
                }
            }
            u
        })
        .collect();
    let mut cols = Vec::with_capacity(msh.len());
    for i in 0..msh.len() {
        let mut w = ModuleElem::zero(big.rank());
        for (j, rep) in h1.reps.iter().enumerate() {
            for kk in 0..k_rank {
                w.comps[j * k_rank + kk] = rep.cols[i].comps[kk].clone();
            }
        }
        let coords = express_modulo(&big, &gens2, &rels.cols, &w)?.ok_or_else(|| {
            crate::error::Error::Invariant("evaluation image escapes the bidual".into())
        })?;
        cols.push(ModuleElem { comps: coords });
    }
    let map = Matrix::new(
        FreeModule::new(ring, msh),
        h2.module.cover().clone(),
        cols,
    )?;
    Morphism::new(mm, h2.module, map)
}

/// The homothety map R -> Hom(K, K).
pub fn homothety_map(k: &PresentedModule) -> Result<Morphism> {
    let ring = k.ring().clone();
    let km = k.minimal().clone();
    let h = hom_with_data(&km, &km)?;
    let r_free = PresentedModule::free(FreeModule::new(ring.clone(), vec![0]));
    let rank = km.cover().rank();
    if rank == 0 {
        let map = Matrix::zero_map(
            FreeModule::new(ring, vec![0]),
            h.module.cover().clone(),
        );
        return Morphism::new(r_free, h.module, map);
    }
    let offsets: Vec<i64> = km.cover().shifts.iter().map(|s| -s).collect();
    let (big, rels) = sum_of_copies(&km, &offsets);
    let gens: Vec<ModuleElem> = h
        .reps
        .iter()
        .map(|rep| {
            let mut u = ModuleElem::zero(big.rank());
            for l in 0..rank {
                for kk in 0..rank {
                    u.comps[l * rank + kk] = rep.cols[l].comps[kk].clone();
                }
            }
            u
        })
        .collect();
    let mut w = ModuleElem::zero(big.rank());
    for l in 0..rank {
        w.comps[l * rank + l] = Polynomial::constant(ring.field(), 1, ring.nvars());
    }
    let coords = express_modulo(&big, &gens, &rels.cols, &w)?.ok_or_else(|| {
        crate::error::Error::Invariant("identity not visible in Hom(K,K)".into())
    })?;
    let map = Matrix::new(
        FreeModule::new(ring, vec![0]),
        h.module.cover().clone(),
        vec![ModuleElem { comps: coords }],
    )?;
    Morphism::new(r_free, h.module, map)
}

/// Total K-reflexivity check through the probe bound: all positive Ext of
/// M and of Hom(M,K) into K vanish and the evaluation map is bijective.
pub fn is_k_reflexive(m: &PresentedModule, k: &PresentedModule, bound: u32) -> Result<bool> {
    for i in 1..=bound as usize {
        if !ext(m, k, i)?.is_zero() {
            return Ok(false);
        }
    }
    let mk = hom(m, k)?;
    for i in 1..=bound as usize {
        if !ext(&mk, k, i)?.is_zero() {
            return Ok(false);
        }
    }
    eval_into_bidual(m, k)?.is_isomorphism()
}

/// M tensor N presented over the cover of M tensor the cover of N.
pub fn tensor(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    tor(m, n, 0)
}

pub fn tor(m: &PresentedModule, n: &PresentedModule, i: usize) -> Result<PresentedModule> {
    let ring = m.ring().clone();
    ring.check_same(n.ring())?;
    let mm = m.minimal();
    let res = mm.resolve(i + 1)?;
    let sh_i: Vec<i64> = res.shifts(i).to_vec();
    let n_rank = n.cover().rank();
    if sh_i.is_empty() || n_rank == 0 {
        return Ok(zero_module(&ring));
    }
    let (t_i, r_i) = sum_of_copies(n, &sh_i);

    let gens: Vec<ModuleElem> = if i == 0 {
        (0..t_i.rank()).map(|t| t_i.basis_elem(t)).collect()
    } else {
        let sh_prev: Vec<i64> = res.shifts(i - 1).to_vec();
        if sh_prev.is_empty() {
            (0..t_i.rank()).map(|t| t_i.basis_elem(t)).collect()
        } else {
            let (t_prev, r_prev) = sum_of_copies(n, &sh_prev);
            let d_i = &res.diffs[i - 1]; // F_i -> F_{i-1}
            let d_tensor = block_scalar(
                &ring,
                n_rank,
                &t_i,
                &t_prev,
                sh_i.len(),
                sh_prev.len(),
                |rb, cb| d_i.entry(rb, cb).clone(),
            );
            lift_kernel(&d_tensor, &r_prev)?
        }
    };

    let mut rels: Vec<ModuleElem> = r_i.cols.clone();
    let sh_next: Vec<i64> = res.shifts(i + 1).to_vec();
    if !sh_next.is_empty() {
        let (t_next, _) = sum_of_copies(n, &sh_next);
        let d_next = &res.diffs[i]; // F_{i+1} -> F_i
        let next_tensor = block_scalar(
            &ring,
            n_rank,
            &t_next,
            &t_i,
            sh_next.len(),
            sh_i.len(),
            |rb, cb| d_next.entry(rb, cb).clone(),
        );
        rels.extend(next_tensor.cols);
    }
    subquotient(&t_i, &gens, &rels)
}

/// Minimal generators of the annihilator ideal of M.
pub fn annihilator(m: &PresentedModule) -> Result<Vec<Polynomial>> {
    let ring = m.ring().clone();
    let mm = m.minimal();
    let r = mm.cover().rank();
    if r == 0 {
        return Ok(vec![Polynomial::constant(ring.field(), 1, ring.nvars())]);
    }
    // the map R -> sum_i M(a_i), f -> (f g_1, ..., f g_r), has kernel ann M
    let offsets: Vec<i64> = mm.cover().shifts.iter().map(|s| -s).collect();
    let (big, rels) = sum_of_copies(mm, &offsets);
    let mut v = ModuleElem::zero(big.rank());
    for i in 0..r {
        v.comps[i * r + i] = Polynomial::constant(ring.field(), 1, ring.nvars());
    }
    let map = Matrix::new(FreeModule::new(ring.clone(), vec![0]), big, vec![v])
        .expect("diagonal embedding is degree zero");
    let gens = lift_kernel(&map, &rels)?;
    let one = FreeModule::new(ring.clone(), vec![0]);
    let wrapped: Vec<ModuleElem> = gens;
    let pruned = minimal_gens(&one, &wrapped)?;
    Ok(pruned.into_iter().map(|e| e.comps.into_iter().next().unwrap()).collect())
}

/// Minimal generators of the trace ideal: the ideal generated by all
/// values of all functionals on M.
pub fn trace_ideal(m: &PresentedModule) -> Result<Vec<Polynomial>> {
    let ring = m.ring().clone();
    let (_, reps) = dual_with_reps(m.minimal())?;
    let one = FreeModule::new(ring.clone(), vec![0]);
    let gens: Vec<ModuleElem> = reps
        .iter()
        .flat_map(|rep| rep.comps.iter())
        .map(|p| ModuleElem {
            comps: vec![p.clone()],
        })
        .collect();
    let pruned = minimal_gens(&one, &gens)?;
    Ok(pruned.into_iter().map(|e| e.comps.into_iter().next().unwrap()).collect())
}

/// Whether an ideal given by generators is the unit ideal of R.
pub fn ideal_is_all_of_r(ring: &Ring, gens: &[Polynomial]) -> Result<bool> {
    let one = FreeModule::new(ring.clone(), vec![0]);
    let elems: Vec<ModuleElem> = gens
        .iter()
        .map(|p| ModuleElem {
            comps: vec![p.clone()],
        })
        .collect();
    let gb = groebner::module_gb(&one, &elems)?;
    Ok(gb.contains(&ModuleElem {
        comps: vec![Polynomial::constant(ring.field(), 1, ring.nvars())],
    }))
}

/// A nonzero module is stable when it has no free direct summand, which
/// over the graded-local ring is detected by the trace ideal being proper.
pub fn is_stable(m: &PresentedModule) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let tr = trace_ideal(m)?;
    Ok(!ideal_is_all_of_r(m.ring(), &tr)?)
}

/// Split off a maximal free direct summand: returns the stable part and
/// the shifts of the free summands removed.
pub fn split_free_summands(m: &PresentedModule) -> Result<(PresentedModule, Vec<i64>)> {
    let ring = m.ring().clone();
    let mut cur = m.minimal().clone();
    let mut free_shifts = Vec::new();
    'split: loop {
        if cur.cover().rank() == 0 {
            break;
        }
        let (_, reps) = dual_with_reps(&cur)?;
        for rep in &reps {
            for (i, p) in rep.comps.iter().enumerate() {
                if ring.nf_ideal(p).as_unit().is_some() {
                    // generator i generates a free summand; peel it off by
                    // deleting its row from the presentation
                    let pres = cur.pres();
                    let mut tgt = pres.target.shifts.clone();
                    free_shifts.push(tgt.remove(i));
                    let cols: Vec<ModuleElem> = pres
                        .cols
                        .iter()
                        .map(|c| {
                            let mut comps = c.comps.clone();
                            comps.remove(i);
                            ModuleElem { comps }
                        })
                        .collect();
                    let target = FreeModule::new(ring.clone(), tgt);
                    let shifts: Vec<i64> = cols
                        .iter()
                        .map(|c| {
                            c.homogeneous_degree(&target.shifts)
                                .unwrap_or(0)
                        })
                        .collect();
                    let next = Matrix::new(FreeModule::new(ring.clone(), shifts), target, cols)
                        .expect("peeled presentation stays graded");
                    cur = PresentedModule::from_matrix(next).minimal().clone();
                    continue 'split;
                }
            }
        }
        break;
    }
    free_shifts.sort();
    Ok((cur, free_shifts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::hilbert::hilbert_series;
    use crate::monomial::Monomial;

    fn s2() -> Ring {
        Ring::polynomial_ring(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()])
            .unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    fn k_module(r: &Ring) -> PresentedModule {
        PresentedModule::cyclic(r, &[p(&[1, 0]), p(&[0, 1])]).unwrap()
    }

    #[test]
    fn dual_of_torsion_over_a_domain_vanishes() {
        let r = s2();
        assert!(dual(&k_module(&r)).unwrap().is_zero());
    }

    #[test]
    fn dual_over_hypersurface() {
        // Hom(R/(x), R) = (0 : x) = (y), one generator in degree 1
        let r = s2().quotient_by(vec![p(&[1, 1])]).unwrap();
        let m = PresentedModule::cyclic(&r, &[p(&[1, 0])]).unwrap();
        let d = dual(&m).unwrap();
        assert_eq!(d.min_gen_shifts(), vec![1]);
    }

    #[test]
    fn hom_of_free_is_free() {
        let r = s2();
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        let h = hom(&free, &free).unwrap();
        assert_eq!(h.min_gen_shifts(), vec![0]);
        let res = h.resolve(2).unwrap();
        assert_eq!(res.pd(), Some(0));
    }

    #[test]
    fn ext_of_residue_field_into_the_ring() {
        let r = s2();
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        let k = k_module(&r);
        assert!(ext(&k, &free, 0).unwrap().is_zero());
        assert!(ext(&k, &free, 1).unwrap().is_zero());
        let e2 = ext(&k, &free, 2).unwrap();
        assert_eq!(e2.min_gen_shifts(), vec![-2]);
        let hs = hilbert_series(&e2).unwrap();
        assert_eq!(hs.coeff(-2), 1);
        assert_eq!(hs.coeff(-1), 0);
        assert!(ext(&k, &free, 3).unwrap().is_zero());
    }

    #[test]
    fn tensor_of_transverse_hypersurfaces() {
        let r = s2();
        let a = PresentedModule::cyclic(&r, &[p(&[1, 0])]).unwrap();
        let b = PresentedModule::cyclic(&r, &[p(&[0, 1])]).unwrap();
        let t = tensor(&a, &b).unwrap();
        let hs = hilbert_series(&t).unwrap();
        assert_eq!(hs.coeff(0), 1);
        assert_eq!(hs.coeff(1), 0);
        // transverse intersection: no torsion
        assert!(tor(&a, &b, 1).unwrap().is_zero());
    }

    #[test]
    fn tor_one_of_the_residue_field_with_itself() {
        let r = s2();
        let k = k_module(&r);
        let t1 = tor(&k, &k, 1).unwrap();
        assert_eq!(t1.min_gen_shifts(), vec![1, 1]);
        let t2 = tor(&k, &k, 2).unwrap();
        assert_eq!(t2.min_gen_shifts(), vec![2]);
    }

    #[test]
    fn annihilator_of_cyclic_module() {
        let r = s2();
        let ann = annihilator(&k_module(&r)).unwrap();
        assert_eq!(ann, vec![p(&[1, 0]), p(&[0, 1])]);
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(annihilator(&free).unwrap().is_empty());
    }

    #[test]
    fn bidual_evaluation() {
        let r = s2();
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(eval_into_bidual(&free, &free).unwrap().is_isomorphism().unwrap());
        // torsion dies under double duals over a domain
        let k = k_module(&r);
        let ev = eval_into_bidual(&k, &free).unwrap();
        assert!(!ev.is_isomorphism().unwrap());

        // R/(x) over R = F_101[x,y]/(xy) is totally reflexive
        let rq = s2().quotient_by(vec![p(&[1, 1])]).unwrap();
        let free_q = PresentedModule::free(FreeModule::new(rq.clone(), vec![0]));
        let mx = PresentedModule::cyclic(&rq, &[p(&[1, 0])]).unwrap();
        assert!(eval_into_bidual(&mx, &free_q).unwrap().is_isomorphism().unwrap());
        assert!(is_k_reflexive(&mx, &free_q, 4).unwrap());
        // while the residue field is not
        let kq = k_module(&rq);
        assert!(!is_k_reflexive(&kq, &free_q, 4).unwrap());
    }

    #[test]
    fn homothety_into_self_hom() {
        let r = s2();
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(homothety_map(&free).unwrap().is_isomorphism().unwrap());
    }

    #[test]
    fn stability_and_free_splitting() {
        let r = s2();
        let k = k_module(&r);
        assert!(is_stable(&k).unwrap());
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(!is_stable(&free).unwrap());

        // R + k: presentation with cover R^2 and relations x e2, y e2
        let pres = Matrix::from_rows(
            &r,
            vec![0, 0],
            vec![
                vec![Polynomial::zero(), Polynomial::zero()],
                vec![p(&[1, 0]), p(&[0, 1])],
            ],
        )
        .unwrap();
        let m = PresentedModule::from_matrix(pres);
        assert!(!is_stable(&m).unwrap());
        let (stable, frees) = split_free_summands(&m).unwrap();
        assert_eq!(frees, vec![0]);
        assert_eq!(stable.min_gen_shifts(), vec![0]);
        let hs = hilbert_series(&stable).unwrap();
        assert_eq!(hs.coeff(0), 1);
        assert_eq!(hs.coeff(1), 0);
    }
}
