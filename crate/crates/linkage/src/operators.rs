//! The linkage operator calculus: Auslander transpose, syzygies, the
//! lambda operator, T_k, horizontal linkage, linkage by an ideal, Serre
//! conditions and the semidualizing machinery.
//!
//! Isomorphism of modules is never decided. Claims of the form "X = Y up
//! to isomorphism" are downgraded to a congruence of Hilbert series,
//! truncated Betti tables and annihilator ideals; a match is reported as
//! consistent, never as an isomorphism.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::free::FreeModule;
use crate::hilbert::{betti_table, hilbert_series, HilbertSeries};
use crate::homology::{annihilator, ext, homothety_map, is_k_reflexive, is_stable};
use crate::invariants::{
    self, depth, dim, gdim, grade, local_cohomology, reduced_grade, ring_depth, ring_dim,
    Bounded,
};
use crate::module::PresentedModule;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Default probe bound for Ext-vanishing scans.
pub const DEFAULT_BOUND: u32 = 6;

fn r_free(ring: &Ring) -> PresentedModule {
    PresentedModule::free(FreeModule::new(ring.clone(), vec![0]))
}

/// Auslander transpose: the cokernel of the dualized minimal
/// presentation. Tr(free) = 0.
pub fn transpose(m: &PresentedModule) -> Result<PresentedModule> {
    let mm = m.minimal();
    Ok(PresentedModule::from_matrix(mm.pres().transpose())
        .minimal()
        .clone())
}

/// Omega^k M, the k-th minimal syzygy.
pub fn syzygy(m: &PresentedModule, k: usize) -> Result<PresentedModule> {
    invariants::syzygy(m, k)
}

/// lambda M = Omega Tr M.
pub fn lambda(m: &PresentedModule) -> Result<PresentedModule> {
    syzygy(&transpose(m)?, 1)
}

/// T_k M = Tr Omega^{k-1} M, for k >= 1.
pub fn t_functor(m: &PresentedModule, k: usize) -> Result<PresentedModule> {
    if k == 0 {
        return Err(Error::Usage("t_functor requires k >= 1".into()));
    }
    transpose(&syzygy(m, k - 1)?)
}

/// Horizontal linkage criterion of Martsinkovsky-Strooker: M is stable
/// and Ext^1(Tr M, R) = 0.
pub fn is_horizontally_linked(m: &PresentedModule) -> Result<bool> {
    if !is_stable(m)? {
        return Ok(false);
    }
    let ring = m.ring().clone();
    Ok(ext(&transpose(m)?, &r_free(&ring), 1)?.is_zero())
}

/// The Serre-type condition via the transpose: Ext^i(Tr M, R) = 0 for
/// 1 <= i <= k. Certified equivalent to S~_k only when gdim M is finite.
pub fn satisfies_tilde_s(m: &PresentedModule, k: u32) -> Result<bool> {
    let ring = m.ring().clone();
    let free = r_free(&ring);
    let tr = transpose(m)?;
    for i in 1..=k {
        if !ext(&tr, &free, i as usize)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hilbert series of the graded Matlis dual of H^i_m(M); the cohomology
/// itself has dimension HS.coeff(-e) in degree e.
pub fn local_cohomology_hilbert(m: &PresentedModule, i: usize) -> Result<HilbertSeries> {
    hilbert_series(&local_cohomology(m, i)?.matlis_dual)
}

/// The right-hand side of the section-4 theorem: H^i_m(lambda M) = 0 for
/// d-k+1 <= i <= d-1 where d = dim R. An empty window is trivially true.
/// Hypothesis gating (horizontal linkage, finite gdim) lives in the
/// theorem drivers.
pub fn serre_via_local_cohomology(m: &PresentedModule, k: u32) -> Result<bool> {
    let d = ring_dim(m.ring()) as i64;
    let lm = lambda(m)?;
    let mut i = d - k as i64 + 1;
    while i <= d - 1 {
        if i >= 0 && !local_cohomology(&lm, i as usize)?.is_zero() {
            return Ok(false);
        }
        i += 1;
    }
    Ok(true)
}

/// Reduced G-perfect: finite positive G-dimension equal to the reduced
/// grade.
pub fn is_reduced_g_perfect(m: &PresentedModule, bound: u32) -> Result<bool> {
    let g = gdim(m, bound)?;
    let Some(gv) = g.value() else { return Ok(false) };
    if gv == 0 {
        return Ok(false);
    }
    Ok(reduced_grade(m, bound)?.value() == Some(gv))
}

/// Congruence proxy for isomorphism claims: equal Hilbert series, equal
/// truncated Betti tables and equal (reduced Groebner bases of)
/// annihilators.
pub fn congruent(a: &PresentedModule, b: &PresentedModule) -> Result<bool> {
    a.ring().check_same(b.ring())?;
    if hilbert_series(a)? != hilbert_series(b)? {
        return Ok(false);
    }
    let len = a.ring().nvars() + 2;
    let (ra, rb) = (a.resolve(len)?, b.resolve(len)?);
    if betti_table(&ra).entries != betti_table(&rb).entries {
        return Ok(false);
    }
    let ga = crate::groebner::ideal_groebner(a.ring(), &annihilator(a)?)?;
    let gb = crate::groebner::ideal_groebner(b.ring(), &annihilator(b)?)?;
    Ok(ga == gb)
}

/// Whether every generator of `c` annihilates M.
pub fn ideal_annihilates(m: &PresentedModule, c: &[Polynomial]) -> Result<bool> {
    for f in c {
        for i in 0..m.cover().rank() {
            let v = m.cover().basis_elem(i).mul_poly(f, m.ring());
            if !m.elem_is_zero(&v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rebase M (annihilated by c) to the quotient ring R/c.
pub fn rebase_to_quotient(m: &PresentedModule, c: &[Polynomial]) -> Result<PresentedModule> {
    if !ideal_annihilates(m, c)? {
        return Err(Error::Inapplicable(
            "ideal does not annihilate the module".into(),
        ));
    }
    let q = m.ring().quotient_by(c.to_vec())?;
    Ok(invariants::reinterpret_over(&q, m.minimal()))
}

/// View a module over R/c as a module over the base ring R by adjoining
/// the generators of c as relations in every component. `killed` must
/// generate the kernel of R -> R/c.
pub fn restrict_scalars(
    m: &PresentedModule,
    base: &Ring,
    killed: &[Polynomial],
) -> Result<PresentedModule> {
    use crate::free::{Matrix, ModuleElem};
    let mm = m.minimal();
    let target = FreeModule::new(base.clone(), mm.cover().shifts.clone());
    let mut cols: Vec<ModuleElem> = mm.pres().cols.clone();
    let mut shifts = mm.pres().source.shifts.clone();
    for f in killed {
        let d = f
            .homogeneous_degree()
            .ok_or(Error::Inhomogeneous { index: 0 })? as i64;
        for i in 0..target.rank() {
            let mut e = ModuleElem::zero(target.rank());
            e.comps[i] = f.clone();
            cols.push(e);
            shifts.push(d + target.shifts[i]);
        }
    }
    let pres = Matrix::new(FreeModule::new(base.clone(), shifts), target, cols)?;
    Ok(PresentedModule::from_matrix(pres))
}

/// The link of M by the ideal c: lambda applied over R/c. c = 0 recovers
/// plain lambda.
pub fn link_via_ideal(m: &PresentedModule, c: &[Polynomial]) -> Result<PresentedModule> {
    if c.is_empty() {
        return lambda(m);
    }
    lambda(&rebase_to_quotient(m, c)?)
}

/// Linkage of M and N by the ideal c: over R/c each is congruent to the
/// lambda of the other (congruence proxy, not isomorphism).
pub fn linked_by_ideal(
    m: &PresentedModule,
    n: &PresentedModule,
    c: &[Polynomial],
) -> Result<bool> {
    let (mq, nq) = (rebase_to_quotient(m, c)?, rebase_to_quotient(n, c)?);
    Ok(congruent(&lambda(&mq)?, &nq)? && congruent(&lambda(&nq)?, &mq)?)
}

/// Outcome of the semidualizing test for a module K.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SemidualizingCheck {
    pub homothety_iso: bool,
    pub ext_vanishing: bool,
    pub ext_vanishing_bound: u32,
    pub verdict: bool,
}

/// K is semidualizing when R -> Hom(K,K) is an isomorphism and
/// Ext^i(K,K) = 0 for 0 < i <= bound (certified up to the bound).
pub fn is_semidualizing(k: &PresentedModule, bound: u32) -> Result<SemidualizingCheck> {
    let homothety_iso = homothety_map(k)?.is_isomorphism()?;
    let mut ext_vanishing = true;
    for i in 1..=bound {
        if !ext(k, k, i as usize)?.is_zero() {
            ext_vanishing = false;
            break;
        }
    }
    Ok(SemidualizingCheck {
        homothety_iso,
        ext_vanishing,
        ext_vanishing_bound: bound,
        verdict: homothety_iso && ext_vanishing,
    })
}

/// G_K-dimension zero: K-reflexive with vanishing Ext against K in both
/// directions, sampled through the bound.
pub fn gk_dim_zero(m: &PresentedModule, k: &PresentedModule, bound: u32) -> Result<bool> {
    is_k_reflexive(m, k, bound)
}

/// G_K-dimension, by the Golod formula sup { i : Ext^i(M,K) != 0 } once
/// finiteness is certified on the top syzygy.
pub fn gkd(m: &PresentedModule, k: &PresentedModule, bound: u32) -> Result<Bounded> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let mut sup = 0u32;
    for i in 1..=bound {
        if !ext(m, k, i as usize)?.is_zero() {
            sup = i;
        }
    }
    if sup == bound {
        // Ext^bound already nonzero: the reflexivity probe cannot
        // certify anything further within the bound
        return Ok(Bounded::AtLeast { bound });
    }
    if gk_dim_zero(&syzygy(m, sup as usize)?, k, bound)? {
        Ok(Bounded::UpToBound { value: sup, bound })
    } else {
        Ok(Bounded::AtLeast { bound })
    }
}

/// An ideal c is G_K-Gorenstein when R/c is G_K-perfect (grade equals
/// G_K-dimension, finite) and Ext^grade(R/c, K) is cyclic.
pub fn is_gk_gorenstein_ideal(
    ring: &Ring,
    c: &[Polynomial],
    k: &PresentedModule,
    bound: u32,
) -> Result<bool> {
    let q = PresentedModule::cyclic(ring, c)?;
    if q.is_zero() {
        return Ok(false);
    }
    let Some(g) = grade(&q)? else { return Ok(false) };
    if gkd(&q, k, bound)?.value() != Some(g) {
        return Ok(false);
    }
    let e = ext(&q, k, g as usize)?;
    Ok(!e.is_zero() && e.minimal().cover().rank() == 1)
}

/// Aggregate invariant report for a module.
#[derive(Debug, Clone, Serialize)]
pub struct LinkageReport {
    pub module: String,
    pub grade: u32,
    pub reduced_grade: Bounded,
    pub depth: u32,
    pub dim: u32,
    pub gdim: Bounded,
    pub stable: bool,
    pub horizontally_linked: bool,
    pub reduced_g_perfect: bool,
    /// Largest k <= bound with the tilde-S_k condition certified.
    pub serre: u32,
    pub bound: u32,
}

pub fn report(id: &str, m: &PresentedModule, bound: u32) -> Result<LinkageReport> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let grade = grade(m)?.ok_or(Error::ZeroModule)?;
    let rgr = reduced_grade(m, bound)?;
    let depth = depth(m)?;
    let dim = dim(m)?;
    let gdim = gdim(m, bound)?;
    let mut serre = 0u32;
    while serre < bound && satisfies_tilde_s(m, serre + 1)? {
        serre += 1;
    }
    let rep = LinkageReport {
        module: id.to_string(),
        grade,
        reduced_grade: rgr,
        depth,
        dim,
        gdim,
        stable: is_stable(m)?,
        horizontally_linked: is_horizontally_linked(m)?,
        reduced_g_perfect: is_reduced_g_perfect(m, bound)?,
        serre,
        bound,
    };
    if grade > 0 {
        if let Some(r) = rgr.value() {
            if grade > r {
                return Err(Error::Invariant(format!(
                    "grade {} exceeds reduced grade {}",
                    grade, r
                )));
            }
        }
    }
    if let Some(g) = gdim.value() {
        if g > 0 {
            if let Some(r) = rgr.value() {
                if r > g {
                    return Err(Error::Invariant(format!(
                        "reduced grade {} exceeds finite gdim {}",
                        r, g
                    )));
                }
            }
        }
        let dr = ring_depth(m.ring());
        if depth + g != dr {
            return Err(Error::Invariant(format!(
                "Auslander-Bridger violation: depth {} + gdim {} != depth R {}",
                depth, g, dr
            )));
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::Monomial;

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    fn s2() -> Ring {
        Ring::polynomial_ring(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()])
            .unwrap()
    }

    fn r_xy() -> Ring {
        s2().quotient_by(vec![p(&[1, 1])]).unwrap()
    }

    fn m_x(r: &Ring) -> PresentedModule {
        PresentedModule::cyclic(r, &[p(&[1, 0])]).unwrap()
    }

    fn k_mod(r: &Ring) -> PresentedModule {
        PresentedModule::cyclic(r, &[p(&[1, 0]), p(&[0, 1])]).unwrap()
    }

    #[test]
    fn transpose_of_a_symmetric_presentation() {
        let r = r_xy();
        let t = transpose(&m_x(&r)).unwrap();
        assert_eq!(t.cover().rank(), 1);
        assert_eq!(t.pres().ncols(), 1);
        assert_eq!(t.pres().entry(0, 0), &p(&[1, 0]));
    }

    #[test]
    fn transpose_of_free_is_zero() {
        let r = r_xy();
        let f = PresentedModule::free(FreeModule::new(r.clone(), vec![0, -1]));
        assert!(transpose(&f).unwrap().is_zero());
        assert!(t_functor(&f, 3).unwrap().is_zero());
        assert!(lambda(&f).unwrap().is_zero());
    }

    #[test]
    fn lambda_links_x_to_y() {
        let r = r_xy();
        let lm = lambda(&m_x(&r)).unwrap();
        assert_eq!(lm.cover().rank(), 1);
        assert_eq!(lm.min_gen_shifts(), vec![0]);
        assert_eq!(lm.pres().ncols(), 1);
        assert_eq!(lm.pres().entry(0, 0), &p(&[0, 1]));
        // the classical link of (x) and (y): lambda M_x is congruent to M_y
        let my = PresentedModule::cyclic(&r, &[p(&[0, 1])]).unwrap();
        assert!(congruent(&lm, &my).unwrap());
    }

    #[test]
    fn lambda_of_the_residue_field_is_free() {
        let r = r_xy();
        let lk = lambda(&k_mod(&r)).unwrap();
        assert!(!lk.is_zero());
        assert_eq!(lk.minimal().pres().ncols(), 0);
        assert_eq!(lk.min_gen_shifts(), vec![0]);
    }

    #[test]
    fn horizontal_linkage_judgements() {
        let r = r_xy();
        assert!(is_horizontally_linked(&m_x(&r)).unwrap());
        assert!(!is_horizontally_linked(&k_mod(&r)).unwrap());
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(!is_horizontally_linked(&free).unwrap());
    }

    #[test]
    fn lambda_squared_congruence_on_a_linked_module() {
        let r = r_xy();
        let m = m_x(&r).minimal().clone();
        let ll = lambda(&lambda(&m).unwrap()).unwrap();
        assert!(congruent(&m, &ll).unwrap());
    }

    #[test]
    fn tilde_s_conditions() {
        let r = r_xy();
        assert!(satisfies_tilde_s(&m_x(&r), 1).unwrap());
        assert!(!satisfies_tilde_s(&k_mod(&r), 1).unwrap());
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(satisfies_tilde_s(&free, 3).unwrap());
    }

    #[test]
    fn reduced_g_perfect_judgements() {
        let r = r_xy();
        assert!(is_reduced_g_perfect(&k_mod(&r), 6).unwrap());
        assert!(!is_reduced_g_perfect(&m_x(&r), 6).unwrap());
        let free = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert!(!is_reduced_g_perfect(&free, 6).unwrap());
    }

    #[test]
    fn report_of_the_residue_field() {
        let r = r_xy();
        let rep = report("k", &k_mod(&r), 6).unwrap();
        assert_eq!(rep.grade, 1);
        assert_eq!(rep.reduced_grade, Bounded::Exact { value: 1 });
        assert_eq!(rep.depth, 0);
        assert_eq!(rep.dim, 0);
        assert_eq!(rep.gdim, Bounded::Exact { value: 1 });
        assert!(rep.stable);
        assert!(!rep.horizontally_linked);
        assert!(rep.reduced_g_perfect);
        assert_eq!(rep.serre, 0);
    }

    #[test]
    fn report_of_a_linked_module() {
        let r = r_xy();
        let rep = report("M_x", &m_x(&r), 6).unwrap();
        // Hom(M_x, R) = (0 : x) = (y) != 0, so the grade is 0
        assert_eq!(rep.grade, 0);
        // no Ext nonvanishing through the bound: infinity-up-to-bound
        assert_eq!(rep.reduced_grade, Bounded::AtLeast { bound: 6 });
        assert_eq!(rep.depth, 1);
        assert_eq!(rep.dim, 1);
        assert_eq!(rep.gdim, Bounded::Exact { value: 0 });
        assert!(rep.stable);
        assert!(rep.horizontally_linked);
        assert!(!rep.reduced_g_perfect);
    }

    #[test]
    fn classical_ideal_link_in_the_plane() {
        let s = s2();
        let mx = PresentedModule::cyclic(&s, &[p(&[1, 0])]).unwrap();
        let my = PresentedModule::cyclic(&s, &[p(&[0, 1])]).unwrap();
        assert!(linked_by_ideal(&mx, &my, &[p(&[1, 1])]).unwrap());
    }

    #[test]
    fn link_via_zero_ideal_is_lambda() {
        let r = r_xy();
        let m = m_x(&r);
        let a = link_via_ideal(&m, &[]).unwrap();
        let b = lambda(&m).unwrap();
        assert!(congruent(&a, &b).unwrap());
    }

    #[test]
    fn the_ring_is_semidualizing_over_itself() {
        for r in [s2(), r_xy()] {
            let k = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
            let chk = is_semidualizing(&k, 4).unwrap();
            assert!(chk.homothety_iso && chk.ext_vanishing && chk.verdict);
        }
    }

    #[test]
    fn gk_gorenstein_hypersurface_ideal() {
        let s = s2();
        let k = PresentedModule::free(FreeModule::new(s.clone(), vec![0]));
        assert!(is_gk_gorenstein_ideal(&s, &[p(&[1, 1])], &k, 4).unwrap());
        // the unit ideal is rejected (quotient is zero)
        let one = Polynomial::constant(s.field(), 1, 2);
        assert!(!is_gk_gorenstein_ideal(&s, &[one], &k, 4).unwrap());
    }

    #[test]
    fn serre_window_over_a_three_variable_hypersurface() {
        let s3 = Ring::polynomial_ring(
            PrimeField::new(101).unwrap(),
            vec!["x".into(), "y".into(), "z".into()],
        )
        .unwrap();
        let r3 = s3.quotient_by(vec![p(&[1, 1, 0])]).unwrap();
        let mx = PresentedModule::cyclic(&r3, &[p(&[1, 0, 0])]).unwrap();
        assert!(is_horizontally_linked(&mx).unwrap());
        for k in 1..=2 {
            assert_eq!(
                serre_via_local_cohomology(&mx, k).unwrap(),
                satisfies_tilde_s(&mx, k).unwrap()
            );
        }
        assert!(serre_via_local_cohomology(&mx, 2).unwrap());
    }

    #[test]
    fn gkd_matches_gdim_against_the_ring() {
        let r = r_xy();
        let k = PresentedModule::free(FreeModule::new(r.clone(), vec![0]));
        assert_eq!(gkd(&k_mod(&r), &k, 6).unwrap().value(), Some(1));
        assert_eq!(gkd(&m_x(&r), &k, 6).unwrap().value(), Some(0));
    }
}
