//! Buchberger engine for graded submodules of free modules over R = S/I.
//!
//! Everything is computed over the ambient polynomial ring S on
//! representatives; the quotient is handled by adjoining h*e_i for each
//! generator h of the defining ideal and each component i. Cofactors are
//! tracked so that elements can be expressed over the original generators,
//! and every S-pair contributes a syzygy, which keeps the extracted syzygy
//! set generating.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::free::{FreeModule, Matrix, ModuleElem, ModuleOrder};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Full reduction of `v` against `basis`: every term of the remainder is
/// irreducible. Returns the remainder and, when `want_quots`, the quotients
/// so that v = sum quots[k]*basis[k] + remainder.
fn reduce_against(
    ring: &Ring,
    order: &ModuleOrder,
    basis: &[Gen],
    v: &ModuleElem,
    want_quots: bool,
) -> (ModuleElem, Vec<Polynomial>) {
    let field = ring.field();
    let tord = ring.order();
    let mut quots = vec![Polynomial::zero(); if want_quots { basis.len() } else { 0 }];
    let mut work = v.clone();
    let mut rem = ModuleElem::zero(v.rank());
    'outer: loop {
        let (comp, c, m) = match work.lead(order) {
            None => break,
            Some((i, t)) => (i, t.coeff, t.mono.clone()),
        };
        for (k, g) in basis.iter().enumerate() {
            if g.lead_comp == comp {
                if let Some(q) = m.div(&g.lead_mono) {
                    // basis elements are monic
                    work = work.sub(&g.elem.mul_term(c, &q, ring), ring);
                    if want_quots {
                        quots[k] = quots[k].add(&Polynomial::monomial(c, q), field, tord);
                    }
                    continue 'outer;
                }
            }
        }
        // irreducible leading term: move it over to the remainder
        let t = Polynomial::monomial(c, m);
        work.comps[comp] = work.comps[comp].sub(&t, field, tord);
        rem.comps[comp] = rem.comps[comp].add(&t, field, tord);
    }
    (rem, quots)
}

#[derive(Debug)]
struct Gen {
    elem: ModuleElem, // monic
    cof: ModuleElem,  // coordinates over the engine inputs
    lead_comp: usize,
    lead_mono: Monomial,
}

/// Wrap monic elements with their cached leads for `reduce_against`.
fn wrap(order: &ModuleOrder, elems: &[ModuleElem]) -> Vec<Gen> {
    elems
        .iter()
        .map(|e| {
            let (c, t) = e.lead(order).expect("nonzero");
            debug_assert_eq!(t.coeff, 1, "reduction basis must be monic");
            Gen {
                elem: e.clone(),
                cof: ModuleElem::zero(0),
                lead_comp: c,
                lead_mono: t.mono.clone(),
            }
        })
        .collect()
}

struct Engine {
    ring: Ring,
    shifts: Vec<i64>,
    order: ModuleOrder,
    cap: i64,
    n_inputs: usize,
    gens: Vec<Gen>,
    pairs: BinaryHeap<Reverse<(i64, usize, usize)>>,
    syz: Vec<Vec<Polynomial>>, // each over the gb indices at record time
}

impl Engine {
    fn new(ring: Ring, shifts: Vec<i64>, order: ModuleOrder, n_inputs: usize) -> Self {
        let cap = ring.degree_cap() as i64;
        Engine {
            ring,
            shifts,
            order,
            cap,
            n_inputs,
            gens: Vec::new(),
            pairs: BinaryHeap::new(),
            syz: Vec::new(),
        }
    }

    /// Insert a nonzero element (with its cofactor) into the basis and
    /// enqueue its S-pairs.
    fn insert(&mut self, elem: ModuleElem, cof: ModuleElem) -> Result<()> {
        let (comp, t) = elem.lead(&self.order).expect("nonzero");
        let lc = t.coeff;
        let lead_mono = t.mono.clone();
        let inv = self.ring.field().inv(lc);
        let elem = elem.scale(inv, &self.ring);
        let cof = cof.scale(inv, &self.ring);
        let j = self.gens.len();
        for (i, g) in self.gens.iter().enumerate() {
            if g.lead_comp == comp {
                let lcm = g.lead_mono.lcm(&lead_mono);
                let deg = lcm.degree() as i64 + self.shifts[comp];
                if deg > self.cap {
                    return Err(Error::TruncationExceeded {
                        cap: self.cap as u32,
                        degree: deg,
                    });
                }
                self.pairs.push(Reverse((deg, i, j)));
            }
        }
        self.gens.push(Gen {
            elem,
            cof,
            lead_comp: comp,
            lead_mono,
        });
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        while let Some(Reverse((_deg, i, j))) = self.pairs.pop() {
            let lcm = self.gens[i].lead_mono.lcm(&self.gens[j].lead_mono);
            let ui = lcm.div(&self.gens[i].lead_mono).unwrap();
            let uj = lcm.div(&self.gens[j].lead_mono).unwrap();
            let sp = self.gens[i]
                .elem
                .mul_term(1, &ui, &self.ring)
                .sub(&self.gens[j].elem.mul_term(1, &uj, &self.ring), &self.ring);
            let (rem, quots) = reduce_against(&self.ring, &self.order, &self.gens, &sp, true);
            // The relation u_i g_i - u_j g_j = sum q_k g_k (+ rem) is the
            // Schreyer syzygy for this pair; a nonzero remainder joins the
            // basis and closes the relation itself.
            let field = *self.ring.field();
            let tord = self.ring.order();
            let mut sigma = quots.iter().map(|q| q.neg(&field)).collect::<Vec<_>>();
            sigma[i] = sigma[i].add(&Polynomial::monomial(1, ui.clone()), &field, tord);
            sigma[j] = sigma[j].sub(&Polynomial::monomial(1, uj.clone()), &field, tord);
            if !rem.is_zero() {
                let lc = rem.lead(&self.order).unwrap().1.coeff;
                let mut cof = ModuleElem::zero(self.n_inputs);
                for (k, q) in quots.iter().enumerate() {
                    if !q.is_zero() {
                        cof = cof.add(&self.gens[k].cof.mul_poly(q, &self.ring), &self.ring);
                    }
                }
                let spcof = self.gens[i]
                    .cof
                    .mul_term(1, &ui, &self.ring)
                    .sub(&self.gens[j].cof.mul_term(1, &uj, &self.ring), &self.ring);
                self.insert(rem, spcof.sub(&cof, &self.ring))?;
                sigma.push(Polynomial::constant(&field, field.neg(lc), self.ring.nvars()));
            }
            self.syz.push(sigma);
        }
        Ok(())
    }
}

/// Remove redundant elements, tail-reduce, and sort: the unique reduced
/// Groebner basis of the module the raw basis generates.
fn interreduce(ring: &Ring, order: &ModuleOrder, raw: &[ModuleElem]) -> Vec<ModuleElem> {
    let mut idx: Vec<usize> = (0..raw.len()).collect();
    let lead = |i: usize| raw[i].lead(order).expect("nonzero");
    idx.sort_by(|&a, &b| {
        let (ca, ta) = lead(a);
        let (cb, tb) = lead(b);
        ta.mono
            .degree()
            .cmp(&tb.mono.degree())
            .then_with(|| order.cmp((ca, &ta.mono), (cb, &tb.mono)))
            .then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = Vec::new();
    'next: for &i in &idx {
        let (ci, ti) = lead(i);
        for &k in &kept {
            let (ck, tk) = lead(k);
            if ck == ci && tk.mono.divides(&ti.mono) {
                continue 'next;
            }
        }
        kept.push(i);
    }
    let mut out: Vec<ModuleElem> = kept.iter().map(|&i| raw[i].clone()).collect();
    for i in 0..out.len() {
        let others: Vec<ModuleElem> = out
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (mut nf, _) = reduce_against(ring, order, &wrap(order, &others), &out[i], false);
        if let Some((_, t)) = nf.lead(order) {
            let inv = ring.field().inv(t.coeff);
            nf = nf.scale(inv, ring);
        }
        out[i] = nf;
    }
    out.retain(|g| !g.is_zero());
    out.sort_by(|a, b| {
        let (ca, ta) = a.lead(order).unwrap();
        let (cb, tb) = b.lead(order).unwrap();
        order.cmp((ca, &ta.mono), (cb, &tb.mono))
    });
    out
}

/// A computed Groebner basis of a submodule of a free module, together
/// with the data needed to express elements over the original generators
/// and to read off their syzygies.
#[derive(Debug)]
pub struct GBasis {
    pub target: FreeModule,
    pub order: ModuleOrder,
    /// The reduced Groebner basis (unique for the submodule and order).
    pub gens: Vec<ModuleElem>,
    gens_w: Vec<Gen>,
    raw_w: Vec<Gen>,
    raw_cof: Vec<ModuleElem>,
    /// Generators of the syzygy module of the original inputs, as elements
    /// of the free module on those inputs.
    syz: Vec<ModuleElem>,
    n_orig: usize,
    active: Vec<usize>,
}

/// Groebner basis of the submodule of `target` generated by `gens`,
/// over the quotient ring carried by `target`.
pub fn module_gb(target: &FreeModule, gens: &[ModuleElem]) -> Result<GBasis> {
    let ring = target.ring.clone();
    let order = ModuleOrder::Top(ring.order());
    let cap = ring.degree_cap() as i64;
    let n_orig = gens.len();

    let mut active: Vec<usize> = Vec::new();
    let mut inputs: Vec<ModuleElem> = Vec::new();
    for (j, v) in gens.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let deg = v
            .homogeneous_degree(&target.shifts)
            .ok_or(Error::Inhomogeneous { index: j })?;
        if deg > cap {
            return Err(Error::TruncationExceeded {
                cap: cap as u32,
                degree: deg,
            });
        }
        active.push(j);
        inputs.push(v.clone());
    }
    let n_active = inputs.len();
    if !ring.is_ambient() {
        let ideal_gb = ring.ideal_gb().to_vec();
        for h in &ideal_gb {
            for i in 0..target.rank() {
                let deg = h.homogeneous_degree().unwrap() as i64 + target.shifts[i];
                if deg > cap {
                    return Err(Error::TruncationExceeded {
                        cap: cap as u32,
                        degree: deg,
                    });
                }
                let mut e = ModuleElem::zero(target.rank());
                e.comps[i] = h.clone();
                inputs.push(e);
            }
        }
    }

    let mut engine = Engine::new(
        ring.clone(),
        target.shifts.clone(),
        order.clone(),
        inputs.len(),
    );
    let n_inputs = inputs.len();
    for (slot, v) in inputs.into_iter().enumerate() {
        let mut cof = ModuleElem::zero(n_inputs);
        cof.comps[slot] = Polynomial::constant(ring.field(), 1, ring.nvars());
        engine.insert(v, cof)?;
    }
    engine.run()?;

    let raw: Vec<ModuleElem> = engine.gens.iter().map(|g| g.elem.clone()).collect();
    let raw_cof: Vec<ModuleElem> = engine.gens.iter().map(|g| g.cof.clone()).collect();

    // Translate each recorded syzygy of the basis into a syzygy of the
    // original generators via the cofactors, then restrict to their block.
    let mut syz: Vec<ModuleElem> = Vec::new();
    for sigma in &engine.syz {
        let mut z = ModuleElem::zero(n_inputs);
        for (k, s) in sigma.iter().enumerate() {
            if !s.is_zero() {
                z = z.add(&raw_cof[k].mul_poly(s, &ring), &ring);
            }
        }
        let mut col = ModuleElem::zero(n_orig);
        for (slot, &orig) in active.iter().enumerate() {
            col.comps[orig] = ring.nf_ideal(&z.comps[slot]);
        }
        if !col.is_zero() {
            syz.push(col);
        }
    }
    // a generator that is zero in the quotient contributes its own basis
    // vector (handled above only when the reduction finds it; zero columns
    // of the original list never entered the engine)
    for j in 0..n_orig {
        if !active.contains(&j) {
            let mut col = ModuleElem::zero(n_orig);
            col.comps[j] = Polynomial::constant(ring.field(), 1, ring.nvars());
            syz.push(col);
        }
    }
    let _ = n_active;

    let gens_reduced = interreduce(&ring, &order, &raw);
    let gens_w = wrap(&order, &gens_reduced);
    let raw_w = wrap(&order, &raw);
    Ok(GBasis {
        target: target.clone(),
        order,
        gens: gens_reduced,
        gens_w,
        raw_w,
        raw_cof,
        syz,
        n_orig,
        active,
    })
}

impl GBasis {
    fn ring(&self) -> &Ring {
        &self.target.ring
    }

    /// Canonical normal form modulo the submodule (and the defining ideal).
    pub fn normal_form(&self, v: &ModuleElem) -> ModuleElem {
        let (rem, _) = reduce_against(self.ring(), &self.order, &self.gens_w, v, false);
        rem
    }

    pub fn contains(&self, v: &ModuleElem) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Write `v` as a combination of the original generators, reducing the
    /// coordinates modulo the defining ideal. None when `v` is not in the
    /// submodule.
    pub fn express(&self, v: &ModuleElem) -> Option<Vec<Polynomial>> {
        let ring = self.ring();
        let (rem, quots) = reduce_against(ring, &self.order, &self.raw_w, v, true);
        if !rem.is_zero() {
            return None;
        }
        let n_inputs = self.raw_cof.first().map_or(0, |c| c.rank());
        let mut z = ModuleElem::zero(n_inputs);
        for (k, q) in quots.iter().enumerate() {
            if !q.is_zero() {
                z = z.add(&self.raw_cof[k].mul_poly(q, ring), ring);
            }
        }
        let mut coords = vec![Polynomial::zero(); self.n_orig];
        for (slot, &orig) in self.active.iter().enumerate() {
            coords[orig] = ring.nf_ideal(&z.comps[slot]);
        }
        Some(coords)
    }

    /// Generators of the syzygy module of the original inputs.
    pub fn syzygies(&self) -> &[ModuleElem] {
        &self.syz
    }
}

/// Kernel of a graded map between free modules, as a matrix into its source.
pub fn kernel_of_matrix(a: &Matrix) -> Result<Matrix> {
    let gb = module_gb(&a.target, &a.cols)?;
    let ring = &a.source.ring;
    let mut shifts = Vec::new();
    let mut cols = Vec::new();
    for z in gb.syzygies() {
        let d = z
            .homogeneous_degree(&a.source.shifts)
            .expect("syzygies of homogeneous columns are homogeneous");
        shifts.push(d);
        cols.push(z.clone());
    }
    Matrix::new(
        FreeModule::new(ring.clone(), shifts),
        a.source.clone(),
        cols,
    )
}

/// Reduced Groebner basis of an ideal of the ambient polynomial ring
/// (representatives; the quotient structure of `ring` is ignored).
pub fn ideal_groebner(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ambient = ring.ambient();
    let f = FreeModule::new(ambient, vec![0]);
    let elems: Vec<ModuleElem> = gens
        .iter()
        .map(|p| ModuleElem {
            comps: vec![p.clone()],
        })
        .collect();
    let gb = module_gb(&f, &elems)?;
    Ok(gb
        .gens
        .into_iter()
        .map(|e| e.comps.into_iter().next().unwrap())
        .collect())
}

/// Normal form of a polynomial against a Groebner basis, over the ambient
/// polynomial ring.
pub fn poly_normal_form(ring: &Ring, f: &Polynomial, gb: &[Polynomial]) -> Polynomial {
    if gb.is_empty() || f.is_zero() {
        return f.clone();
    }
    let field = ring.field();
    let tord = ring.order();
    let leads: Vec<(u64, &Monomial)> = gb
        .iter()
        .map(|g| {
            let t = g.lead().expect("basis polynomials are nonzero");
            (t.coeff, &t.mono)
        })
        .collect();
    let mut work = f.clone();
    let mut rem = Polynomial::zero();
    'outer: while let Some(t) = work.lead() {
        let (c, m) = (t.coeff, t.mono.clone());
        for (k, (lc, lm)) in leads.iter().enumerate() {
            if let Some(q) = m.div(lm) {
                let coeff = field.div(c, *lc);
                work = work.sub(&gb[k].mul_term(coeff, &q, field), field, tord);
                continue 'outer;
            }
        }
        let single = Polynomial::monomial(c, m);
        work = work.sub(&single, field, tord);
        rem = rem.add(&single, field, tord);
    }
    rem
}

pub fn ideal_membership(ring: &Ring, gb: &[Polynomial], f: &Polynomial) -> bool {
    poly_normal_form(ring, f, gb).is_zero()
}

pub fn ideal_is_unit(gb: &[Polynomial]) -> bool {
    gb.iter().any(|g| g.as_unit().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::monomial::TermOrder;

    fn s2() -> Ring {
        Ring::polynomial_ring(
            PrimeField::new(101).unwrap(),
            vec!["x".into(), "y".into()],
        )
        .unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    #[test]
    fn reduced_basis_of_plane_ideal() {
        // (x^2 - y^2, x*y) over F_101[x,y], grevlex: the S-pair produces y^3
        let r = s2();
        let f = r.field();
        let g1 = p(&[2, 0]).sub(&p(&[0, 2]), f, TermOrder::GrevLex);
        let g2 = p(&[1, 1]);
        let gb = ideal_groebner(&r, &[g1.clone(), g2.clone()]).unwrap();
        assert_eq!(gb, vec![p(&[1, 1]), g1, p(&[0, 3])]);
        assert!(ideal_membership(&r, &gb, &p(&[0, 3])));
        assert!(!ideal_membership(&r, &gb, &p(&[0, 2])));
        assert!(!ideal_is_unit(&gb));
    }

    #[test]
    fn koszul_syzygy() {
        // kernel of [x y]: F(-1)^2 -> F is generated by (y, -x)
        let r = s2();
        let rows = vec![vec![p(&[1, 0]), p(&[0, 1])]];
        let a = Matrix::from_rows(&r, vec![0], rows).unwrap();
        let k = kernel_of_matrix(&a).unwrap();
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.source.shifts, vec![2]);
        assert_eq!(k.cols[0].comps[0], p(&[0, 1]));
        assert_eq!(k.cols[0].comps[1], p(&[1, 0]).scale(100, r.field()));
        assert!(a.compose(&k).is_zero());
    }

    #[test]
    fn kernel_over_quotient() {
        // over R = F_101[x,y]/(xy), the annihilator of x is (y)
        let r = Ring::polynomial_ring(
            PrimeField::new(101).unwrap(),
            vec!["x".into(), "y".into()],
        )
        .unwrap()
        .quotient_by(vec![p(&[1, 1])])
        .unwrap();
        let a = Matrix::from_rows(&r, vec![0], vec![vec![p(&[1, 0])]]).unwrap();
        let k = kernel_of_matrix(&a).unwrap();
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.cols[0].comps[0], p(&[0, 1]));
        assert!(a.compose(&k).is_zero());
    }

    #[test]
    fn normal_form_example() {
        // NF(x^2*y + y^3) against {x*y - y^2} is 2*y^3
        let r = s2();
        let f = r.field();
        let o = TermOrder::GrevLex;
        let gb = vec![p(&[1, 1]).sub(&p(&[0, 2]), f, o)];
        let v = p(&[2, 1]).add(&p(&[0, 3]), f, o);
        let nf = poly_normal_form(&r, &v, &gb);
        assert_eq!(nf, p(&[0, 3]).scale(2, f));
    }

    #[test]
    fn express_roundtrip() {
        let r = s2();
        let f = FreeModule::new(r.clone(), vec![0]);
        let g1 = ModuleElem {
            comps: vec![p(&[2, 0])],
        };
        let g2 = ModuleElem {
            comps: vec![p(&[0, 2])],
        };
        let gb = module_gb(&f, &[g1.clone(), g2.clone()]).unwrap();
        // x^3 + x*y^2 = x*(x^2) + x*(y^2)
        let v = ModuleElem {
            comps: vec![p(&[3, 0]).add(&p(&[1, 2]), r.field(), r.order())],
        };
        let coords = gb.express(&v).unwrap();
        let mut acc = ModuleElem::zero(1);
        acc = acc.add(&g1.mul_poly(&coords[0], &r), &r);
        acc = acc.add(&g2.mul_poly(&coords[1], &r), &r);
        assert_eq!(acc, v);
        assert!(gb
            .express(&ModuleElem {
                comps: vec![p(&[1, 1])]
            })
            .is_none());
    }
}
