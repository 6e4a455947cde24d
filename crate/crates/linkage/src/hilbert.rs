//! Hilbert series and Betti tables of graded modules.

use crate::error::{Error, Result};
use crate::module::{PresentedModule, Resolution};

/// t^offset * (numer[0] + numer[1] t + ...) / (1-t)^denom_pow, kept in the
/// normal form where (1-t) does not divide the numerator and the numerator
/// has nonzero first and last coefficients. The zero series is the empty
/// numerator.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HilbertSeries {
    pub offset: i64,
    pub numer: Vec<i64>,
    pub denom_pow: u32,
}

impl HilbertSeries {
    pub fn zero() -> Self {
        HilbertSeries {
            offset: 0,
            numer: Vec::new(),
            denom_pow: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    fn normalize(mut self) -> Self {
        loop {
            while self.numer.last() == Some(&0) {
                self.numer.pop();
            }
            while self.numer.first() == Some(&0) {
                self.numer.remove(0);
                self.offset += 1;
            }
            if self.numer.is_empty() {
                return HilbertSeries::zero();
            }
            if self.denom_pow == 0 {
                return self;
            }
            // divide by (1-t) if the numerator vanishes at t = 1
            if self.numer.iter().sum::<i64>() != 0 {
                return self;
            }
            let mut q = vec![0i64; self.numer.len() - 1];
            let mut carry = 0i64;
            for k in 0..q.len() {
                carry += self.numer[k];
                q[k] = carry;
            }
            self.numer = q;
            self.denom_pow -= 1;
        }
    }

    pub fn from_parts(offset: i64, numer: Vec<i64>, denom_pow: u32) -> Self {
        HilbertSeries {
            offset,
            numer,
            denom_pow,
        }
        .normalize()
    }

    /// The coefficient of t^d in the power-series expansion.
    pub fn coeff(&self, d: i64) -> i64 {
        let mut acc = 0i64;
        for (k, c) in self.numer.iter().enumerate() {
            let e = d - self.offset - k as i64;
            if e < 0 {
                continue;
            }
            if self.denom_pow == 0 {
                if e == 0 {
                    acc += c;
                }
            } else {
                acc += c * binom(e + self.denom_pow as i64 - 1, self.denom_pow as i64 - 1);
            }
        }
        acc
    }

    /// Krull dimension read off as the pole order at t = 1; the zero
    /// module has no pole and reports None.
    pub fn dimension(&self) -> Option<u32> {
        if self.is_zero() {
            None
        } else {
            Some(self.denom_pow)
        }
    }

    /// Numerator value at t = 1 (the multiplicity when nonzero).
    pub fn multiplicity(&self) -> i64 {
        self.numer.iter().sum()
    }

    /// Exact sum of two series as rational functions.
    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let dp = self.denom_pow.max(other.denom_pow);
        let na = mul_one_minus_t_pow(&self.numer, dp - self.denom_pow);
        let nb = mul_one_minus_t_pow(&other.numer, dp - other.denom_pow);
        let off = self.offset.min(other.offset);
        let len = ((self.offset - off) as usize + na.len())
            .max((other.offset - off) as usize + nb.len());
        let mut numer = vec![0i64; len];
        for (k, c) in na.iter().enumerate() {
            numer[(self.offset - off) as usize + k] += c;
        }
        for (k, c) in nb.iter().enumerate() {
            numer[(other.offset - off) as usize + k] += c;
        }
        HilbertSeries::from_parts(off, numer, dp)
    }
}

fn mul_one_minus_t_pow(numer: &[i64], k: u32) -> Vec<i64> {
    let mut acc = numer.to_vec();
    for _ in 0..k {
        let mut next = vec![0i64; acc.len() + 1];
        for (j, c) in acc.iter().enumerate() {
            next[j] += c;
            next[j + 1] -= c;
        }
        acc = next;
    }
    acc
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Hilbert series of a presented module, via a finite free resolution over
/// the ambient polynomial ring.
pub fn hilbert_series(m: &PresentedModule) -> Result<HilbertSeries> {
    let ms = m.to_ambient();
    let n = ms.ring().nvars();
    let res = ms.resolve(n + 1)?;
    if !res.complete {
        return Err(Error::Invariant(
            "ambient resolution longer than the number of variables".into(),
        ));
    }
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for i in 0..=res.diffs.len() {
        for &s in res.shifts(i) {
            lo = lo.min(s);
            hi = hi.max(s);
        }
    }
    if lo > hi {
        return Ok(HilbertSeries::zero());
    }
    let mut numer = vec![0i64; (hi - lo + 1) as usize];
    for i in 0..=res.diffs.len() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &s in res.shifts(i) {
            numer[(s - lo) as usize] += sign;
        }
    }
    Ok(HilbertSeries::from_parts(lo, numer, n as u32))
}

/// Graded Betti numbers of the computed part of a minimal resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// (homological degree, internal degree, rank), sorted.
    pub entries: Vec<(usize, i64, usize)>,
    /// Whether the underlying resolution was complete.
    pub complete: bool,
}

pub fn betti_table(res: &Resolution) -> BettiTable {
    let mut entries = Vec::new();
    for i in 0..=res.diffs.len() {
        let mut shifts: Vec<i64> = res.shifts(i).to_vec();
        shifts.sort();
        let mut k = 0;
        while k < shifts.len() {
            let j = shifts[k];
            let mut rank = 0;
            while k < shifts.len() && shifts[k] == j {
                rank += 1;
                k += 1;
            }
            entries.push((i, j, rank));
        }
    }
    BettiTable {
        entries,
        complete: res.complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::free::FreeModule;
    use crate::monomial::Monomial;
    use crate::poly::Polynomial;
    use crate::ring::Ring;

    fn s2() -> Ring {
        Ring::polynomial_ring(PrimeField::new(101).unwrap(), vec!["x".into(), "y".into()])
            .unwrap()
    }

    fn p(e: &[u32]) -> Polynomial {
        Polynomial::monomial(1, Monomial::new(e.to_vec()))
    }

    #[test]
    fn series_of_the_plane() {
        let r = s2();
        let m = PresentedModule::free(FreeModule::new(r, vec![0]));
        let hs = hilbert_series(&m).unwrap();
        assert_eq!(hs, HilbertSeries::from_parts(0, vec![1], 2));
        // dim_k S_d = d + 1
        assert_eq!(hs.coeff(0), 1);
        assert_eq!(hs.coeff(3), 4);
        assert_eq!(hs.dimension(), Some(2));
    }

    #[test]
    fn series_of_the_residue_field() {
        let r = s2();
        let k = PresentedModule::cyclic(&r, &[p(&[1, 0]), p(&[0, 1])]).unwrap();
        let hs = hilbert_series(&k).unwrap();
        assert_eq!(hs, HilbertSeries::from_parts(0, vec![1], 0));
        assert_eq!(hs.coeff(0), 1);
        assert_eq!(hs.coeff(1), 0);
        assert_eq!(hs.dimension(), Some(0));
    }

    #[test]
    fn series_over_a_hypersurface() {
        // R = F_101[x,y]/(xy): 1,2,2,2,... and dimension 1
        let r = s2().quotient_by(vec![p(&[1, 1])]).unwrap();
        let m = PresentedModule::free(FreeModule::new(r, vec![0]));
        let hs = hilbert_series(&m).unwrap();
        assert_eq!(hs, HilbertSeries::from_parts(0, vec![1, 1], 1));
        assert_eq!(hs.coeff(0), 1);
        assert_eq!(hs.coeff(5), 2);
        assert_eq!(hs.dimension(), Some(1));
        assert_eq!(hs.multiplicity(), 2);
    }

    #[test]
    fn twist_moves_the_offset() {
        let r = s2();
        let m = PresentedModule::free(FreeModule::new(r, vec![0]));
        let hs = hilbert_series(&m.twist(1)).unwrap();
        assert_eq!(hs.offset, -1);
        assert_eq!(hs.coeff(-1), 1);
    }

    #[test]
    fn betti_of_koszul() {
        let r = s2();
        let k = PresentedModule::cyclic(&r, &[p(&[1, 0]), p(&[0, 1])]).unwrap();
        let res = k.resolve(4).unwrap();
        let b = betti_table(&res);
        assert!(b.complete);
        assert_eq!(b.entries, vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
    }
}
