//! Dense row reduction over F_p, the only primitive the oracle uses.

use crate::field::PrimeField;

/// Row-major dense matrix over F_p.
#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<u64>>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![vec![0; cols]; rows],
        }
    }

    pub fn from_rows(cols: usize, a: Vec<Vec<u64>>) -> Self {
        debug_assert!(a.iter().all(|r| r.len() == cols));
        Mat {
            rows: a.len(),
            cols,
            a,
        }
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// nonzero row, in order.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self.a[r][col] != 0) else {
                continue;
            };
            self.a.swap(row, pr);
            let inv = f.inv(self.a[row][col]);
            for c in col..self.cols {
                self.a[row][c] = f.mul(self.a[row][c], inv);
            }
            for r in 0..self.rows {
                if r != row && self.a[r][col] != 0 {
                    let t = self.a[r][col];
                    for c in col..self.cols {
                        let s = f.mul(t, self.a[row][c]);
                        self.a[r][c] = f.sub(self.a[r][c], s);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Basis of the right kernel { x : A x = 0 }.
    pub fn kernel_basis(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free_col in 0..self.cols {
            if is_pivot[free_col] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free_col] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.a[r][free_col]);
            }
            basis.push(v);
        }
        basis
    }
}

/// An incrementally built row space with reduction of incoming vectors.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    /// Reduced rows paired with their pivot columns.
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce v against the space; returns the remainder.
    pub fn reduce(&self, f: &PrimeField, mut v: Vec<u64>) -> Vec<u64> {
        for (p, row) in &self.rows {
            if v[*p] != 0 {
                let t = v[*p];
                for c in *p..self.cols {
                    let s = f.mul(t, row[c]);
                    v[c] = f.sub(v[c], s);
                }
            }
        }
        v
    }

    /// Insert v if independent; returns true when the dimension grew.
    pub fn insert(&mut self, f: &PrimeField, v: Vec<u64>) -> bool {
        let mut v = self.reduce(f, v);
        let Some(p) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for c in p..self.cols {
            v[c] = f.mul(v[c], inv);
        }
        // keep earlier rows fully reduced so `reduce` is a normal form
        for (q, row) in self.rows.iter_mut() {
            if row[p] != 0 {
                let t = row[p];
                for c in p..self.cols {
                    let s = f.mul(t, v[c]);
                    row[c] = f.sub(row[c], s);
                }
                debug_assert!(*q < p || row[*q] != 0);
            }
        }
        self.rows.push((p, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rank_and_kernel_of_a_singular_matrix() {
        let m = Mat::from_rows(3, vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(&f()), 2);
        let ker = m.kernel_basis(&f());
        assert_eq!(ker.len(), 1);
        // check A k = 0
        let k = &ker[0];
        for row in &m.a {
            let s: u64 = row
                .iter()
                .zip(k)
                .fold(0, |acc, (a, b)| f().add(acc, f().mul(*a, *b)));
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn rowspace_tracks_dimension() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(&f(), vec![1, 2, 3]));
        assert!(!rs.insert(&f(), vec![2, 4, 6]));
        assert!(rs.insert(&f(), vec![0, 0, 5]));
        assert_eq!(rs.dim(), 2);
        assert_eq!(rs.reduce(&f(), vec![1, 2, 8]), vec![0, 0, 0]);
    }
}
