//! Dense exact linear algebra over Q: row reduction, rank, kernels. Matrices
//! at this scale are a few hundred rows, so straightforward Gaussian
//! elimination with rational pivots is plenty.

use crate::rat::Rat;
use num_traits::Zero;

#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).clone().recip();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j) - &factor * self.get(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }

    /// Basis of the right kernel {v : A v = 0}, one vector per free column.
    pub fn kernel_basis(mut self) -> Vec<Vec<Rat>> {
        let pivots = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::from_integer(1.into());
            for (prow, pcol) in pivots.iter().enumerate() {
                v[*pcol] = -self.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank of the span of a set of coordinate vectors.
pub fn span_rank(vectors: Vec<Vec<Rat>>) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Mat::from_rows(vectors).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.clone().rank(), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        // v = (-1, -1, 1) spans the kernel
        let v = &ker[0];
        assert_eq!(&v[0] + &v[2], rat_int(0));
        assert_eq!(&v[1] * rat_int(1), -(&v[2] * crate::rat::rat(1, 1)));
    }

    #[test]
    fn full_rank_kernel_empty() {
        let a = m(&[&[1, 0], &[0, 1]]);
        assert!(a.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[8, 10, 6, 7]]);
        for v in a.clone().kernel_basis() {
            for i in 0..a.rows {
                let mut s = Rat::zero();
                for j in 0..a.cols {
                    s += a.get(i, j) * &v[j];
                }
                assert!(s.is_zero());
            }
        }
    }
}
