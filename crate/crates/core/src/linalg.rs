//! Exact rational linear algebra: Gaussian elimination, nullspace, inverse.
//!
//! Matrices here are small (one row per exceptional component or one column
//! per candidate monomial), so plain fraction arithmetic is fine.

use num_traits::{One, Zero};

use crate::Rat;

/// A dense matrix of exact rationals, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(r, c, |i, j| crate::field::rat_int(rows[i][j]))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &add;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for j in col..self.cols {
                let v = &self[(row, j)] * &inv;
                self[(row, j)] = v;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for j in col..self.cols {
                        let v = &self[(r, j)] - &(&factor * &self[(row, j)]);
                        self[(r, j)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right nullspace (vectors v with M v = 0), in a
    /// deterministic order: one basis vector per free column, ascending.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_of_col: Vec<Option<usize>> = (0..self.cols)
            .map(|c| pivots.iter().position(|&p| p == c))
            .collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (c, p) in pivot_of_col.iter().enumerate() {
                if let Some(prow) = p {
                    v[c] = -m[(*prow, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix; panics if singular.
    pub fn inverse(&self) -> Self {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let pivots = aug.rref();
        assert_eq!(pivots.len(), n, "matrix is singular");
        assert!(
            pivots.iter().enumerate().all(|(i, &p)| i == p),
            "matrix is singular"
        );
        Self::from_fn(n, n, |i, j| aug[(i, n + j)].clone())
    }

    /// Solve M x = b for M with full column rank; None if inconsistent or
    /// underdetermined.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let n = self.rows;
        let mut aug = Self::zeros(n, self.cols + 1);
        for i in 0..n {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        if pivots.len() < self.cols {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// All leading principal minors are positive (Sylvester test).
    pub fn is_positive_definite(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        for k in 1..=self.rows {
            let sub = Self::from_fn(k, k, |i, j| self[(i, j)].clone());
            if sub.det() <= Rat::zero() {
                return false;
            }
        }
        true
    }

    /// Determinant by elimination (sizes are tiny).
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det *= &m[(col, col)];
            let inv = m[(col, col)].recip();
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] * &inv;
                for j in col..n {
                    let v = &m[(r, j)] - &(&factor * &m[(col, j)]);
                    m[(r, j)] = v;
                }
            }
        }
        det
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat_int;

    #[test]
    fn inverse_of_proximity_like_matrix() {
        // cusp proximity matrix
        let p = QMatrix::from_i64(&[vec![1, 0, 0], vec![-1, 1, 0], vec![-1, -1, 1]]);
        let inv = p.inverse();
        let expect = QMatrix::from_i64(&[vec![1, 0, 0], vec![1, 1, 0], vec![2, 1, 1]]);
        assert_eq!(inv, expect);
        assert_eq!(p.det(), rat_int(1));
    }

    #[test]
    fn nullspace_of_rank_deficient() {
        // x + y + z = 0 ; x - y = 0
        let m = QMatrix::from_i64(&[vec![1, 1, 1], vec![1, -1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            let out = m.matvec(v);
            assert!(out.iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn solve_unique() {
        let m = QMatrix::from_i64(&[vec![2, 0], vec![1, 3]]);
        let x = m.solve(&[rat_int(4), rat_int(11)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(3)]);
    }

    #[test]
    fn positive_definite_check() {
        // PᵀP for the cusp is positive definite
        let p = QMatrix::from_i64(&[vec![1, 0, 0], vec![-1, 1, 0], vec![-1, -1, 1]]);
        let ptp = p.transpose().matmul(&p);
        assert!(ptp.is_positive_definite());
    }
}
