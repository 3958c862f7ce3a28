//! Dense exact matrices with deterministic Gauss-Jordan elimination.
//!
//! Pivoting is leftmost-column, first-nonzero-row, so echelon forms,
//! solutions and kernel bases are reproducible across runs.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        Matrix::from_fn(f, self.rows, other.cols, |r, c| {
            let mut acc = f.zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(a, other.get(k, c)));
            }
            acc
        })
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = f.zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !f.is_zero(a) {
                        acc = f.add(&acc, &f.mul(a, &v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Row covector times matrix: `(v^T M)_c`.
    pub fn mul_covec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "covector-matrix shape mismatch");
        let f = self.field;
        (0..self.cols)
            .map(|c| {
                let mut acc = f.zero();
                for r in 0..self.rows {
                    if !f.is_zero(&v[r]) {
                        acc = f.add(&acc, &f.mul(&v[r], self.get(r, c)));
                    }
                }
                acc
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| !f.is_zero(self.get(r, col))) else {
                continue;
            };
            if pivot_row != row {
                for c in 0..self.cols {
                    self.data.swap(pivot_row * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("nonzero pivot");
            for c in col..self.cols {
                let v = f.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || f.is_zero(self.get(r, col)) {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), &f.mul(&factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// One solution of `A x = b` (free variables set to zero), or `None`
    /// if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let f = self.field;
        let mut aug = Matrix::from_fn(f, self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Echelon-normalized basis of the null space, ordered by free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = f.neg(work.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        let mut aug = Matrix::from_fn(f, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn qm(rows: Vec<Vec<i64>>) -> Matrix {
        let f = q();
        Matrix::from_rows(f, rows.into_iter().map(|r| r.into_iter().map(|v| f.from_i64(v)).collect()).collect())
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = Matrix::identity(q(), 3);
        let b = vec![q().from_i64(4), q().from_i64(-1), q().from_i64(7)];
        assert_eq!(m.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_inconsistent_rows() {
        let m = qm(vec![vec![1, 1], vec![1, 1]]);
        let b = vec![q().from_i64(1), q().from_i64(0)];
        assert_eq!(m.solve(&b), None);
    }

    #[test]
    fn solve_zero_matrix_zero_rhs() {
        let m = Matrix::zero(q(), 2, 2);
        let b = vec![q().zero(), q().zero()];
        assert_eq!(m.solve(&b).unwrap(), vec![q().zero(), q().zero()]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(q(), 4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_standard_basis() {
        let basis = Matrix::zero(q(), 3, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, s) in v.iter().enumerate() {
                assert_eq!(q().is_one(s), i == j);
            }
        }
    }

    #[test]
    fn kernel_of_difference_row() {
        let m = qm(vec![vec![1, -1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis, vec![vec![q().from_i64(1), q().from_i64(1)]]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = qm(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(q(), 2));
        assert_eq!(inv.mul(&m), Matrix::identity(q(), 2));
    }

    proptest! {
        // every reported kernel vector satisfies A x = 0 exactly
        #[test]
        fn kernel_vectors_annihilate(entries in proptest::collection::vec(-6i64..6, 12)) {
            let f = q();
            let m = Matrix::from_fn(f, 3, 4, |r, c| f.from_i64(entries[r * 4 + c]));
            for v in m.kernel_basis() {
                let image = m.mul_vec(&v);
                prop_assert!(image.iter().all(|s| f.is_zero(s)));
            }
        }

        // rank-nullity on small rational matrices
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-5i64..5, 12)) {
            let f = q();
            let m = Matrix::from_fn(f, 4, 3, |r, c| f.from_i64(entries[r * 3 + c]));
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), 3);
        }

        // solve() returns an exact solution whenever it returns at all
        #[test]
        fn solve_is_exact(entries in proptest::collection::vec(-5i64..5, 9), rhs in proptest::collection::vec(-5i64..5, 3)) {
            let f = q();
            let m = Matrix::from_fn(f, 3, 3, |r, c| f.from_i64(entries[r * 3 + c]));
            let b: Vec<_> = rhs.iter().map(|&v| f.from_i64(v)).collect();
            if let Some(x) = m.solve(&b) {
                prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
