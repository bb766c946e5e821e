//! Dense matrices over the exact rational scalars, with the elimination
//! routines the rest of the crate is built on: determinant, rank, reduced
//! row echelon form, nullspace, linear solve, and inverse.
//!
//! Everything here is exact; there is no pivoting strategy beyond "first
//! nonzero entry", because with rational arithmetic any nonzero pivot is as
//! good as any other for correctness.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use crate::scalar::{Scalar, Zero};
use crate::{Error, Result};

/// A row-major dense matrix of [`Scalar`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: crate::scalar::zeros(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = crate::scalar::int(1);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Build from integer entries given row by row.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(r, c, |i, j| crate::scalar::int(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| f(x)).collect() }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        self.map(|x| -x)
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        self.map(|x| x * s)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = crate::scalar::int(1);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(pr) = pivot else {
                return Ok(Scalar::zero());
            };
            if pr != col {
                m.swap_rows(pr, col);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] -= delta;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form, together with the pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pr, row);
            let p = m[(row, col)].clone();
            for c in col..m.cols {
                m[(row, c)] = &m[(row, c)] / &p;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        let delta = &factor * &m[(row, c)];
                        m[(r, c)] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right nullspace, each vector of length `cols`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for col in 0..self.cols {
            if pivot_iter.peek() == Some(&col) {
                pivot_iter.next();
            } else {
                free_cols.push(col);
            }
        }
        for &fc in &free_cols {
            let mut v = crate::scalar::zeros(self.cols);
            v[fc] = crate::scalar::int(1);
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -&r[(prow, fc)];
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self · x = b` (free variables set to zero),
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "shape mismatch in solve");
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a pivot in the augmented column: inconsistent
        }
        let mut x = crate::scalar::zeros(self.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r[(prow, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; `Err(NoInverse { rank })` when singular.
    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = crate::scalar::int(1);
        }
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Err(Error::NoInverse { rank });
        }
        Ok(Mat::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn det_and_inverse_of_known_matrix() {
        let m = Mat::from_int_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 2]]);
        assert_eq!(m.det().unwrap(), int(8));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(3));
        assert_eq!(inv[(0, 0)], ratio(5, 8));
    }

    #[test]
    fn singular_matrix_reports_rank() {
        let m = Mat::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.det().unwrap(), int(0));
        match m.inverse() {
            Err(Error::NoInverse { rank }) => assert_eq!(rank, 2),
            other => panic!("expected NoInverse, got {other:?}"),
        }
    }

    #[test]
    fn rref_pivots_and_nullspace() {
        let m = Mat::from_int_rows(&[&[1, 2, 1, 0], &[2, 4, 0, 2]]);
        let (_, pivots) = m.rref();
        assert_eq!(pivots, [0, 2]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_int_rows(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[int(3), int(1)]).unwrap();
        assert_eq!(x, [int(2), int(1)]);
        let sing = Mat::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(sing.solve(&[int(1), int(3)]).is_none());
        assert!(sing.solve(&[int(1), int(2)]).is_some());
    }

    #[test]
    fn non_square_det_errors() {
        let m = Mat::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn mul_and_transpose() {
        let a = Mat::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = Mat::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Mat::from_int_rows(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), Mat::from_int_rows(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.trace(), int(5));
    }
}
