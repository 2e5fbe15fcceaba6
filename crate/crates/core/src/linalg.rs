//! Dense exact matrices, just enough for change-of-basis work.

use num_traits::{One, Zero};

use crate::ring::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Matrix { n_rows, n_cols, data: vec![Rational::zero(); n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Rows must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { n_rows, n_cols, data }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n_cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n_cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n_cols..(i + 1) * self.n_cols]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n_rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n_cols, other.n_rows, "shape mismatch");
        let mut out = Matrix::zeros(self.n_rows, other.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.n_cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.n_cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix: `Σ_i v[i] * row(i)`.
    pub fn left_apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.n_rows, "shape mismatch");
        let mut out = vec![Rational::zero(); self.n_cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(self.row(i)) {
                if !m.is_zero() {
                    *o += vi * m;
                }
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n_rows).all(|i| ((i + 1)..self.n_cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n_rows).all(|i| (0..i.min(self.n_cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// Exact Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.n_rows != self.n_cols {
            return None;
        }
        let n = self.n_rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                a.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.n_cols {
            self.data.swap(i * self.n_cols + c, j * self.n_cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Rational) {
        for c in 0..self.n_cols {
            let idx = i * self.n_cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] *= s;
            }
        }
    }

    // row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for c in 0..self.n_cols {
            let s = self.data[source * self.n_cols + c].clone();
            if !s.is_zero() {
                self.data[target * self.n_cols + c] -= factor * s;
            }
        }
    }
}
