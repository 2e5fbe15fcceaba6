//! Truncated power series in `(x, y)`, truncated by total degree.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{BinomialTable, Rational};
use crate::series::{Series, Var};

/// Coefficients `c[i][j]` of `x^i y^j` for `i + j < order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    // row i holds j = 0..order-i
    rows: Vec<Vec<Rational>>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        let rows = (0..order).map(|i| vec![Rational::zero(); order - i]).collect();
        BiSeries { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^i y^j`; zero outside the stored triangle.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        if i + j < self.order {
            self.rows[i][j].clone()
        } else {
            Rational::zero()
        }
    }

    pub fn coeff_ref(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Rational) {
        if i + j < self.order {
            self.rows[i][j] = c;
        }
    }

    fn add_to(&mut self, i: usize, j: usize, c: &Rational) {
        if i + j < self.order {
            self.rows[i][j] += c;
        }
    }

    /// `p(x)` regarded as a bivariate series.
    pub fn from_x(p: &Series) -> Self {
        let mut out = BiSeries::zero(p.order());
        for (i, c) in p.coeffs().iter().enumerate() {
            out.rows[i][0] = c.clone();
        }
        out
    }

    /// `p(y)` regarded as a bivariate series (the variable tag of `p` is ignored).
    pub fn from_y(p: &Series) -> Self {
        let mut out = BiSeries::zero(p.order());
        for (j, c) in p.coeffs().iter().enumerate() {
            out.rows[0][j] = c.clone();
        }
        out
    }

    /// `p(x) q(y)`, truncated at total degree `order`.
    pub fn tensor(p: &Series, q: &Series) -> Result<Self> {
        if p.order() != q.order() {
            return Err(Error::OrderMismatch(p.order(), q.order()));
        }
        let n = p.order();
        let mut out = BiSeries::zero(n);
        for (i, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in q.coeffs()[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.rows[i][j] = a * b;
                }
            }
        }
        Ok(out)
    }

    fn check(&self, other: &BiSeries) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch(self.order, other.order))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(&Rational::from_integer(1.into()), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> BiSeries {
        let rows = self.rows.iter().map(|r| r.iter().map(|a| a * c).collect()).collect();
        BiSeries { order: self.order, rows }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &BiSeries) -> Result<()> {
        self.check(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (ra, rb) in self.rows.iter_mut().zip(&other.rows) {
            for (a, b) in ra.iter_mut().zip(rb) {
                if !b.is_zero() {
                    *a += c * b;
                }
            }
        }
        Ok(())
    }

    /// Product with every term of total degree `>= order` discarded.
    pub fn mul(&self, other: &BiSeries) -> Result<BiSeries> {
        self.check(other)?;
        let n = self.order;
        let mut out = BiSeries::zero(n);
        for i1 in 0..n {
            for j1 in 0..n - i1 {
                let a = &self.rows[i1][j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..n - i1 - j1 {
                    for j2 in 0..n - i1 - j1 - i2 {
                        let b = &other.rows[i2][j2];
                        if !b.is_zero() {
                            out.rows[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The coefficient of `y^j`, as a series in `x` of order `order - j`.
    pub fn y_slice(&self, j: usize) -> Series {
        let len = self.order.saturating_sub(j);
        Series::from_coeffs(Var::X, len, (0..len).map(|i| self.rows[i][j].clone()))
    }

    /// Reassembles `sum_j y^j slices[j](x)`, truncated at total degree `order`.
    pub fn from_y_slices(order: usize, slices: &[Series]) -> BiSeries {
        let mut out = BiSeries::zero(order);
        for (j, s) in slices.iter().enumerate().take(order) {
            for (i, c) in s.coeffs().iter().enumerate() {
                out.set(i, j, c.clone());
            }
        }
        out
    }

    /// Keeps total degrees `< order` only.
    pub fn truncate(&self, order: usize) -> BiSeries {
        let order = order.min(self.order);
        let rows = (0..order).map(|i| self.rows[i][..order - i].to_vec()).collect();
        BiSeries { order, rows }
    }

    /// Setting `y = 0`.
    pub fn at_y_zero(&self) -> Series {
        self.y_slice(0)
    }

    /// First `(i, j)` in graded order where the two differ.
    pub fn first_difference(&self, other: &BiSeries) -> Option<(usize, usize)> {
        let n = self.order.min(other.order);
        for d in 0..n {
            for i in (0..=d).rev() {
                let j = d - i;
                if self.rows[i][j] != other.rows[i][j] {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// The substitution `x -> x + y`: `x^m` maps to `sum_j C(m, j) x^j y^(m-j)`.
///
/// Total degree is preserved, so every stored coefficient is the true
/// coefficient of `p(x + y)`.
pub fn substitute_sum(p: &Series) -> BiSeries {
    let n = p.order();
    let table = BinomialTable::new(n);
    let mut out = BiSeries::zero(n);
    for (m, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..=m {
            out.add_to(j, m - j, &(c * table.rat(m as i64, j as i64)));
        }
    }
    out
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for d in 0..self.order {
            for i in (0..=d).rev() {
                let j = d - i;
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    _ => {
                        let mut parts = Vec::new();
                        if i == 1 {
                            parts.push("x".to_string());
                        } else if i > 1 {
                            parts.push(format!("x^{i}"));
                        }
                        if j == 1 {
                            parts.push("y".to_string());
                        } else if j > 1 {
                            parts.push(format!("y^{j}"));
                        }
                        parts.join("*")
                    }
                };
                terms.push((&self.rows[i][j], mono));
            }
        }
        f.write_str(&crate::series::render_terms(terms.into_iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn x(order: usize, c: &[i64]) -> Series {
        Series::from_ints(Var::X, order, c)
    }

    #[test]
    fn substitute_square() {
        let b = substitute_sum(&x(3, &[0, 0, 1]));
        assert_eq!(b.coeff(2, 0), rat(1));
        assert_eq!(b.coeff(1, 1), rat(2));
        assert_eq!(b.coeff(0, 2), rat(1));
        assert_eq!(b.to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn substitute_constant() {
        let b = substitute_sum(&x(4, &[1]));
        assert_eq!(b, BiSeries::from_x(&x(4, &[1])));
    }

    #[test]
    fn substitute_cubic() {
        // x + x^3 -> x + y + x^3 + 3x^2y + 3xy^2 + y^3, by the binomial theorem
        let b = substitute_sum(&x(5, &[0, 1, 0, 1]));
        let mut expect = BiSeries::zero(5);
        for (i, j, c) in [(1, 0, 1), (0, 1, 1), (3, 0, 1), (2, 1, 3), (1, 2, 3), (0, 3, 1)] {
            expect.set(i, j, rat(c));
        }
        assert_eq!(b, expect);
    }

    #[test]
    fn mul_truncates_by_total_degree() {
        let xy = BiSeries::tensor(&x(3, &[0, 1]), &x(3, &[0, 1])).unwrap();
        assert!(xy.mul(&xy).unwrap().first_difference(&BiSeries::zero(3)).is_none());
        let a = BiSeries::from_x(&x(3, &[1, 1]));
        let b = BiSeries::from_y(&x(3, &[1, 1]));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.to_string(), "1 + x + y + x*y");
    }

    #[test]
    fn slices_round_trip() {
        let b = substitute_sum(&x(5, &[1, 2, 3, 4, 5]));
        let slices: Vec<Series> = (0..5).map(|j| b.y_slice(j)).collect();
        assert_eq!(BiSeries::from_y_slices(5, &slices), b);
        assert_eq!(b.at_y_zero(), x(5, &[1, 2, 3, 4, 5]));
    }
}
