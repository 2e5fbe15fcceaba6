//! Truncated univariate power series over [`Rational`].
//!
//! A [`Series`] of order `N` stores the coefficients of degrees `0..N`.
//! Every binary operation requires equal variables and equal orders; mixing
//! orders is an error rather than a silent precision loss.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{format_rational, rat, Rational};

/// Variable tag. `X` is the polynomial / λ-binomial side, `T` the
/// functional (umbral algebra) side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    T,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            't' => Some(Var::T),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(var: Var, order: usize) -> Self {
        Series { var, coeffs: vec![Rational::zero(); order] }
    }

    pub fn constant(var: Var, order: usize, c: Rational) -> Self {
        let mut s = Series::zero(var, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(var: Var, order: usize) -> Self {
        Series::constant(var, order, Rational::one())
    }

    /// `c * var^degree`, or zero if the degree is truncated away.
    pub fn monomial(var: Var, order: usize, degree: usize, c: Rational) -> Self {
        let mut s = Series::zero(var, order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// The series `var` itself.
    pub fn variable(var: Var, order: usize) -> Self {
        Series::monomial(var, order, 1, Rational::one())
    }

    /// Builds a series from coefficients, truncating or zero-padding to `order`.
    pub fn from_coeffs(var: Var, order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut c: Vec<Rational> = coeffs.into_iter().take(order).collect();
        c.resize(order, Rational::zero());
        Series { var, coeffs: c }
    }

    pub fn from_ints(var: Var, order: usize, coeffs: &[i64]) -> Self {
        Series::from_coeffs(var, order, coeffs.iter().map(|&c| rat(c)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^degree`; zero beyond the truncation.
    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// `f(0) = 0` and `f'(0) != 0`.
    pub fn is_delta(&self) -> bool {
        self.order() >= 2 && self.coeffs[0].is_zero() && !self.coeffs[1].is_zero()
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Same variable, different truncation (zero-padded when growing).
    pub fn with_order(&self, order: usize) -> Series {
        Series::from_coeffs(self.var, order, self.coeffs.iter().cloned())
    }

    /// Relabels the variable; coefficients are untouched.
    pub fn with_var(&self, var: Var) -> Series {
        Series { var, coeffs: self.coeffs.clone() }
    }

    fn check(&self, other: &Series) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Series { var: self.var, coeffs })
    }

    pub fn neg(&self) -> Series {
        Series { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// In-place `self += c * other`; used by the linear-combination loops.
    pub fn add_scaled(&mut self, c: &Rational, other: &Series) -> Result<()> {
        self.check(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Series { var: self.var, coeffs: out })
    }

    pub fn pow(&self, exp: usize) -> Series {
        let mut acc = Series::one(self.var, self.order());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `g(f)`, with `self` as `g`. `f` must have zero constant term, which
    /// makes every stored coefficient of the result exact.
    pub fn compose(&self, f: &Series) -> Result<Series> {
        if self.order() != f.order() {
            return Err(Error::OrderMismatch(self.order(), f.order()));
        }
        if !f.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Horner: g0 + f (g1 + f (g2 + ...))
        let n = self.order();
        let mut acc = Series::zero(f.var, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(f)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Series> {
        let n = self.order();
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(inv0.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &b[k - j];
                }
            }
            b.push(-acc * &inv0);
        }
        Ok(Series { var: self.var, coeffs: b })
    }

    pub fn div(&self, other: &Series) -> Result<Series> {
        self.check(other)?;
        self.mul(&other.reciprocal()?)
    }

    /// Formal derivative. The top coefficient of the result is unknown at
    /// this truncation and is set to zero.
    fn derivative(&self) -> Series {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for k in 1..n {
            out[k - 1] = &self.coeffs[k] * rat(k as i64);
        }
        Series { var: self.var, coeffs: out }
    }

    /// `exp(a)`; requires `a(0) = 0`.
    pub fn exp(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // b' = a' b  =>  k b_k = sum_{j=1}^{k} j a_j b_{k-j}
        let n = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                b.push(Rational::one());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * rat(j as i64) * &b[k - j];
                }
            }
            b.push(acc / rat(k as i64));
        }
        Ok(Series { var: self.var, coeffs: b })
    }

    /// `log(a)`; requires `a(0) = 1`.
    pub fn log(&self) -> Result<Series> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstantTerm);
        }
        // (log a)' = a' / a, integrated with zero constant
        let n = self.order();
        let quotient = self.derivative().mul(&self.reciprocal()?)?;
        let out =
            std::iter::once(Rational::zero()).chain((1..n).map(|k| &quotient.coeffs[k - 1] / rat(k as i64))).collect();
        Ok(Series { var: self.var, coeffs: out })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("series serializes")
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Series", 3)?;
        st.serialize_field("var", &self.var.symbol().to_string())?;
        st.serialize_field("order", &self.order())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Renders `sum c_k * v^k` as `c0 + c1*v + c2*v^2 ...`, skipping zero terms.
/// Unit coefficients are dropped (`t`, `-t^2`), and later negative terms are
/// written with ` - `.
pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        let body = if name.is_empty() {
            format_rational(&mag)
        } else if mag.is_one() {
            name
        } else {
            format!("{}*{}", format_rational(&mag), name)
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.symbol();
        let terms = self.coeffs.iter().enumerate().map(|(k, c)| {
            let name = match k {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{k}"),
            };
            (c, name)
        });
        f.write_str(&render_terms(terms))
    }
}
