use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{factorial, format_rational, int_to_rat, pow, rat, Rational};
use crate::series::{Series, Var};

/// A family `{p_0, …, p_{N-1}}` of truncated series, with `M[n][m]` the
/// coefficient of the `m`-th monomial in `p_n`.
///
/// Two triangular shapes occur: degree-`n` polynomials (`τ_n(t)`, lower
/// triangular) and series of valuation `n` (`e_λ(x)^n`, upper triangular).
/// Either way expansion against the family is exact. The inverse is computed
/// once; a singular family is kept but refuses to expand.
#[derive(Debug, Clone)]
pub struct PseudoBasis {
    var: Var,
    rows: Vec<Series>,
    matrix: Matrix,
    inverse: Option<Matrix>,
}

impl PartialEq for PseudoBasis {
    fn eq(&self, other: &Self) -> bool {
        self.var == other.var && self.rows == other.rows
    }
}

impl PseudoBasis {
    /// Rows must share the variable, and there must be exactly `order` of them.
    pub fn new(var: Var, rows: Vec<Series>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        for r in &rows {
            if r.var() != var {
                return Err(Error::VariableMismatch(var, r.var()));
            }
            if r.order() != n {
                return Err(Error::OrderMismatch(n, r.order()));
            }
        }
        let matrix = Matrix::from_rows(rows.iter().map(|r| r.coeffs().to_vec()).collect());
        let inverse = matrix.inverse();
        Ok(PseudoBasis { var, rows, matrix, inverse })
    }

    pub fn from_matrix(var: Var, matrix: &Matrix) -> Result<Self> {
        let n = matrix.n_cols();
        let rows = matrix.rows().into_iter().map(|r| Series::from_coeffs(var, n, r)).collect();
        PseudoBasis::new(var, rows)
    }

    pub fn monomial(var: Var, order: usize) -> Self {
        let rows = (0..order).map(|n| Series::monomial(var, order, n, Rational::one())).collect();
        PseudoBasis::new(var, rows).expect("identity matrix")
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> &Series {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Series] {
        &self.rows
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_pseudo_basis(&self) -> bool {
        self.inverse.is_some()
    }

    /// Degree-`n` rows: `deg p_n = n` with nonzero leading coefficient.
    pub fn is_degree_triangular(&self) -> bool {
        self.matrix.is_lower_triangular() && (0..self.order()).all(|i| !self.matrix.get(i, i).is_zero())
    }

    /// Valuation-`n` rows: `p_n = c x^n + …` with `c ≠ 0`.
    pub fn is_valuation_triangular(&self) -> bool {
        self.matrix.is_upper_triangular() && (0..self.order()).all(|i| !self.matrix.get(i, i).is_zero())
    }

    /// The unique `c` with `p = Σ c_n p_n` (polynomial expansion).
    pub fn expand(&self, p: &Series) -> Result<Vec<Rational>> {
        if p.var() != self.var {
            return Err(Error::VariableMismatch(self.var, p.var()));
        }
        if p.order() != self.order() {
            return Err(Error::OrderMismatch(self.order(), p.order()));
        }
        let inv = self.inverse.as_ref().ok_or(Error::NotPseudoBasis)?;
        Ok(inv.left_apply(p.coeffs()))
    }

    /// `Σ c_n p_n`; missing coefficients count as zero.
    pub fn combine(&self, coeffs: &[Rational]) -> Series {
        let mut out = Series::zero(self.var, self.order());
        for (c, r) in coeffs.iter().zip(&self.rows) {
            out.add_scaled(c, r).expect("same shape");
        }
        out
    }

    /// First `order` rows, each truncated to `order`. Exact for
    /// valuation-triangular families, whose leading block does not see the
    /// discarded rows.
    pub fn truncate(&self, order: usize) -> PseudoBasis {
        let rows = self.rows.iter().take(order).map(|r| r.with_order(order)).collect();
        PseudoBasis::new(self.var, rows).expect("leading block")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("basis serializes")
    }
}

impl Serialize for PseudoBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PseudoBasis", 3)?;
        st.serialize_field("var", &self.var.symbol().to_string())?;
        st.serialize_field("order", &self.order())?;
        let rows: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.coeffs().iter().map(format_rational).collect()).collect();
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// `e_λ(x) = (e^{λx} - 1)/λ = Σ_{k≥1} λ^{k-1} x^k / k!`; equal to `x` at λ = 0.
pub fn e_lambda(lambda: &Rational, order: usize) -> Series {
    let coeffs =
        (0..order).map(
            |k| {
                if k == 0 {
                    Rational::zero()
                } else {
                    pow(lambda, k - 1) / int_to_rat(factorial(k as u64))
                }
            },
        );
    Series::from_coeffs(Var::X, order, coeffs)
}

/// `q_n = e_λ(x)^n` by repeated truncated multiplication.
pub fn e_lambda_basis(lambda: &Rational, order: usize) -> PseudoBasis {
    let e = e_lambda(lambda, order);
    let mut rows = Vec::with_capacity(order);
    let mut acc = Series::one(Var::X, order);
    for _ in 0..order {
        let next = acc.mul(&e).expect("same shape");
        rows.push(acc);
        acc = next;
    }
    PseudoBasis::new(Var::X, rows).expect("valuation-triangular")
}

/// `τ_n(f) = f (f - λ) ⋯ (f - (n-1)λ) / n!` for a delta series `f` in `t`,
/// via the running product `τ_{n+1} = τ_n (f - nλ) / (n+1)`.
///
/// `f` is truncated to `order`; a shorter `f` is an order mismatch.
pub fn tau_basis(f: &Series, lambda: &Rational, order: usize) -> Result<PseudoBasis> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if f.var() != Var::T {
        return Err(Error::VariableMismatch(Var::T, f.var()));
    }
    if f.order() < order {
        return Err(Error::OrderMismatch(order, f.order()));
    }
    let f = f.with_order(order);
    if order >= 2 && !f.is_delta() || !f.constant_term().is_zero() {
        return Err(Error::NotDelta);
    }
    let mut rows = Vec::with_capacity(order);
    let mut acc = Series::one(Var::T, order);
    for n in 0..order {
        let mut factor = f.clone();
        let shift = Series::constant(Var::T, order, lambda * rat(n as i64));
        factor = factor.sub(&shift)?;
        let next = acc.mul(&factor)?.scale(&Rational::new(1.into(), (n as i64 + 1).into()));
        rows.push(acc);
        acc = next;
    }
    PseudoBasis::new(Var::T, rows)
}

/// `τ_n(t)`, the basis identified with `u_n`.
pub fn tau_t_basis(lambda: &Rational, order: usize) -> PseudoBasis {
    tau_basis(&Series::variable(Var::T, order.max(2)), lambda, order).expect("t is delta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ratio;

    fn schoolbook_square(a: &[Rational], n: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    out[i + j] += &a[i] * &a[j];
                }
            }
        }
        out
    }

    #[test]
    fn e_lambda_examples() {
        assert_eq!(e_lambda(&rat(0), 5), Series::variable(Var::X, 5));
        let e1 = e_lambda(&rat(1), 4);
        assert_eq!(e1.coeffs(), &[rat(0), rat(1), ratio(1, 2), ratio(1, 6)]);
        let e2 = e_lambda(&rat(2), 4);
        // λ^{k-1}/k!: 1, 2/2, 4/6
        assert_eq!(e2.coeffs(), &[rat(0), rat(1), rat(1), ratio(2, 3)]);
    }

    #[test]
    fn e_lambda_basis_examples() {
        assert_eq!(e_lambda_basis(&rat(0), 6), PseudoBasis::monomial(Var::X, 6));
        for l in [rat(0), rat(1), ratio(-2, 3)] {
            assert_eq!(e_lambda_basis(&l, 5).row(0), &Series::one(Var::X, 5));
        }
        let b = e_lambda_basis(&rat(1), 5);
        let sq = schoolbook_square(e_lambda(&rat(1), 5).coeffs(), 5);
        assert_eq!(b.row(2).coeffs(), sq.as_slice());
        assert_eq!(b.row(2).coeffs(), &[rat(0), rat(0), rat(1), rat(1), ratio(7, 12)]);
        assert!(b.is_valuation_triangular());
    }

    #[test]
    fn tau_t_examples() {
        let b = tau_t_basis(&rat(0), 5);
        for n in 0..5 {
            let expect = Series::monomial(Var::T, 5, n, Rational::new(1.into(), factorial(n as u64)));
            assert_eq!(b.row(n), &expect);
        }
        for l in [rat(1), ratio(1, 2), rat(-3)] {
            let row2 = tau_t_basis(&l, 4).row(2).clone();
            let expect = Series::from_coeffs(Var::T, 4, [rat(0), -&l / rat(2), ratio(1, 2)]);
            assert_eq!(row2, expect);
            assert!(tau_t_basis(&l, 6).is_degree_triangular());
        }
    }

    #[test]
    fn tau_of_nonlinear_delta() {
        // (t + t^2)(t + t^2 - 1)/2 = -t/2 + t^3 + t^4/2, truncated at 4
        let f = Series::from_ints(Var::T, 4, &[0, 1, 1]);
        let b = tau_basis(&f, &rat(1), 4).unwrap();
        assert_eq!(b.row(2).coeffs(), &[rat(0), ratio(-1, 2), rat(0), rat(1)]);
    }

    #[test]
    fn tau_requires_delta() {
        let sq = Series::from_ints(Var::T, 4, &[0, 0, 1]);
        assert_eq!(tau_basis(&sq, &rat(0), 4).unwrap_err(), Error::NotDelta);
        let shifted = Series::from_ints(Var::T, 4, &[1, 1]);
        assert_eq!(tau_basis(&shifted, &rat(0), 4).unwrap_err(), Error::NotDelta);
    }

    #[test]
    fn expand_examples() {
        let b = e_lambda_basis(&rat(1), 6);
        for k in 0..6 {
            let c = b.expand(b.row(k)).unwrap();
            for (n, cn) in c.iter().enumerate() {
                assert_eq!(*cn, if n == k { rat(1) } else { rat(0) });
            }
        }
        let mono = PseudoBasis::monomial(Var::X, 4);
        assert_eq!(mono.expand(&Series::monomial(Var::X, 4, 2, rat(1))).unwrap(), vec![rat(0), rat(0), rat(1), rat(0)]);
        // x = Σ c_n (e^x - 1)^n  ⇒  c_n are the coefficients of log(1 + u)
        let n = 8;
        let b = e_lambda_basis(&rat(1), n);
        let c = b.expand(&Series::variable(Var::X, n)).unwrap();
        let log1p = Series::from_ints(Var::T, n, &[1, 1]).log().unwrap();
        assert_eq!(c.as_slice(), log1p.coeffs());
        assert_eq!(c[2], ratio(-1, 2));
        assert_eq!(c[3], ratio(1, 3));
    }

    #[test]
    fn singular_family_refuses_expansion() {
        let rows = vec![Series::one(Var::X, 2), Series::one(Var::X, 2)];
        let b = PseudoBasis::new(Var::X, rows).unwrap();
        assert!(!b.is_pseudo_basis());
        assert_eq!(b.expand(&Series::one(Var::X, 2)).unwrap_err(), Error::NotPseudoBasis);
    }

    #[test]
    fn json_shape() {
        let b = PseudoBasis::monomial(Var::X, 2);
        assert_eq!(b.to_json().to_string(), r#"{"var":"x","order":2,"rows":[["1","0"],["0","1"]]}"#);
    }
}
