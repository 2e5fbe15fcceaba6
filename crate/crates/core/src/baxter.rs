//! The free Baxter algebra `U_λ C = ∏ C u_n` of weight λ on the base ring.
//!
//! Multiplication on basis elements is
//!
//! ```text
//! u_m u_n = Σ_k C(m+n-k, n) C(n, k) λ^k u_{m+n-k}
//! ```
//!
//! and the Baxter operator is the index shift `u_n ↦ u_{n+1}`. The lowest
//! index occurring in `u_m u_n` is `max(m, n)`, so the span of `u_n` for
//! `n >= N` is an ideal and truncation at `N` is a ring quotient: every
//! stored coefficient is exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{format_rational, pow, BinomialTable, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaxterElement {
    weight: Rational,
    coeffs: Vec<Rational>,
}

impl BaxterElement {
    pub fn zero(weight: Rational, order: usize) -> Self {
        BaxterElement { weight, coeffs: vec![Rational::zero(); order] }
    }

    /// `c * u_index` (zero if the index is truncated away).
    pub fn basis(weight: Rational, order: usize, index: usize) -> Self {
        let mut e = BaxterElement::zero(weight, order);
        if index < order {
            e.coeffs[index] = Rational::one();
        }
        e
    }

    pub fn one(weight: Rational, order: usize) -> Self {
        BaxterElement::basis(weight, order, 0)
    }

    pub fn from_coeffs(weight: Rational, order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut c: Vec<Rational> = coeffs.into_iter().take(order).collect();
        c.resize(order, Rational::zero());
        BaxterElement { weight, coeffs: c }
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Largest index with a nonzero coefficient.
    pub fn support_end(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
    }

    fn check(&self, other: &BaxterElement) -> Result<()> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(format_rational(&self.weight), format_rational(&other.weight)));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &BaxterElement) -> Result<BaxterElement> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(BaxterElement { weight: self.weight.clone(), coeffs })
    }

    pub fn sub(&self, other: &BaxterElement) -> Result<BaxterElement> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(BaxterElement { weight: self.weight.clone(), coeffs })
    }

    pub fn scale(&self, c: &Rational) -> BaxterElement {
        BaxterElement { weight: self.weight.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &BaxterElement) -> Result<()> {
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

    /// Product in `U_λ C`, truncated at the common order.
    ///
    /// Summed over integers: with `λ = p/q` and common denominators `d_a`,
    /// `d_b`, every term is scaled by `d_a d_b q^N`, and each output
    /// coefficient is reduced once at the end.
    pub fn mul(&self, other: &BaxterElement) -> Result<BaxterElement> {
        self.check(other)?;
        let n = self.order();
        let (num_a, den_a) = common_denominator(&self.coeffs);
        let (num_b, den_b) = common_denominator(&other.coeffs);
        let p = self.weight.numer();
        let q = self.weight.denom();
        // p^k q^(n-k)
        let weights: Vec<BigInt> =
            (0..=n).map(|k| num_traits::pow(p.clone(), k) * num_traits::pow(q.clone(), n - k)).collect();
        let table = BinomialTable::new(2 * n);
        let mut acc = vec![BigInt::zero(); n];
        for (m, a) in num_a.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in num_b.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                // C(j, k) vanishes for k > j, and u_{m+j-k} with k ≤ m
                for (k, w) in weights.iter().enumerate().take(m.min(j) + 1) {
                    if w.is_zero() {
                        continue;
                    }
                    let idx = m + j - k;
                    if idx >= n {
                        continue;
                    }
                    let c = table.get(idx as i64, j as i64) * table.get(j as i64, k as i64);
                    acc[idx] += &ab * c * w;
                }
            }
        }
        let den = den_a * den_b * num_traits::pow(q.clone(), n);
        let coeffs = acc.into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Ok(BaxterElement { weight: self.weight.clone(), coeffs })
    }

    /// The Baxter operator `u_n ↦ u_{n+1}`; the top coefficient falls off.
    pub fn baxter_operator(&self) -> BaxterElement {
        self.shift(1)
    }

    /// `u_n ↦ u_{n+by}`.
    pub fn shift(&self, by: usize) -> BaxterElement {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + by < n {
                out[i + by] = c.clone();
            }
        }
        BaxterElement { weight: self.weight.clone(), coeffs: out }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("element serializes")
    }
}

/// `u_m u_n` expanded on the basis, with exact integer-times-λ^k coefficients.
pub fn basis_product(weight: &Rational, order: usize, m: usize, n: usize) -> BaxterElement {
    BaxterElement::basis(weight.clone(), order, m)
        .mul(&BaxterElement::basis(weight.clone(), order, n))
        .expect("same shape")
}

/// Residual of the Baxter identity `P(a)P(b) - P(a P(b)) - P(b P(a)) - λ P(ab)`
/// for an arbitrary linear operator `op`.
pub fn baxter_defect<F>(op: F, a: &BaxterElement, b: &BaxterElement) -> Result<(BaxterElement, BaxterElement)>
where
    F: Fn(&BaxterElement) -> BaxterElement,
{
    let lhs = op(a).mul(&op(b))?;
    let mut rhs = op(&a.mul(&op(b))?);
    rhs = rhs.add(&op(&b.mul(&op(a))?))?;
    rhs.add_scaled(a.weight(), &op(&a.mul(b)?))?;
    Ok((lhs, rhs))
}

/// A candidate basis `{v_n}` of `U_λ C / F^N` given by its coordinates on
/// `{u_n}`: row `n` is `v_n`.
///
/// A pseudo-basis for the filtration topology has `v_n ∈ F^n` with nonzero
/// `u_n` coefficient, i.e. the coordinate matrix is upper triangular with
/// nonzero diagonal. Then `v`-coordinates below `N` are determined by the
/// quotient, and the shifted operator `v_n ↦ v_{n+1}` maps `F^N` into
/// itself, so it is well defined on the truncation.
#[derive(Debug, Clone)]
pub struct ElementBasis {
    rows: Vec<BaxterElement>,
    inverse: Matrix,
}

impl ElementBasis {
    pub fn new(rows: Vec<BaxterElement>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        for r in &rows {
            rows[0].check(r)?;
        }
        if rows[0].order() != n {
            return Err(Error::OrderMismatch(rows[0].order(), n));
        }
        let m = Matrix::from_rows(rows.iter().map(|r| r.coeffs.clone()).collect());
        for i in 0..n {
            if m.get(i, i).is_zero() || (0..i).any(|j| !m.get(i, j).is_zero()) {
                return Err(Error::NotPseudoBasis);
            }
        }
        let inverse = m.inverse().ok_or(Error::NotPseudoBasis)?;
        Ok(ElementBasis { rows, inverse })
    }

    pub fn rows(&self) -> &[BaxterElement] {
        &self.rows
    }

    pub fn weight(&self) -> &Rational {
        self.rows[0].weight()
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates of `a` on `{v_n}`.
    pub fn coordinates(&self, a: &BaxterElement) -> Vec<Rational> {
        self.inverse.left_apply(a.coeffs())
    }

    /// `v_n ↦ v_{n+1}` extended linearly; `v_N ∈ F^N` vanishes in the quotient.
    pub fn shift_operator(&self, a: &BaxterElement) -> BaxterElement {
        let c = self.coordinates(a);
        let n = self.order();
        let mut out = BaxterElement::zero(self.weight().clone(), n);
        for (i, ci) in c.iter().enumerate() {
            if i + 1 < n {
                out.add_scaled(ci, &self.rows[i + 1]).expect("same shape");
            }
        }
        out
    }

    /// First `(m, n)` with `m + n < N` where
    /// `v_m v_n ≠ Σ_k C(m+n-k, n) C(n, k) λ^k v_{m+n-k}`.
    pub fn divided_power_failure(&self) -> Option<(usize, usize, BaxterElement, BaxterElement)> {
        divided_power_failure(&self.rows)
    }
}

/// Checks the λ-divided-power multiplication table on any family of
/// elements, for all `m + n < len`.
pub fn divided_power_failure(rows: &[BaxterElement]) -> Option<(usize, usize, BaxterElement, BaxterElement)> {
    let len = rows.len();
    let weight = rows.first()?.weight().clone();
    let table = BinomialTable::new(2 * len);
    for m in 0..len {
        for n in 0..len - m {
            let lhs = rows[m].mul(&rows[n]).expect("same shape");
            let mut rhs = BaxterElement::zero(weight.clone(), rows[0].order());
            for k in 0..=m.min(n) {
                let c = Rational::from_integer(table.get((m + n - k) as i64, n as i64) * table.get(n as i64, k as i64))
                    * pow(&weight, k);
                rhs.add_scaled(&c, &rows[m + n - k]).expect("same shape");
            }
            if lhs != rhs {
                return Some((m, n, lhs, rhs));
            }
        }
    }
    None
}

/// Integer numerators over the least common denominator.
fn common_denominator(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = v.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
    let nums = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

impl Serialize for BaxterElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BaxterElement", 3)?;
        st.serialize_field("lambda", &format_rational(&self.weight))?;
        st.serialize_field("order", &self.order())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Highest index first: `2*u2 + 1/2*u1`.
impl fmt::Display for BaxterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().map(|(n, c)| (c, format!("u{n}")));
        f.write_str(&crate::series::render_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn weights() -> Vec<Rational> {
        vec![rat(0), rat(1), rat(-1), ratio(2, 3)]
    }

    #[test]
    fn weight_zero_is_divided_powers() {
        let p = basis_product(&rat(0), 6, 1, 2);
        assert_eq!(p, BaxterElement::basis(rat(0), 6, 3).scale(&rat(3)));
        // only the k = 0 term survives: u_m u_n = C(m+n, m) u_{m+n}
        for m in 0..4 {
            for n in 0..4 {
                let expect = BaxterElement::basis(rat(0), 8, m + n)
                    .scale(&crate::ring::int_to_rat(crate::ring::binomial((m + n) as i64, m as i64).unwrap()));
                assert_eq!(basis_product(&rat(0), 8, m, n), expect);
            }
        }
    }

    #[test]
    fn product_matches_sequence_model() {
        // u_n ↦ (λ^n C(j, n))_j is a ring map to pointwise sequences and
        // only sees indices ≤ j, so it is exact on the truncation
        let n = 9;
        let table = BinomialTable::new(n);
        for l in [rat(1), rat(-1), ratio(2, 3)] {
            let a = BaxterElement::from_coeffs(l.clone(), n, (0..n as i64).map(|i| ratio(i * i - 3, i + 1)));
            let b = BaxterElement::from_coeffs(l.clone(), n, (0..n as i64).map(|i| rat(2 - i)));
            let ab = a.mul(&b).unwrap();
            let eval = |e: &BaxterElement, j: usize| -> Rational {
                (0..=j).map(|k| e.coeff(k) * pow(&l, k) * table.rat(j as i64, k as i64)).sum()
            };
            for j in 0..n {
                assert_eq!(eval(&a, j) * eval(&b, j), eval(&ab, j), "λ={l}, j={j}");
            }
        }
    }

    #[test]
    fn unit_and_square_of_u1() {
        for w in weights() {
            for n in 0..6 {
                assert_eq!(basis_product(&w, 6, 0, n), BaxterElement::basis(w.clone(), 6, n));
            }
            // u1 u1 = 2 u2 + λ u1
            let mut expect = BaxterElement::basis(w.clone(), 6, 2).scale(&rat(2));
            expect.add_scaled(&w, &BaxterElement::basis(w.clone(), 6, 1)).unwrap();
            assert_eq!(basis_product(&w, 6, 1, 1), expect);
        }
    }

    #[test]
    fn operator_shifts() {
        let w = rat(1);
        assert_eq!(BaxterElement::one(w.clone(), 4).baxter_operator(), BaxterElement::basis(w.clone(), 4, 1));
        assert!(BaxterElement::zero(w.clone(), 4).baxter_operator().is_zero());
        let a = BaxterElement::from_coeffs(w.clone(), 5, [rat(0), rat(2), rat(3)]);
        let b = BaxterElement::from_coeffs(w.clone(), 5, [rat(0), rat(0), rat(2), rat(3)]);
        assert_eq!(a.baxter_operator(), b);
        // top coefficient is truncated away
        assert!(BaxterElement::basis(w, 4, 3).baxter_operator().is_zero());
    }

    #[test]
    fn mismatch_errors() {
        let a = BaxterElement::one(rat(1), 3);
        assert!(matches!(a.mul(&BaxterElement::one(rat(0), 3)), Err(Error::WeightMismatch(..))));
        assert_eq!(a.mul(&BaxterElement::one(rat(1), 4)), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn baxter_axiom_on_basis_pairs() {
        for w in weights() {
            for m in 0..5 {
                for n in 0..5 {
                    let a = BaxterElement::basis(w.clone(), 10, m);
                    let b = BaxterElement::basis(w.clone(), 10, n);
                    let (l, r) = baxter_defect(|e| e.baxter_operator(), &a, &b).unwrap();
                    assert_eq!(l, r, "λ={w} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn display_is_highest_index_first() {
        let e = basis_product(&ratio(1, 2), 4, 1, 1);
        assert_eq!(e.to_string(), "2*u2 + 1/2*u1");
        assert_eq!(BaxterElement::basis(rat(0), 6, 5).to_string(), "u5");
        assert_eq!(BaxterElement::zero(rat(0), 2).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let e = BaxterElement::from_coeffs(ratio(1, 2), 2, [rat(1), ratio(-3, 4)]);
        assert_eq!(e.to_json().to_string(), r#"{"lambda":"1/2","order":2,"coeffs":["1","-3/4"]}"#);
    }

    #[test]
    fn identity_basis_is_divided_power_and_baxter() {
        for w in weights() {
            let rows = (0..8).map(|n| BaxterElement::basis(w.clone(), 8, n)).collect();
            let basis = ElementBasis::new(rows).unwrap();
            assert!(basis.divided_power_failure().is_none());
        }
    }

    #[test]
    fn lower_triangular_rows_rejected() {
        let w = rat(1);
        let mut rows: Vec<_> = (0..3).map(|n| BaxterElement::basis(w.clone(), 3, n)).collect();
        rows[2] = BaxterElement::from_coeffs(w, 3, [rat(0), rat(1), rat(1)]);
        assert_eq!(ElementBasis::new(rows).unwrap_err(), Error::NotPseudoBasis);
    }
}
