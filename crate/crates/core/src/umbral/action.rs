use num_traits::Zero;

use crate::baxter::BaxterElement;
use crate::bivariate::{substitute_sum, BiSeries};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{pow, BinomialTable, Rational};
use crate::series::Series;

use super::basis::PseudoBasis;

/// `u_k p` for the left action of `U_λ C` on series, from
/// `u_k q_n = Σ_{i=0}^{k} λ^i C(n, k) C(k, i) q_{n-k+i}`.
///
/// `u_k` lowers the `q`-index by up to `k`. When `p` is a finite combination
/// of `q_0, …, q_{N-1}` the result is exact; for a genuinely infinite series
/// only degrees below `N - k` are.
pub fn u_action(k: usize, p: &Series, q: &PseudoBasis, lambda: &Rational) -> Result<Series> {
    let c = q.expand(p)?;
    let coords = act_on_coordinates(k, &c, lambda);
    Ok(q.combine(&coords))
}

fn act_on_coordinates(k: usize, c: &[Rational], lambda: &Rational) -> Vec<Rational> {
    let n_max = c.len();
    let table = BinomialTable::new(n_max.max(k));
    let mut out = vec![Rational::zero(); n_max];
    for (n, cn) in c.iter().enumerate() {
        if cn.is_zero() || k > n {
            continue;
        }
        let top = table.rat(n as i64, k as i64);
        for i in 0..=k {
            let idx = n - k + i;
            let coef = pow(lambda, i) * &top * table.rat(k as i64, i as i64);
            if !coef.is_zero() {
                out[idx] += cn * coef;
            }
        }
    }
    out
}

/// The action of a general element `u = Σ u_k u_k`.
pub fn act(u: &BaxterElement, p: &Series, q: &PseudoBasis) -> Result<Series> {
    if u.order() != q.order() {
        return Err(Error::OrderMismatch(u.order(), q.order()));
    }
    let c = q.expand(p)?;
    let mut coords = vec![Rational::zero(); c.len()];
    for (k, uk) in u.coeffs().iter().enumerate() {
        if uk.is_zero() {
            continue;
        }
        for (o, v) in coords.iter_mut().zip(act_on_coordinates(k, &c, u.weight())) {
            *o += uk * v;
        }
    }
    Ok(q.combine(&coords))
}

/// `Δ(q_n) = Σ c[a][b] q_a ⊗ q_b` with
/// `c[a][b] = Σ_{n+i-j=a, j=b} λ^i C(n, j) C(j, i)`.
pub fn coproduct_matrix(n: usize, lambda: &Rational, order: usize) -> Result<Matrix> {
    if n >= order {
        return Err(Error::IndexOutOfRange { index: n, order });
    }
    let table = BinomialTable::new(order);
    let mut m = Matrix::zeros(order, order);
    for j in 0..=n {
        for i in 0..=j {
            let a = n + i - j;
            let c = pow(lambda, i) * table.rat(n as i64, j as i64) * table.rat(j as i64, i as i64);
            if c.is_zero() {
                continue;
            }
            let v = m.get(a, j) + c;
            m.set(a, j, v);
        }
    }
    Ok(m)
}

/// The formal shift `E^y p(x) = p(x + y)`.
pub fn shift_bivariate(p: &Series) -> BiSeries {
    substitute_sum(p)
}

/// Applies `u_k` to the `x` variable of `b(x, y)`, treating `y`-coefficients
/// as scalars (`C[[y]]` scalar extension).
///
/// Slice `y^j` is a series of order `N - j`; it is acted on with the leading
/// block of `q`, which is exact for the valuation-triangular `q` used here.
/// The result is exact in total degrees below `N - k`.
pub fn act_on_x(k: usize, b: &BiSeries, q: &PseudoBasis, lambda: &Rational) -> Result<BiSeries> {
    let n = b.order();
    if q.order() < n {
        return Err(Error::OrderMismatch(n, q.order()));
    }
    act_on_x_with(k, b, &slice_bases(q, n), lambda)
}

/// Leading blocks `q.truncate(n - j)` for `j < n`, as used by [`act_on_x_with`].
pub fn slice_bases(q: &PseudoBasis, n: usize) -> Vec<PseudoBasis> {
    (0..n).map(|j| q.truncate(n - j)).collect()
}

/// [`act_on_x`] with the truncated bases supplied by the caller.
pub fn act_on_x_with(k: usize, b: &BiSeries, bases: &[PseudoBasis], lambda: &Rational) -> Result<BiSeries> {
    let n = b.order();
    if bases.len() != n {
        return Err(Error::OrderMismatch(n, bases.len()));
    }
    let slices =
        bases.iter().enumerate().map(|(j, qj)| u_action(k, &b.y_slice(j), qj, lambda)).collect::<Result<Vec<_>>>()?;
    Ok(BiSeries::from_y_slices(n, &slices))
}
