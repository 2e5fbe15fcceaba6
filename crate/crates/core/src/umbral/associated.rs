use crate::baxter::BaxterElement;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::Rational;
use crate::series::{Series, Var};

use super::basis::{e_lambda_basis, tau_basis, tau_t_basis, PseudoBasis};

/// The associated sequence `{s_k}` of a delta series `f(t)`: the basis of
/// the `x` side dual to `{τ_n(f)}` under the λ-pairing.
///
/// With `A` the coordinates of `τ_n(f)` on `{τ_m(t)} = {u_m}`, the rows are
/// `s_k = Σ_m B[k][m] q_m` where `B = (A^{-1})^T`, so that
/// `⟨τ_n(f) | s_k⟩_λ = (A B^T)[n][k] = δ_{n,k}`.
///
/// At λ = 0, `A` is upper triangular (`f^n/n!` has valuation `n`). For
/// λ ≠ 0 the rows `τ_n(f)` are truncated series, not degree-`n` polynomials,
/// so `A` is a general matrix and is inverted by exact elimination.
pub fn associated_sequence(f: &Series, lambda: &Rational, order: usize) -> Result<PseudoBasis> {
    let tau_f = tau_basis(f, lambda, order)?;
    let tau_t = tau_t_basis(lambda, order);
    let a = Matrix::from_rows(tau_f.rows().iter().map(|r| tau_t.expand(r)).collect::<Result<Vec<_>>>()?);
    let b = a.inverse().ok_or(Error::NotPseudoBasis)?.transpose();
    let q = e_lambda_basis(lambda, order);
    let rows = b.rows().iter().map(|coords| q.combine(coords)).collect();
    PseudoBasis::new(Var::X, rows)
}

/// The functionals `{v_n}` with `⟨v_n | s_k⟩_λ = δ_{n,k}`.
pub fn dual_functionals(s: &PseudoBasis, lambda: &Rational) -> Result<Vec<BaxterElement>> {
    let order = s.order();
    let q = e_lambda_basis(lambda, order);
    let p = Matrix::from_rows(s.rows().iter().map(|r| q.expand(r)).collect::<Result<Vec<_>>>()?);
    let v = p.inverse().ok_or(Error::NotPseudoBasis)?.transpose();
    Ok(v.rows().into_iter().map(|c| BaxterElement::from_coeffs(lambda.clone(), order, c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use crate::umbral::pairing::{functional_from_t, pair_lambda};
    use num_traits::{One, Zero};

    #[test]
    fn identity_delta_gives_q() {
        for l in [rat(0), rat(1), ratio(1, 2), ratio(-2, 3)] {
            let s = associated_sequence(&Series::variable(Var::T, 6), &l, 6).unwrap();
            assert_eq!(s, e_lambda_basis(&l, 6));
        }
        let s = associated_sequence(&Series::variable(Var::T, 6), &rat(0), 6).unwrap();
        assert_eq!(s, PseudoBasis::monomial(Var::X, 6));
    }

    #[test]
    fn dual_of_q_is_u() {
        let l = ratio(1, 2);
        let v = dual_functionals(&e_lambda_basis(&l, 5), &l).unwrap();
        for (n, vn) in v.iter().enumerate() {
            assert_eq!(*vn, BaxterElement::basis(l.clone(), 5, n));
        }
    }

    #[test]
    fn duality_holds_by_construction() {
        let f = Series::from_ints(Var::T, 7, &[0, 2, -1, 3]);
        for l in [rat(0), rat(1)] {
            let s = associated_sequence(&f, &l, 7).unwrap();
            let q = e_lambda_basis(&l, 7);
            let tau_f = tau_basis(&f, &l, 7).unwrap();
            for n in 0..7 {
                let u = functional_from_t(tau_f.row(n), &l).unwrap();
                for k in 0..7 {
                    let v = pair_lambda(&u, s.row(k), &q).unwrap();
                    if n == k {
                        assert!(v.is_one());
                    } else {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_delta() {
        let f = Series::from_ints(Var::T, 5, &[1, 1]);
        assert_eq!(associated_sequence(&f, &rat(0), 5).unwrap_err(), Error::NotDelta);
    }
}
