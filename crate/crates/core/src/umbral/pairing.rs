use num_traits::Zero;

use crate::baxter::BaxterElement;
use crate::error::{Error, Result};
use crate::ring::{factorial, int_to_rat, Rational};
use crate::series::{Series, Var};

use super::basis::{tau_t_basis, PseudoBasis};

/// `⟨u | p⟩_λ`, determined by `⟨u_n | q_k⟩ = δ_{n,k}`: expand `p` on `q`
/// and read off `Σ_n u_n c_n`.
pub fn pair_lambda(u: &BaxterElement, p: &Series, q: &PseudoBasis) -> Result<Rational> {
    if u.order() != q.order() {
        return Err(Error::OrderMismatch(u.order(), q.order()));
    }
    let c = q.expand(p)?;
    Ok(u.coeffs().iter().zip(&c).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
}

/// `[f | p]_0 = Σ_k k! f_k p_k`, the pairing making `t^k/k!` dual to `x^k`.
///
/// The truncated sum equals the true pairing when `f` is a polynomial of
/// degree `< N`, which holds for every `τ`-basis row.
pub fn pair_classical(f: &Series, p: &Series) -> Result<Rational> {
    if f.var() != Var::T {
        return Err(Error::VariableMismatch(Var::T, f.var()));
    }
    if p.var() != Var::X {
        return Err(Error::VariableMismatch(Var::X, p.var()));
    }
    if f.order() != p.order() {
        return Err(Error::OrderMismatch(f.order(), p.order()));
    }
    let mut acc = Rational::zero();
    for (k, (a, b)) in f.coeffs().iter().zip(p.coeffs()).enumerate() {
        if !a.is_zero() && !b.is_zero() {
            acc += a * b * int_to_rat(factorial(k as u64));
        }
    }
    Ok(acc)
}

/// The identification `τ_n(t) ↦ u_n`: coordinates of `g(t)` on `{τ_n(t)}`.
pub fn functional_from_t(g: &Series, lambda: &Rational) -> Result<BaxterElement> {
    let basis = tau_t_basis(lambda, g.order());
    let c = basis.expand(g)?;
    Ok(BaxterElement::from_coeffs(lambda.clone(), g.order(), c))
}

/// Inverse of [`functional_from_t`]: `Σ_n u_n τ_n(t)`.
pub fn t_series_from_functional(u: &BaxterElement) -> Series {
    tau_t_basis(u.weight(), u.order()).combine(u.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use crate::umbral::basis::e_lambda_basis;

    #[test]
    fn lambda_pairing_is_dual_to_q() {
        for l in [rat(0), rat(1), ratio(1, 2)] {
            let q = e_lambda_basis(&l, 7);
            for n in 0..7 {
                for k in 0..7 {
                    let u = BaxterElement::basis(l.clone(), 7, n);
                    let v = pair_lambda(&u, q.row(k), &q).unwrap();
                    assert_eq!(v, if n == k { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn lambda_pairing_bilinear() {
        let l = rat(1);
        let q = e_lambda_basis(&l, 5);
        let zero = BaxterElement::zero(l.clone(), 5);
        assert_eq!(pair_lambda(&zero, q.row(3), &q).unwrap(), rat(0));
        let u = BaxterElement::from_coeffs(l.clone(), 5, [rat(1), rat(2)]);
        assert_eq!(pair_lambda(&u, &q.row(1).scale(&rat(3)), &q).unwrap(), rat(6));
    }

    #[test]
    fn classical_pairing_examples() {
        let n = 6;
        for k in 0..n {
            for m in 0..n {
                let f = Series::monomial(Var::T, n, k, Rational::new(1.into(), factorial(k as u64)));
                let p = Series::monomial(Var::X, n, m, rat(1));
                let v = pair_classical(&f, &p).unwrap();
                assert_eq!(v, if k == m { rat(1) } else { rat(0) });
            }
        }
        let f = Series::variable(Var::T, 4);
        let p = Series::from_coeffs(Var::X, 4, [rat(0), rat(1), ratio(1, 2)]);
        assert_eq!(pair_classical(&f, &p).unwrap(), rat(1));
    }

    #[test]
    fn tau_two_against_e_squared() {
        // τ_{1,2}(t) = t^2/2 - t/2 against (e^x - 1)^2
        let n = 8;
        let tau2 = tau_t_basis(&rat(1), n).row(2).clone();
        let e2 = e_lambda_basis(&rat(1), n).row(2).clone();
        assert_eq!(pair_classical(&tau2, &e2).unwrap(), rat(1));
    }

    #[test]
    fn t_identification_round_trip() {
        let l = ratio(-2, 3);
        let g = Series::from_ints(Var::T, 6, &[3, -1, 4, 1, -5, 9]);
        let u = functional_from_t(&g, &l).unwrap();
        assert_eq!(t_series_from_functional(&u), g);
        let tau = tau_t_basis(&l, 6);
        assert_eq!(functional_from_t(tau.row(4), &l).unwrap(), BaxterElement::basis(l.clone(), 6, 4));
    }
}
