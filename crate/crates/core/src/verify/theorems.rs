use num_traits::{One, Zero};

use crate::baxter::divided_power_failure;
use crate::error::{Error, Result};
use crate::ring::{format_rational, Rational};
use crate::series::{Series, Var};
use crate::umbral::{
    associated_sequence, dual_functionals, e_lambda_basis, pair_classical, t_series_from_functional, tau_basis,
};

use super::{first_mismatch, verify_lambda_binomial, verify_pairing_product, Status, VerifyReport};

/// `[τ_n(t) | e_λ(x)^k]_0 = δ_{n,k}` for all `n, k < N`.
pub fn verify_compatibility(lambda: &Rational, order: usize) -> VerifyReport {
    let mut report = VerifyReport::new("compatibility").param("lambda", format_rational(lambda)).param("order", order);
    let tau = tau_basis(&Series::variable(Var::T, order), lambda, order).expect("t is delta");
    let q = e_lambda_basis(lambda, order);
    for n in 0..order {
        for k in 0..order {
            let v = pair_classical(tau.row(n), q.row(k)).expect("same order");
            let expect = if n == k { Rational::one() } else { Rational::zero() };
            if v != expect {
                report.fail(vec![n as i64, k as i64], v, expect);
                return report;
            }
        }
    }
    report
}

const UCL_TRIALS: usize = 10;

/// The three-way equivalence for the associated sequence `{s_n}` of `f`:
///
/// * `binomial`: `{s_n}` is of λ-binomial type;
/// * `pairing_product`: the product rule for the pairing holds on `{s_n}`;
/// * `divided_power`: the dual functionals satisfy the λ-divided-power table;
/// * `char0`: the dual functionals are `τ_n(f_1)` with `f_1 = f`.
///
/// The report passes only if all four pass; the counterexample is taken from
/// the first failing part, named in `first_failure`.
pub fn verify_theorem_ucl(f: &Series, lambda: &Rational, order: usize) -> Result<VerifyReport> {
    if !f.is_delta() {
        return Err(Error::NotDelta);
    }
    let f = f.with_order(order);
    let mut report =
        VerifyReport::new("ucl").param("lambda", format_rational(lambda)).param("order", order).param("f", &f);
    let s = associated_sequence(&f, lambda, order)?;
    let duals = dual_functionals(&s, lambda)?;

    let mut parts = vec![
        ("binomial", verify_lambda_binomial(&s, lambda)),
        ("pairing_product", verify_pairing_product(&s, lambda, UCL_TRIALS, 0)),
    ];

    let mut dp = VerifyReport::new("divided_power");
    if let Some((m, n, lhs, rhs)) = divided_power_failure(&duals) {
        let (c, l, r) = first_mismatch(lhs.coeffs(), rhs.coeffs()).expect("reported unequal");
        dp.fail(vec![m as i64, n as i64, c as i64], l.clone(), r.clone());
    }
    parts.push(("divided_power", dp));

    let mut char0 = VerifyReport::new("char0");
    let f1 = t_series_from_functional(&duals[1]);
    if let Some((d, l, r)) = first_mismatch(f1.coeffs(), f.coeffs()) {
        char0.fail(vec![1, d as i64], l.clone(), r.clone());
    } else {
        let tau = tau_basis(&f1, lambda, order)?;
        for (n, v) in duals.iter().enumerate() {
            let fn_t = t_series_from_functional(v);
            if let Some((d, l, r)) = first_mismatch(fn_t.coeffs(), tau.row(n).coeffs()) {
                char0.fail(vec![n as i64, d as i64], l.clone(), r.clone());
                break;
            }
        }
    }
    parts.push(("char0", char0));

    for (name, part) in parts {
        report.set_param(name, part.status.as_str());
        if part.status == Status::Fail && report.passed() {
            report.set_param("first_failure", name);
            let c = part.counterexample.expect("failure carries counterexample");
            report.fail(c.indices, c.lhs, c.rhs);
        }
    }
    Ok(report)
}
