use crate::ring::{format_rational, Rational};
use crate::umbral::{act_on_x_with, e_lambda_basis, shift_bivariate, slice_bases, u_action};

use super::VerifyReport;

/// `E^y (u_k q_n) = u_k (E^y q_n)` for all `k, n < N`, compared exactly
/// below total degree `N`.
///
/// `u_k` lowers the `q`-index, so both sides are computed at the working
/// order `2N - 1`; the action on the `x` variable is then exact below
/// `2N - 1 - k ≥ N`.
pub fn verify_shift_invariance(lambda: &Rational, order: usize) -> VerifyReport {
    let work = 2 * order - 1;
    let mut report = VerifyReport::new("shift-invariance")
        .param("lambda", format_rational(lambda))
        .param("order", order)
        .param("working_order", work);
    let q = e_lambda_basis(lambda, work);
    let slices = slice_bases(&q, work);
    for n in 0..order {
        let shifted = shift_bivariate(q.row(n));
        for k in 0..order {
            let lhs = shift_bivariate(&u_action(k, q.row(n), &q, lambda).expect("same basis")).truncate(order);
            let rhs = act_on_x_with(k, &shifted, &slices, lambda).expect("same basis").truncate(order);
            if let Some((i, j)) = lhs.first_difference(&rhs) {
                report.fail(vec![k as i64, n as i64, i as i64, j as i64], lhs.coeff(i, j), rhs.coeff(i, j));
                return report;
            }
        }
    }
    report
}
