use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{BinomialTable, Rational};

use super::VerifyReport;

/// Inclusive upper bounds of a box of `(n, k, i, w)` tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub w: usize,
}

impl Bounds {
    pub fn cube(max: usize) -> Self {
        Bounds { n: max, k: max, i: max, w: max }
    }

    fn describe(&self) -> String {
        format!("n<={},k<={},i<={},w<={}", self.n, self.k, self.i, self.w)
    }
}

/// Which side of the binomial identity the recurrence is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Both sides of
/// `Σ_s C(k,s) C(n-k+s,i) C(i,w-s) = Σ_s C(k,w-s) C(n+s-i,s) C(n-k,i-s)`,
/// with `C(m, j)` extended to negative `m` by the falling factorial.
pub fn eqinv_sides(table: &BinomialTable, n: i64, k: i64, i: i64, w: i64) -> (BigInt, BigInt) {
    let mut lhs = BigInt::zero();
    let mut rhs = BigInt::zero();
    for s in 0..=w {
        lhs += table.get(k, s) * table.get(n - k + s, i) * table.get(i, w - s);
        rhs += table.get(k, w - s) * table.get(n + s - i, s) * table.get(n - k, i - s);
    }
    (lhs, rhs)
}

/// Brute-force comparison of both sides over the whole box.
pub fn check_identity_eqinv(bounds: Bounds) -> VerifyReport {
    let mut report = VerifyReport::new("eqinv").param("box", bounds.describe());
    let table = BinomialTable::new(bounds.n + bounds.k + bounds.i + bounds.w + 2);
    let mut tuples = 0u64;
    for n in 0..=bounds.n as i64 {
        for k in 0..=bounds.k as i64 {
            for i in 0..=bounds.i as i64 {
                for w in 0..=bounds.w as i64 {
                    tuples += 1;
                    let (l, r) = eqinv_sides(&table, n, k, i, w);
                    if l != r {
                        report.fail(vec![n, k, i, w], Rational::from_integer(l), Rational::from_integer(r));
                        return report.param("tuples", tuples);
                    }
                }
            }
        }
    }
    report.param("tuples", tuples)
}

/// `(c0, c1, c2)` of the second-order recurrence
/// `c0 F(w) + c1 F(w+1) + c2 F(w+2) = 0` satisfied by both sides.
pub fn zeilberger_coefficients(n: i64, k: i64, i: i64, w: i64) -> (BigInt, BigInt, BigInt) {
    let c0 = (k + i - w) * (k - n + i - w - 1);
    let c1 = k * k - k * n + k * i - 3 * k * w - n * i + 2 * n * w + i * i - 3 * i * w + 2 * w * w - 4 * k + 2 * n
        - 4 * i
        + 5 * w
        + 3;
    let c2 = -(w + 2) * (k - n + i - w - 2);
    (c0.into(), c1.into(), c2.into())
}

fn recurrence_residual(table: &BinomialTable, side: Side, perturb: bool, n: i64, k: i64, i: i64, w: i64) -> BigInt {
    let f = |w: i64| {
        let (l, r) = eqinv_sides(table, n, k, i, w);
        let v = if side == Side::Left { l } else { r };
        if perturb {
            v + BigInt::one()
        } else {
            v
        }
    };
    let (c0, c1, c2) = zeilberger_coefficients(n, k, i, w);
    c0 * f(w) + c1 * f(w + 1) + c2 * f(w + 2)
}

/// Applies the recurrence to one side (optionally `F + 1` as a control) on
/// the box. If the unperturbed recurrence fails on both sides at `w = 0`,
/// the report is flagged as a likely transcription error in the source.
pub fn check_zeilberger_recurrence(side: Side, perturb: bool, bounds: Bounds) -> VerifyReport {
    let mut report = VerifyReport::new("zeilberger")
        .param("side", side.name())
        .param("perturbed", perturb)
        .param("box", bounds.describe());
    let table = BinomialTable::new(bounds.n + bounds.k + bounds.i + bounds.w + 4);
    let mut base_both_fail = None;
    'outer: for n in 0..=bounds.n as i64 {
        for k in 0..=bounds.k as i64 {
            for i in 0..=bounds.i as i64 {
                let l0 = recurrence_residual(&table, Side::Left, false, n, k, i, 0);
                let r0 = recurrence_residual(&table, Side::Right, false, n, k, i, 0);
                if !l0.is_zero() && !r0.is_zero() {
                    base_both_fail = Some([n, k, i]);
                    break 'outer;
                }
            }
        }
    }
    let flag = match base_both_fail {
        Some([n, k, i]) => {
            format!("possible typo in the printed recurrence (both sides fail at n={n},k={k},i={i},w=0)")
        }
        None => "none".to_string(),
    };
    report.set_param("flag", flag);
    for n in 0..=bounds.n as i64 {
        for k in 0..=bounds.k as i64 {
            for i in 0..=bounds.i as i64 {
                for w in 0..=bounds.w as i64 {
                    let res = recurrence_residual(&table, side, perturb, n, k, i, w);
                    if !res.is_zero() {
                        report.fail(vec![n, k, i, w], Rational::from_integer(res), Rational::zero());
                        return report;
                    }
                }
            }
        }
    }
    report
}
