use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baxter::{baxter_defect, BaxterElement};
use crate::ring::{format_rational, Rational};

use super::{first_mismatch, VerifyReport};

/// Operators plugged into the Baxter identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestOperator {
    /// `u_n ↦ u_{n+1}`, the Baxter operator of the free algebra.
    Standard,
    /// `u_n ↦ u_{n+2}`, a negative control.
    Shift2,
}

impl TestOperator {
    fn apply(self, a: &BaxterElement) -> BaxterElement {
        match self {
            TestOperator::Standard => a.baxter_operator(),
            TestOperator::Shift2 => a.shift(2),
        }
    }

    fn name(self) -> &'static str {
        match self {
            TestOperator::Standard => "standard",
            TestOperator::Shift2 => "shift2",
        }
    }
}

pub(crate) fn random_element(rng: &mut ChaCha8Rng, weight: &Rational, order: usize, support: usize) -> BaxterElement {
    let coeffs = (0..order).map(|n| {
        if n < support {
            Rational::from_integer(rng.gen_range(-9i64..=9).into())
        } else {
            Rational::from_integer(0.into())
        }
    });
    BaxterElement::from_coeffs(weight.clone(), order, coeffs.collect::<Vec<_>>())
}

/// `P(a)P(b) = P(aP(b)) + P(bP(a)) + λP(ab)` on random pairs.
///
/// `F^N` is an ideal mapped into itself by `P`, so the comparison in the
/// quotient is exact for full-support elements.
pub fn verify_baxter_axiom(lambda: &Rational, order: usize, trials: usize, seed: u64) -> VerifyReport {
    verify_baxter_axiom_with(TestOperator::Standard, lambda, order, trials, seed)
}

pub fn verify_baxter_axiom_with(
    op: TestOperator,
    lambda: &Rational,
    order: usize,
    trials: usize,
    seed: u64,
) -> VerifyReport {
    let mut report = VerifyReport::new("baxter-axiom")
        .param("lambda", format_rational(lambda))
        .param("order", order)
        .param("trials", trials)
        .param("seed", seed)
        .param("op", op.name());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let a = random_element(&mut rng, lambda, order, order);
        let b = random_element(&mut rng, lambda, order, order);
        let (lhs, rhs) = baxter_defect(|x| op.apply(x), &a, &b).expect("same shape");
        if let Some((n, l, r)) = first_mismatch(lhs.coeffs(), rhs.coeffs()) {
            report.fail(vec![trial as i64, n as i64], l.clone(), r.clone());
            break;
        }
    }
    report
}
