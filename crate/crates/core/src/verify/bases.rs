use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baxter::BaxterElement;
use crate::bivariate::{substitute_sum, BiSeries};
use crate::ring::{format_rational, pow, BinomialTable, Rational};
use crate::series::Series;
use crate::umbral::{e_lambda_basis, PseudoBasis};

use super::baxter::random_element;
use super::{first_mismatch, VerifyReport};

/// `v_m v_n = Σ_k C(m+n-k, n) C(n, k) λ^k v_{m+n-k}` for all `m + n < N`,
/// with the products taken as truncated series.
pub fn verify_divided_power(rows: &PseudoBasis, lambda: &Rational) -> VerifyReport {
    let order = rows.order();
    let mut report = VerifyReport::new("divided-power").param("lambda", format_rational(lambda)).param("order", order);
    let table = BinomialTable::new(2 * order);
    for m in 0..order {
        for n in 0..order - m {
            let lhs = rows.row(m).mul(rows.row(n)).expect("same shape");
            let mut rhs = Series::zero(rows.var(), order);
            for k in 0..=m.min(n) {
                let c = table.rat((m + n - k) as i64, n as i64) * table.rat(n as i64, k as i64) * pow(lambda, k);
                rhs.add_scaled(&c, rows.row(m + n - k)).expect("same shape");
            }
            if let Some((d, l, r)) = first_mismatch(lhs.coeffs(), rhs.coeffs()) {
                report.fail(vec![m as i64, n as i64, d as i64], l.clone(), r.clone());
                return report;
            }
        }
    }
    report
}

/// `Σ_{k,i} λ^k C(n,i) C(i,k) p_{a}(x) p_{b}(y)` where `(a, b)` is
/// `(n+k-i, i)`, or `(i, n+k-i)` for the swapped form.
fn binomial_double_sum(b: &PseudoBasis, lambda: &Rational, n: usize, table: &BinomialTable, swapped: bool) -> BiSeries {
    let order = b.order();
    let mut acc = BiSeries::zero(order);
    for i in 0..=n {
        for k in 0..=i {
            let c = pow(lambda, k) * table.rat(n as i64, i as i64) * table.rat(i as i64, k as i64);
            if c.is_zero() {
                continue;
            }
            let (ix, iy) = if swapped { (i, n + k - i) } else { (n + k - i, i) };
            let term = BiSeries::tensor(b.row(ix), b.row(iy)).expect("same order");
            acc.add_scaled(&c, &term).expect("same order");
        }
    }
    acc
}

/// `p_n(x + y) = Σ_{k,i} λ^k C(n,i) C(i,k) p_{n+k-i}(x) p_i(y)` for all
/// `n < N`, compared on every total degree below `N`.
pub fn verify_lambda_binomial(b: &PseudoBasis, lambda: &Rational) -> VerifyReport {
    let order = b.order();
    let mut report = VerifyReport::new("binomial").param("lambda", format_rational(lambda)).param("order", order);
    let table = BinomialTable::new(order);
    for n in 0..order {
        let lhs = substitute_sum(b.row(n));
        let rhs = binomial_double_sum(b, lambda, n, &table, false);
        if let Some((i, j)) = lhs.first_difference(&rhs) {
            report.fail(vec![n as i64, i as i64, j as i64], lhs.coeff(i, j), rhs.coeff(i, j));
            return report;
        }
    }
    report
}

/// The original double sum against its `x ↔ y` reindexed form. The two
/// agree for any family, λ-binomial or not.
pub fn verify_binomial_symmetry(b: &PseudoBasis, lambda: &Rational) -> VerifyReport {
    let order = b.order();
    let mut report = VerifyReport::new("symmetry").param("lambda", format_rational(lambda)).param("order", order);
    let table = BinomialTable::new(order);
    for n in 0..order {
        let lhs = binomial_double_sum(b, lambda, n, &table, false);
        let rhs = binomial_double_sum(b, lambda, n, &table, true);
        if let Some((i, j)) = lhs.first_difference(&rhs) {
            report.fail(vec![n as i64, i as i64, j as i64], lhs.coeff(i, j), rhs.coeff(i, j));
            return report;
        }
    }
    report
}

/// `⟨uv | p_n⟩ = Σ_{k,i} λ^k C(n,i) C(i,k) ⟨u | p_{n+k-i}⟩ ⟨v | p_i⟩`.
///
/// Functionals are supported below `⌈N/2⌉` so their product is exact below
/// `N`. Every basis pair `(u_a, u_b)` is checked, then `trials` random pairs
/// with coefficients in `-9..=9`.
pub fn verify_pairing_product(b: &PseudoBasis, lambda: &Rational, trials: usize, seed: u64) -> VerifyReport {
    let order = b.order();
    let half = order.div_ceil(2);
    let mut report = VerifyReport::new("pairing-product")
        .param("lambda", format_rational(lambda))
        .param("order", order)
        .param("trials", trials)
        .param("seed", seed)
        .param("support", format!("<{half}"));
    let q = e_lambda_basis(lambda, order);
    let coords: Vec<Vec<Rational>> = match b.rows().iter().map(|r| q.expand(r)).collect() {
        Ok(c) => c,
        Err(_) => {
            report.set_param("error", "family is not a pseudo-basis");
            report.fail(vec![], Rational::zero(), Rational::zero());
            return report;
        }
    };
    let table = BinomialTable::new(order);
    let pair = |u: &BaxterElement, j: usize| -> Rational {
        u.coeffs().iter().zip(&coords[j]).filter(|(a, _)| !a.is_zero()).map(|(a, c)| a * c).sum()
    };
    let check = |u: &BaxterElement, v: &BaxterElement, tag: &[i64], report: &mut VerifyReport| -> bool {
        let uv = u.mul(v).expect("same shape");
        for n in 0..order {
            let lhs = pair(&uv, n);
            let mut rhs = Rational::zero();
            for i in 0..=n {
                let pv = pair(v, i);
                if pv.is_zero() {
                    continue;
                }
                for k in 0..=i {
                    let c = pow(lambda, k) * table.rat(n as i64, i as i64) * table.rat(i as i64, k as i64);
                    if !c.is_zero() {
                        rhs += c * pair(u, n + k - i) * &pv;
                    }
                }
            }
            if lhs != rhs {
                let mut idx = tag.to_vec();
                idx.push(n as i64);
                report.fail(idx, lhs, rhs);
                return false;
            }
        }
        true
    };
    for a in 0..half {
        for c in 0..half {
            let u = BaxterElement::basis(lambda.clone(), order, a);
            let v = BaxterElement::basis(lambda.clone(), order, c);
            if !check(&u, &v, &[a as i64, c as i64], &mut report) {
                return report;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let u = random_element(&mut rng, lambda, order, half);
        let v = random_element(&mut rng, lambda, order, half);
        if !check(&u, &v, &[-1, t as i64], &mut report) {
            return report;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};
    use crate::series::Var;
    use crate::umbral::{e_lambda_basis, tau_basis};

    #[test]
    fn tau_of_t_is_divided_power() {
        for l in [rat(0), rat(1), rat(-1), ratio(1, 2)] {
            let rows = tau_basis(&Series::variable(Var::T, 8), &l, 8).unwrap();
            assert!(verify_divided_power(&rows, &l).passed());
        }
    }

    #[test]
    fn monomials_fail_divided_power_at_one_one() {
        let rows = PseudoBasis::monomial(Var::T, 6);
        let r = verify_divided_power(&rows, &rat(1));
        assert_eq!(r.counterexample.unwrap().indices[..2], [1, 1]);
    }

    #[test]
    fn e_lambda_is_binomial() {
        for l in [rat(0), rat(1), ratio(1, 2)] {
            assert!(verify_lambda_binomial(&e_lambda_basis(&l, 7), &l).passed());
        }
        assert!(verify_lambda_binomial(&PseudoBasis::monomial(Var::X, 7), &rat(0)).passed());
    }

    #[test]
    fn monomials_at_weight_one_fail_at_n1() {
        let r = verify_lambda_binomial(&PseudoBasis::monomial(Var::X, 6), &rat(1));
        let c = r.counterexample.unwrap();
        // x + y against x + y + xy
        assert_eq!(c.indices, vec![1, 1, 1]);
        assert_eq!((c.lhs, c.rhs), (rat(0), rat(1)));
    }

    #[test]
    fn symmetry_holds_for_arbitrary_family() {
        let rows: Vec<Series> = (0..6).map(|n| Series::from_ints(Var::X, 6, &[n, 1 - n, 2, 0, n * n, -3])).collect();
        let b = PseudoBasis::new(Var::X, rows).unwrap();
        assert!(verify_binomial_symmetry(&b, &rat(1)).passed());
        assert!(!verify_lambda_binomial(&b, &rat(1)).passed());
    }

    #[test]
    fn pairing_product_on_q() {
        for l in [rat(0), rat(1)] {
            let r = verify_pairing_product(&e_lambda_basis(&l, 8), &l, 5, 0);
            assert!(r.passed(), "{r}");
        }
        let r = verify_pairing_product(&PseudoBasis::monomial(Var::X, 8), &rat(1), 0, 0);
        assert!(!r.passed());
    }
}
