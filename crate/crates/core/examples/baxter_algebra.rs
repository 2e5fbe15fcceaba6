// Products and the Baxter operator in the free algebra `U_λ C`.
//
// ```bash
// cargo run --example baxter_algebra
// ```

use lambda_umbral::baxter::{basis_product, baxter_defect, BaxterElement};
use lambda_umbral::ring::{rat, ratio};
use lambda_umbral::verify::{verify_baxter_axiom, verify_baxter_axiom_with, TestOperator};

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 8;
    for lambda in [rat(0), rat(1), ratio(1, 2)] {
        println!("weight {lambda}");
        for (m, n) in [(1, 1), (1, 2), (2, 2)] {
            println!("  u{m} * u{n} = {}", basis_product(&lambda, order, m, n));
        }
    }

    let lambda = ratio(-2, 3);
    let a = BaxterElement::from_coeffs(lambda.clone(), order, [rat(1), rat(-2), rat(0), rat(3)]);
    let b = BaxterElement::from_coeffs(lambda.clone(), order, [rat(0), rat(5), ratio(1, 2)]);
    let (lhs, rhs) = baxter_defect(|x| x.baxter_operator(), &a, &b)?;
    println!("P(a)P(b)                    = {lhs}");
    println!("P(aP(b)) + P(bP(a)) + λP(ab) = {rhs}");
    assert_eq!(lhs, rhs);

    println!("{}", verify_baxter_axiom(&lambda, 16, 50, 0));
    let control = verify_baxter_axiom_with(TestOperator::Shift2, &lambda, 16, 50, 0);
    println!("{control}");
    assert!(!control.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("baxter algebra example");
}
