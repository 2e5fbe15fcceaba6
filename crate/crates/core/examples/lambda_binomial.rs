// The reference sequence `e_λ(x)^n`, its λ-binomial expansion and the
// coproduct table.
//
// ```bash
// cargo run --example lambda_binomial
// ```

use lambda_umbral::ring::{rat, ratio};
use lambda_umbral::series::Var;
use lambda_umbral::umbral::{coproduct_matrix, e_lambda, e_lambda_basis, PseudoBasis};
use lambda_umbral::verify::{verify_binomial_symmetry, verify_lambda_binomial};

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 10;
    for lambda in [rat(0), rat(1), rat(-1), ratio(1, 2)] {
        println!("e_λ(x) at λ = {lambda}: {}", e_lambda(&lambda, 6));
        let q = e_lambda_basis(&lambda, order);
        let report = verify_lambda_binomial(&q, &lambda);
        println!("  {report}");
        assert!(report.passed());
        println!("  {}", verify_binomial_symmetry(&q, &lambda));
    }

    let control = verify_lambda_binomial(&PseudoBasis::monomial(Var::X, order), &rat(1));
    println!("monomials at λ = 1: {control}");

    let c = coproduct_matrix(2, &rat(1), 4)?;
    for a in 0..4 {
        let row: Vec<String> = (0..4).map(|b| c.get(a, b).to_string()).collect();
        println!("  Δ(q2) row {a}: [{}]", row.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lambda binomial example");
}
