// The action of `U_λ C` on series in x and its commutation with `E^y`.
//
// ```bash
// cargo run --example shift_invariance
// ```

use lambda_umbral::ring::rat;
use lambda_umbral::series::{Series, Var};
use lambda_umbral::umbral::{e_lambda_basis, shift_bivariate, u_action};
use lambda_umbral::verify::verify_shift_invariance;

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 6;
    for lambda in [rat(0), rat(1)] {
        let q = e_lambda_basis(&lambda, order);
        println!("λ = {lambda}");
        for n in 1..4 {
            println!("  u1 q{n} = {}", u_action(1, q.row(n), &q, &lambda)?);
        }
        println!("  {}", verify_shift_invariance(&lambda, 10));
    }

    let p = Series::from_ints(Var::X, 4, &[1, 1, 1]);
    println!("E^y (1 + x + x^2) = {}", shift_bivariate(&p));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("shift invariance example");
}
