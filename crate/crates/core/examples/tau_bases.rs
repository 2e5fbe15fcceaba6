// λ-divided-power bases `τ_n(f)` built from delta series.
//
// ```bash
// cargo run --example tau_bases
// ```

use lambda_umbral::parser::parse_series;
use lambda_umbral::ring::{rat, ratio};
use lambda_umbral::series::Var;
use lambda_umbral::umbral::tau_basis;
use lambda_umbral::verify::verify_divided_power;

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 6;
    for src in ["t", "exp(t)-1", "log(1+t)", "t/(1-t)"] {
        let f = parse_series(src, Var::T, order)?;
        for lambda in [rat(0), rat(1), ratio(1, 2)] {
            let tau = tau_basis(&f, &lambda, order)?;
            println!("f = {src}, λ = {lambda}");
            for n in 0..4 {
                println!("  τ{n} = {}", tau.row(n));
            }
            let report = verify_divided_power(&tau, &lambda);
            println!("  {report}");
            assert!(report.passed());
        }
    }

    let not_delta = parse_series("t^2", Var::T, order)?;
    println!("t^2: {}", tau_basis(&not_delta, &rat(1), order).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tau bases example");
}
