// The λ-pairing, the classical pairing and their compatibility.
//
// ```bash
// cargo run --example pairings
// ```

use lambda_umbral::baxter::BaxterElement;
use lambda_umbral::parser::parse_series;
use lambda_umbral::ring::{rat, ratio};
use lambda_umbral::series::Var;
use lambda_umbral::umbral::{e_lambda_basis, functional_from_t, pair_classical, pair_lambda, tau_t_basis};
use lambda_umbral::verify::{verify_compatibility, verify_pairing_product};

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 8;
    let lambda = rat(1);
    let q = e_lambda_basis(&lambda, order);

    let u3 = BaxterElement::basis(lambda.clone(), order, 3);
    println!("<u3 | q3> = {}", pair_lambda(&u3, q.row(3), &q)?);
    println!("<u3 | q2> = {}", pair_lambda(&u3, q.row(2), &q)?);

    // a functional written as a series in t
    let g = parse_series("t^2", Var::T, order)?;
    let u = functional_from_t(&g, &lambda)?;
    println!("t^2 as an element: {u}");
    let p = parse_series("exp(x)", Var::X, order)?;
    println!("<t^2 | exp(x)> = {}", pair_lambda(&u, &p, &q)?);

    let tau = tau_t_basis(&lambda, order);
    let e2 = parse_series("(exp(x)-1)^2", Var::X, order)?;
    println!("[τ2(t) | (e^x - 1)^2]_0 = {}", pair_classical(tau.row(2), &e2)?);

    for l in [rat(0), rat(1), rat(-1), ratio(-2, 3)] {
        println!("{}", verify_compatibility(&l, 12));
        println!("{}", verify_pairing_product(&e_lambda_basis(&l, order), &l, 10, 0));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pairings example");
}
