// Associated sequences of delta series and the equivalence check.
//
// At weight zero the classical sequences appear: `exp(t)-1` gives the
// falling factorials and `log(1+t)` the exponential polynomials. At
// nonzero weight only linear `f` give λ-binomial sequences, which the
// report shows.
//
// ```bash
// cargo run --example associated_sequence
// ```

use lambda_umbral::parser::parse_series;
use lambda_umbral::ring::rat;
use lambda_umbral::series::Var;
use lambda_umbral::umbral::associated_sequence;
use lambda_umbral::verify::verify_theorem_ucl;

pub fn run_example() -> lambda_umbral::Result<()> {
    let order = 6;
    for src in ["t", "exp(t)-1", "log(1+t)", "t/(1-t)"] {
        let f = parse_series(src, Var::T, order)?;
        let s = associated_sequence(&f, &rat(0), order)?;
        println!("f = {src}");
        for (n, row) in s.rows().iter().enumerate() {
            println!("  s{n} = {row}");
        }
    }

    for (src, lambda) in [("t", rat(1)), ("2*t", rat(1)), ("exp(t)-1", rat(0)), ("exp(t)-1", rat(1))] {
        let f = parse_series(src, Var::T, order)?;
        println!("{}", verify_theorem_ucl(&f, &lambda, order)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("associated sequence example");
}
