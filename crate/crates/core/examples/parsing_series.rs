// Series from text: parsing, rendering and evaluation.
//
// ```bash
// cargo run --example parsing_series
// ```

use lambda_umbral::parser::{evaluate, parse};
use lambda_umbral::series::Var;

pub fn run_example() -> lambda_umbral::Result<()> {
    for (src, order) in [("t", 4), ("exp(t)-1", 4), ("t/(1-t)", 5), ("log(1+t)", 6), ("(1 - 2*t)^3 / 2", 5)] {
        let e = parse(src, Var::T)?;
        let s = evaluate(&e, order, Var::T)?;
        println!("{src:>18}  parsed as {e}");
        println!("{:>18}  = {s}", "");
    }

    let n = 16;
    let inner = evaluate(&parse("exp(t)-1", Var::T)?, n, Var::T)?;
    let outer = evaluate(&parse("log(1+t)", Var::T)?, n, Var::T)?;
    println!("log(1 + (exp(t) - 1)) = {}", outer.compose(&inner)?);

    for bad in ["1 +", "sin(t)", "x + t", "t^t"] {
        println!("{bad:>8}: {}", parse(bad, Var::T).unwrap_err());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("parsing example");
}
