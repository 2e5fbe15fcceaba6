// A triple binomial-sum identity checked by brute force, and the
// second-order recurrence in `w` that both of its sides satisfy.
//
// ```bash
// cargo run --example eqinv_identity
// ```

use lambda_umbral::ring::BinomialTable;
use lambda_umbral::verify::{
    check_identity_eqinv, check_zeilberger_recurrence, eqinv_sides, zeilberger_coefficients, Bounds, Side,
};

pub fn run_example() -> lambda_umbral::Result<()> {
    let table = BinomialTable::new(40);
    for (n, k, i, w) in [(4, 2, 1, 1), (5, 3, 2, 2), (3, 5, 2, 3)] {
        let (l, r) = eqinv_sides(&table, n, k, i, w);
        let (c0, c1, c2) = zeilberger_coefficients(n, k, i, w);
        println!("(n,k,i,w) = ({n},{k},{i},{w}): {l} = {r}; recurrence ({c0}, {c1}, {c2})");
    }

    let report = check_identity_eqinv(Bounds::cube(12));
    println!("{report}");
    assert!(report.passed());

    let bounds = Bounds { n: 10, k: 10, i: 10, w: 8 };
    for side in [Side::Left, Side::Right] {
        println!("{}", check_zeilberger_recurrence(side, false, bounds));
    }
    println!("{}", check_zeilberger_recurrence(Side::Left, true, bounds));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("eqinv example");
}
