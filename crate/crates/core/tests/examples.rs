mod baxter_algebra {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/baxter_algebra.rs"));
}

#[test]
fn baxter_algebra_runs() {
    baxter_algebra::run_example().expect("baxter_algebra example should run");
}

mod tau_bases {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tau_bases.rs"));
}

#[test]
fn tau_bases_runs() {
    tau_bases::run_example().expect("tau_bases example should run");
}

mod lambda_binomial {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lambda_binomial.rs"));
}

#[test]
fn lambda_binomial_runs() {
    lambda_binomial::run_example().expect("lambda_binomial example should run");
}

mod associated_sequence {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/associated_sequence.rs"));
}

#[test]
fn associated_sequence_runs() {
    associated_sequence::run_example().expect("associated_sequence example should run");
}

mod pairings {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pairings.rs"));
}

#[test]
fn pairings_runs() {
    pairings::run_example().expect("pairings example should run");
}

mod shift_invariance {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/shift_invariance.rs"));
}

#[test]
fn shift_invariance_runs() {
    shift_invariance::run_example().expect("shift_invariance example should run");
}

mod eqinv_identity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/eqinv_identity.rs"));
}

#[test]
fn eqinv_identity_runs() {
    eqinv_identity::run_example().expect("eqinv_identity example should run");
}

mod parsing_series {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/parsing_series.rs"));
}

#[test]
fn parsing_series_runs() {
    parsing_series::run_example().expect("parsing_series example should run");
}
