use lambda_umbral::parser::{evaluate, parse, BinOp, Expr, Func};
use lambda_umbral::ring::ratio;
use lambda_umbral::series::Var;
use proptest::prelude::*;

/// Trees in the normal form the parser produces: no `Neg` of a literal and
/// no division of two literals.
fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0i64..20, 1i64..5).prop_map(|(n, d)| Expr::Lit(ratio(n, d))),
        (1i64..20, 1i64..5).prop_map(|(n, d)| Expr::Lit(ratio(-n, d))),
        Just(Expr::Var(Var::T)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_filter_map("no negated literal", |e| match e {
                Expr::Lit(_) => None,
                e => Some(Expr::Neg(Box::new(e))),
            }),
            (inner.clone(), inner.clone(), prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul)])
                .prop_map(|(a, b, op)| Expr::binary(op, a, b)),
            (inner.clone(), inner.clone()).prop_filter_map("no literal quotient", |(a, b)| match (&a, &b) {
                (Expr::Lit(_), Expr::Lit(_)) => None,
                _ => Some(Expr::binary(BinOp::Div, a, b)),
            }),
            (inner.clone(), 0u32..4).prop_map(|(a, n)| Expr::Pow(Box::new(a), n)),
            (inner, prop_oneof![Just(Func::Exp), Just(Func::Log)]).prop_map(|(a, f)| Expr::Apply(f, Box::new(a))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_parse_round_trip(e in expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text, Var::T).unwrap(), e);
    }

    #[test]
    fn arbitrary_input_never_panics(s in "[-+*/^()t0-9 expolg]{0,16}") {
        let _ = parse(&s, Var::T).map(|e| evaluate(&e, 5, Var::T));
    }
}

#[test]
fn log_exp_round_trip_at_every_order() {
    for n in 1..=16 {
        let inner = evaluate(&parse("exp(t)-1", Var::T).unwrap(), n, Var::T).unwrap();
        let outer = evaluate(&parse("log(1+t)", Var::T).unwrap(), n, Var::T).unwrap();
        assert_eq!(outer.compose(&inner).unwrap(), lambda_umbral::series::Series::variable(Var::T, n));
    }
}

#[test]
fn acceptance_inputs_are_delta() {
    for src in ["t", "exp(t)-1", "log(1+t)", "t/(1-t)"] {
        let s = evaluate(&parse(src, Var::T).unwrap(), 12, Var::T).unwrap();
        assert!(s.is_delta(), "{src}");
    }
}
