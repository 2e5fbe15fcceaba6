use std::process::Command;

use lambda_umbral::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("umbral").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn product_examples() {
    assert_eq!(ok(&["product", "u1", "u2", "--lambda", "0"]), "3*u3");
    assert_eq!(ok(&["product", "u0", "u5"]), "u5");
    assert_eq!(ok(&["product", "u1", "u1", "--lambda", "1/2"]), "2*u2 + 1/2*u1");
    assert_eq!(ok(&["product", "2*u1+u2", "u0", "--order", "4"]), "u2 + 2*u1");
}

#[test]
fn tau_examples() {
    assert_eq!(ok(&["tau", "--f", "t", "--lambda", "1", "--row", "2"]), "-1/2*t + 1/2*t^2");
    assert_eq!(ok(&["tau", "--f", "t", "--lambda", "0", "--row", "3"]), "1/6*t^3");
    let (code, _, err) = call(&["tau", "--f", "t^2"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a delta series"), "{err}");
}

#[test]
fn assoc_examples() {
    assert_eq!(
        ok(&["assoc", "--f", "t", "--lambda", "0", "--order", "5"]),
        "s0 = 1\ns1 = x\ns2 = x^2\ns3 = x^3\ns4 = x^4"
    );
    // falling factorials x(x-1)...(x-n+1)
    let out = ok(&["assoc", "--f", "exp(t)-1", "--lambda", "0", "--order", "5"]);
    assert_eq!(out.lines().nth(3), Some("s3 = 2*x - 3*x^2 + x^3"));
    let (code, _, err) = call(&["assoc", "--f", "1+t"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a delta series"));
}

#[test]
fn pair_examples() {
    assert_eq!(ok(&["pair", "--mode", "classical", "--u", "t*(t-1)/2", "--p", "(exp(x)-1)^2", "--lambda", "1"]), "1");
    assert_eq!(ok(&["pair", "--mode", "classical", "--u", "t", "--p", "x^2"]), "0");
    assert_eq!(ok(&["pair", "--u", "u3", "--p", "(exp(x)-1)^3", "--lambda", "1"]), "1");
    assert_eq!(ok(&["pair", "--u", "t*(t-1)*(t-2)/6", "--p", "(exp(x)-1)^3", "--lambda", "1"]), "1");
}

#[test]
fn action_and_coproduct() {
    assert_eq!(ok(&["action", "--u", "u1", "--p", "x^3", "--order", "5"]), "3*x^2");
    let out = ok(&["coproduct", "--n", "1", "--lambda", "1", "--order", "3"]);
    assert_eq!(out, "q0(x)*q1(y) + q1(x)*q0(y) + q1(x)*q1(y)");
}

#[test]
fn verify_examples() {
    let (code, out, _) = call(&["verify", "eqinv", "--max", "12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("eqinv: pass"));
    let (code, out, _) = call(&["verify", "binomial", "--lambda", "1", "--order", "10"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("binomial: pass"));
    let (code, out, _) = call(&["verify", "baxter-axiom", "--op", "shift2"]);
    assert_eq!(code, 1);
    assert!(out.contains("counterexample at ["), "{out}");
}

#[test]
fn negative_controls_exit_one() {
    assert_eq!(call(&["verify", "binomial", "--basis", "monomial", "--lambda", "1"]).0, 1);
    assert_eq!(call(&["verify", "divided-power", "--f", "t", "--lambda", "1"]).0, 0);
    assert_eq!(call(&["verify", "zeilberger", "--perturb", "--max", "3", "--max-w", "2"]).0, 1);
}

#[test]
fn json_is_stable_and_well_formed() {
    let args = ["verify", "baxter-axiom", "--op", "shift2", "--order", "8", "--seed", "5", "--format", "json"];
    let (code, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(code, 1);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["name", "params", "status", "counterexample"]);
    assert_eq!(v["status"], "fail");
    let c = &v["counterexample"];
    assert!(c["lhs"].is_string() && c["rhs"].is_string() && c["indices"].is_array());

    let s: serde_json::Value =
        serde_json::from_str(&ok(&["tau", "--f", "t", "--row", "1", "--order", "3", "--format", "json"])).unwrap();
    assert_eq!(s, serde_json::json!({"var": "t", "order": 3, "coeffs": ["0", "1", "0"]}));
    let e: serde_json::Value =
        serde_json::from_str(&ok(&["product", "u1", "u1", "--lambda", "1/2", "--order", "3", "--format", "json"]))
            .unwrap();
    assert_eq!(e, serde_json::json!({"lambda": "1/2", "order": 3, "coeffs": ["0", "1/2", "2"]}));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["product", "u1"]).0, 2);
    assert_eq!(call(&["--order", "0", "product", "u1", "u1"]).0, 2);
    assert_eq!(call(&["--lambda", "1/0", "product", "u1", "u1"]).0, 2);
    assert_eq!(call(&["--format", "yaml", "product", "u1", "u1"]).0, 2);
    assert_eq!(call(&["product", "u1", "u99"]).0, 2);
    let (code, _, err) = call(&["tau", "--f", "1 +"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 3"), "{err}");
    assert_eq!(call(&["verify", "nonsense"]).0, 2);
}

#[test]
fn negative_lambda_flag() {
    assert_eq!(ok(&["product", "u1", "u1", "--lambda", "-1"]), "2*u2 - u1");
    assert_eq!(ok(&["--lambda", "-2/3", "verify", "compatibility"]).split(':').next(), Some("compatibility"));
}

#[test]
fn verify_all_is_ordered_by_name() {
    let (code, out, _) = call(&["verify", "all", "--order", "6"]);
    assert_eq!(code, 0, "{out}");
    let names: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).map(|l| l.split(':').next().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(names.len(), 10);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_umbral");
    let o = Command::new(bin).args(["product", "u1", "u2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "3*u3");
    let o = Command::new(bin).args(["verify", "baxter-axiom", "--op", "shift2"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
