//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage or input error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use serde_json::json;

use crate::baxter::BaxterElement;
use crate::error::{Error, Result};
use crate::parser::parse_series;
use crate::ring::{format_rational, parse_rational, Rational};
use crate::series::{Series, Var};
use crate::umbral::{
    act, associated_sequence, coproduct_matrix, e_lambda_basis, functional_from_t, pair_classical, pair_lambda,
    tau_basis, PseudoBasis,
};
use crate::verify::{self, Bounds, Job, Side, TestOperator, VerifyReport};

#[derive(Debug, Parser)]
#[command(name = "umbral", version, about = "Exact λ-umbral calculus and identity checks")]
pub struct Cli {
    /// Weight λ as `p/q` or an integer
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true, value_parser = lambda_arg)]
    pub lambda: Rational,
    /// Truncation order N
    #[arg(long, global = true, default_value_t = 12, value_parser = order_arg)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairMode {
    Lambda,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisChoice {
    /// `e_λ(x)^n`
    ELambda,
    /// `x^n`
    Monomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpChoice {
    Standard,
    Shift2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideChoice {
    Left,
    Right,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of two elements of the free Baxter algebra, e.g. `u3` or `2*u1+u2`
    Product { a: String, b: String },
    /// τ-basis of a delta series
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        row: Option<usize>,
    },
    /// Associated sequence of a delta series
    Assoc {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Pairing of a functional (series in t, or `u` element) with a series in x
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_enum, default_value_t = PairMode::Lambda)]
        mode: PairMode,
    },
    /// Action of an element of the free Baxter algebra on a series in x
    Action {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Coproduct coefficients of q_n
    Coproduct {
        #[arg(long)]
        n: usize,
    },
    /// Run an identity check
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    BaxterAxiom {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = OpChoice::Standard)]
        op: OpChoice,
    },
    DividedPower {
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        f: String,
    },
    Binomial {
        #[arg(long, value_enum, default_value_t = BasisChoice::ELambda)]
        basis: BasisChoice,
    },
    Symmetry {
        #[arg(long, value_enum, default_value_t = BasisChoice::ELambda)]
        basis: BasisChoice,
    },
    PairingProduct {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = BasisChoice::ELambda)]
        basis: BasisChoice,
    },
    ShiftInvariance,
    Eqinv {
        #[arg(long, default_value_t = 12)]
        max: usize,
    },
    Zeilberger {
        #[arg(long, default_value_t = 10)]
        max: usize,
        #[arg(long, default_value_t = 8)]
        max_w: usize,
        #[arg(long, value_enum, default_value_t = SideChoice::Both)]
        side: SideChoice,
        /// Apply the recurrence to F + 1 instead of F
        #[arg(long)]
        perturb: bool,
    },
    Compatibility,
    Ucl {
        #[arg(long, default_value = "exp(t)-1", allow_hyphen_values = true)]
        f: String,
    },
    All,
}

fn lambda_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn order_arg(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("order must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Parses `u3`, `2*u1+u2`, `-1/2*u0 - u4`; a bare rational means a multiple
/// of `u0`.
pub fn parse_element(s: &str, weight: &Rational, order: usize) -> Result<BaxterElement> {
    let bad = |msg: &str| Error::InvalidRational(format!("{msg} in element `{s}`"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty input"));
    }
    let mut out = BaxterElement::zero(weight.clone(), order);
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > 0 && !compact[..i].ends_with('*') {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-Rational::one(), rest),
            None => (Rational::one(), term.strip_prefix('+').unwrap_or(term)),
        };
        let (coef, index) = match body.split_once('*') {
            Some((c, u)) => (parse_rational(c)?, u),
            None if body.starts_with('u') => (Rational::one(), body),
            None => (parse_rational(body)?, "u0"),
        };
        let index: usize =
            index.strip_prefix('u').and_then(|d| d.parse().ok()).ok_or_else(|| bad("expected a term like `2*u3`"))?;
        if index >= order {
            return Err(Error::IndexOutOfRange { index, order });
        }
        out.add_scaled(&(sign * coef), &BaxterElement::basis(weight.clone(), order, index))?;
    }
    Ok(out)
}

fn looks_like_element(s: &str) -> bool {
    s.contains('u')
}

/// A functional given either as `u`-element text or as a series in t.
fn functional_arg(s: &str, cfg: &Cli) -> Result<BaxterElement> {
    if looks_like_element(s) {
        parse_element(s, &cfg.lambda, cfg.order)
    } else {
        functional_from_t(&parse_series(s, Var::T, cfg.order)?, &cfg.lambda)
    }
}

fn basis_for(choice: BasisChoice, cfg: &Cli) -> PseudoBasis {
    match choice {
        BasisChoice::ELambda => e_lambda_basis(&cfg.lambda, cfg.order),
        BasisChoice::Monomial => PseudoBasis::monomial(Var::X, cfg.order),
    }
}

enum Output {
    Value(String, serde_json::Value),
    Reports(Vec<VerifyReport>),
}

fn zeilberger(side: SideChoice, perturb: bool, bounds: Bounds) -> VerifyReport {
    match side {
        SideChoice::Left => verify::check_zeilberger_recurrence(Side::Left, perturb, bounds),
        SideChoice::Right => verify::check_zeilberger_recurrence(Side::Right, perturb, bounds),
        SideChoice::Both => {
            let left = verify::check_zeilberger_recurrence(Side::Left, perturb, bounds);
            let mut report =
                if left.passed() { verify::check_zeilberger_recurrence(Side::Right, perturb, bounds) } else { left };
            report.set_param("side", "both");
            report
        }
    }
}

fn verify_one(check: &VerifyCommand, cfg: &Cli) -> Result<Vec<VerifyReport>> {
    let l = &cfg.lambda;
    let n = cfg.order;
    let report = match check {
        VerifyCommand::BaxterAxiom { trials, op } => {
            let op = match op {
                OpChoice::Standard => TestOperator::Standard,
                OpChoice::Shift2 => TestOperator::Shift2,
            };
            verify::verify_baxter_axiom_with(op, l, n, *trials, cfg.seed)
        }
        VerifyCommand::DividedPower { f } => {
            let f = parse_series(f, Var::T, n)?;
            verify::verify_divided_power(&tau_basis(&f, l, n)?, l).param("f", &f)
        }
        VerifyCommand::Binomial { basis } => verify::verify_lambda_binomial(&basis_for(*basis, cfg), l),
        VerifyCommand::Symmetry { basis } => verify::verify_binomial_symmetry(&basis_for(*basis, cfg), l),
        VerifyCommand::PairingProduct { trials, basis } => {
            verify::verify_pairing_product(&basis_for(*basis, cfg), l, *trials, cfg.seed)
        }
        VerifyCommand::ShiftInvariance => verify::verify_shift_invariance(l, n),
        VerifyCommand::Eqinv { max } => verify::check_identity_eqinv(Bounds::cube(*max)),
        VerifyCommand::Zeilberger { max, max_w, side, perturb } => {
            zeilberger(*side, *perturb, Bounds { n: *max, k: *max, i: *max, w: *max_w })
        }
        VerifyCommand::Compatibility => verify::verify_compatibility(l, n),
        VerifyCommand::Ucl { f } => verify::verify_theorem_ucl(&parse_series(f, Var::T, n)?, l, n)?,
        VerifyCommand::All => return Ok(verify_all(cfg)),
    };
    Ok(vec![report])
}

/// Every check with its default inputs, run in parallel and ordered by name.
pub fn verify_all(cfg: &Cli) -> Vec<VerifyReport> {
    let (l, n, seed) = (cfg.lambda.clone(), cfg.order, cfg.seed);
    let f_exp = Series::variable(Var::T, n).exp().expect("zero constant term").sub(&Series::one(Var::T, n));
    let f_exp = f_exp.expect("same shape");
    let mut jobs: Vec<Job> = Vec::new();
    let mut push = |job: Box<dyn FnOnce(Rational) -> VerifyReport + Send>| {
        let l = l.clone();
        jobs.push(Box::new(move || job(l)));
    };
    push(Box::new(move |l| verify::verify_baxter_axiom(&l, n, 50, seed)));
    push(Box::new(move |l| {
        verify::verify_divided_power(&tau_basis(&Series::variable(Var::T, n), &l, n).expect("delta"), &l)
    }));
    push(Box::new(move |l| verify::verify_lambda_binomial(&e_lambda_basis(&l, n), &l)));
    push(Box::new(move |l| verify::verify_binomial_symmetry(&e_lambda_basis(&l, n), &l)));
    push(Box::new(move |l| verify::verify_pairing_product(&e_lambda_basis(&l, n), &l, 20, seed)));
    push(Box::new(move |l| verify::verify_shift_invariance(&l, n)));
    push(Box::new(|_| verify::check_identity_eqinv(Bounds::cube(12))));
    push(Box::new(|_| zeilberger(SideChoice::Both, false, Bounds { n: 10, k: 10, i: 10, w: 8 })));
    push(Box::new(move |l| verify::verify_compatibility(&l, n)));
    push(Box::new(move |l| verify::verify_theorem_ucl(&f_exp, &l, n).expect("delta")));
    verify::run_parallel(jobs)
}

fn execute(cfg: &Cli) -> Result<Output> {
    let l = &cfg.lambda;
    let n = cfg.order;
    Ok(match &cfg.command {
        Command::Product { a, b } => {
            let p = parse_element(a, l, n)?.mul(&parse_element(b, l, n)?)?;
            Output::Value(p.to_string(), p.to_json())
        }
        Command::Tau { f, row } => {
            let basis = tau_basis(&parse_series(f, Var::T, n)?, l, n)?;
            match row {
                Some(r) if *r >= n => return Err(Error::IndexOutOfRange { index: *r, order: n }),
                Some(r) => {
                    let s = basis.row(*r);
                    Output::Value(s.to_string(), s.to_json())
                }
                None => Output::Value(render_rows("tau", &basis), basis.to_json()),
            }
        }
        Command::Assoc { f } => {
            let s = associated_sequence(&parse_series(f, Var::T, n)?, l, n)?;
            Output::Value(render_rows("s", &s), s.to_json())
        }
        Command::Pair { u, p, mode } => {
            let p = parse_series(p, Var::X, n)?;
            let v = match mode {
                PairMode::Lambda => pair_lambda(&functional_arg(u, cfg)?, &p, &e_lambda_basis(l, n))?,
                PairMode::Classical => {
                    let f = if looks_like_element(u) {
                        crate::umbral::t_series_from_functional(&parse_element(u, l, n)?)
                    } else {
                        parse_series(u, Var::T, n)?
                    };
                    pair_classical(&f, &p)?
                }
            };
            let text = format_rational(&v);
            Output::Value(text.clone(), json!(text))
        }
        Command::Action { u, p } => {
            let r = act(&functional_arg(u, cfg)?, &parse_series(p, Var::X, n)?, &e_lambda_basis(l, n))?;
            Output::Value(r.to_string(), r.to_json())
        }
        Command::Coproduct { n: idx } => {
            let m = coproduct_matrix(*idx, l, n)?;
            let mut terms = Vec::new();
            let mut entries = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    let c = m.get(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    let mono = format!("q{a}(x)*q{b}(y)");
                    terms.push(if c.is_one() { mono } else { format!("{}*{mono}", format_rational(c)) });
                    entries.push(json!({"a": a, "b": b, "coeff": format_rational(c)}));
                }
            }
            let value = json!({"lambda": format_rational(l), "n": idx, "order": n, "terms": entries});
            Output::Value(terms.join(" + "), value)
        }
        Command::Verify { check } => Output::Reports(verify_one(check, cfg)?),
    })
}

fn render_rows(prefix: &str, basis: &PseudoBasis) -> String {
    basis.rows().iter().enumerate().map(|(i, r)| format!("{prefix}{i} = {r}")).collect::<Vec<_>>().join("\n")
}

/// Parses `args` (including the program name), runs the command and writes
/// to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match result {
        Output::Value(text, value) => {
            let _ = match cfg.format {
                Format::Text => writeln!(out, "{text}"),
                Format::Json => writeln!(out, "{value}"),
            };
            0
        }
        Output::Reports(reports) => {
            let all_pass = reports.iter().all(VerifyReport::passed);
            let _ = match cfg.format {
                Format::Text => reports.iter().try_for_each(|r| writeln!(out, "{r}")),
                Format::Json if reports.len() == 1 => writeln!(out, "{}", reports[0].to_json()),
                Format::Json => {
                    writeln!(out, "{}", serde_json::Value::from_iter(reports.iter().map(VerifyReport::to_json)))
                }
            };
            if all_pass {
                0
            } else {
                1
            }
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
