use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::{Series, Var};

use super::{BinOp, Expr, Func};

/// Bottom-up evaluation into a truncated series of the given order.
///
/// The variable comes from the expression itself; a constant expression is
/// tagged with `default_var`.
pub fn evaluate(e: &Expr, order: usize, default_var: Var) -> Result<Series> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    let var = find_var(e).unwrap_or(default_var);
    eval(e, order, var)
}

fn find_var(e: &Expr) -> Option<Var> {
    match e {
        Expr::Lit(_) => None,
        Expr::Var(v) => Some(*v),
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Apply(_, a) => find_var(a),
        Expr::Binary(_, a, b) => find_var(a).or_else(|| find_var(b)),
    }
}

fn eval(e: &Expr, order: usize, var: Var) -> Result<Series> {
    Ok(match e {
        Expr::Lit(c) => Series::constant(var, order, c.clone()),
        Expr::Var(_) => Series::variable(var, order),
        Expr::Neg(a) => eval(a, order, var)?.neg(),
        Expr::Binary(op, a, b) => {
            let a = eval(a, order, var)?;
            let b = eval(b, order, var)?;
            match op {
                BinOp::Add => a.add(&b)?,
                BinOp::Sub => a.sub(&b)?,
                BinOp::Mul => a.mul(&b)?,
                BinOp::Div => {
                    if b.constant_term().is_zero() {
                        return Err(if b.is_zero() { Error::DivisionByZero } else { Error::NotInvertible });
                    }
                    a.div(&b)?
                }
            }
        }
        Expr::Pow(a, n) => eval(a, order, var)?.pow(*n as usize),
        Expr::Apply(Func::Exp, a) => eval(a, order, var)?.exp()?,
        Expr::Apply(Func::Log, a) => eval(a, order, var)?.log()?,
    })
}

/// Parses and evaluates in one step.
pub fn parse_series(input: &str, var: Var, order: usize) -> Result<Series> {
    let e = super::parse(input, var)?;
    evaluate(&e, order, var)
}
