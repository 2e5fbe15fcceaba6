//! Expression language for series inputs such as `exp(t)-1`, `log(1+t)`
//! and `t/(1-t)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | VARIABLE | ('exp' | 'log') '(' expr ')' | '(' expr ')'
//! ```
//!
//! `/` is always division; rational constants come from folding
//! `integer / integer` (and negated literals) at parse time. Exactly one
//! variable symbol is allowed per expression and it is fixed by the caller.

mod eval;
mod lexer;

use std::fmt;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::ring::{format_rational, Rational};
use crate::series::Var;

pub use eval::{evaluate, parse_series};
use lexer::{Lexer, Token};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Log,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Log => "log",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Rational),
    Var(Var),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Apply(Func, Box<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { offset: usize, name: String },
    #[error("variable `{found}` at offset {offset}, expected `{expected}`")]
    WrongVariable { offset: usize, found: char, expected: Var },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownIdentifier { offset, .. }
            | ParseError::WrongVariable { offset, .. } => *offset,
        }
    }
}

/// Parses `input` as an expression in the single variable `variable`.
pub fn parse(input: &str, variable: Var) -> Result<Expr, ParseError> {
    let tokens = Lexer::new(input).tokenize()?;
    let mut p = Parser { tokens, pos: 0, variable, end: input.len() };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some((off, tok)) => Err(ParseError::Syntax { offset: off, message: format!("unexpected {}", tok.describe()) }),
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    variable: Var,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, Token)> {
        self.tokens.get(self.pos).cloned()
    }

    fn bump(&mut self) -> Option<(usize, Token)> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        match self.bump() {
            Some((_, t)) if t == want => Ok(()),
            Some((off, t)) => Err(ParseError::Syntax {
                offset: off,
                message: format!("expected {}, found {}", want.describe(), t.describe()),
            }),
            None => Err(ParseError::Syntax {
                offset: self.end,
                message: format!("expected {}, found end of input", want.describe()),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some((_, tok @ (Token::Plus | Token::Minus))) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            let op = if tok == Token::Plus { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::binary(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some((_, tok @ (Token::Star | Token::Slash))) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = if tok == Token::Star { Expr::binary(BinOp::Mul, lhs, rhs) } else { fold_div(lhs, rhs) };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some((_, Token::Minus)) = self.peek() {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(match inner {
                Expr::Lit(c) => Expr::Lit(-c),
                other => Expr::Neg(Box::new(other)),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some((_, Token::Caret)) = self.peek() {
            self.pos += 1;
            return match self.bump() {
                Some((off, Token::Int(n))) => {
                    let e = u32::try_from(&n)
                        .map_err(|_| ParseError::Syntax { offset: off, message: "exponent too large".into() })?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                Some((off, t)) => Err(ParseError::Syntax {
                    offset: off,
                    message: format!("exponent must be a nonnegative integer literal, found {}", t.describe()),
                }),
                None => Err(ParseError::Syntax {
                    offset: self.end,
                    message: "expected exponent, found end of input".into(),
                }),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.bump() {
            Some((_, Token::Int(n))) => Ok(Expr::Lit(Rational::from_integer(n))),
            Some((_, Token::LParen)) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some((_, Token::Ident(name))) => {
                let func = match name.as_str() {
                    "exp" => Some(Func::Exp),
                    "log" => Some(Func::Log),
                    _ => None,
                };
                if let Some(func) = func {
                    self.expect(Token::LParen)?;
                    let e = self.expr()?;
                    self.expect(Token::RParen)?;
                    return Ok(Expr::Apply(func, Box::new(e)));
                }
                let mut chars = name.chars();
                match (chars.next().and_then(Var::from_symbol), chars.next()) {
                    (Some(v), None) if v == self.variable => Ok(Expr::Var(v)),
                    (Some(v), None) => {
                        Err(ParseError::WrongVariable { offset: off, found: v.symbol(), expected: self.variable })
                    }
                    _ => Err(ParseError::UnknownIdentifier { offset: off, name }),
                }
            }
            Some((_, t)) => Err(ParseError::Syntax { offset: off, message: format!("unexpected {}", t.describe()) }),
            None => Err(ParseError::Syntax { offset: self.end, message: "unexpected end of input".into() }),
        }
    }
}

fn fold_div(lhs: Expr, rhs: Expr) -> Expr {
    match (lhs, rhs) {
        (Expr::Lit(a), Expr::Lit(b)) if !num_traits::Zero::is_zero(&b) => Expr::Lit(a / b),
        (a, b) => Expr::binary(BinOp::Div, a, b),
    }
}

/// Fully parenthesized rendering; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(c) => {
                if c.is_negative() || !c.denom().is_one() {
                    write!(f, "({})", format_rational(c))
                } else {
                    write!(f, "{}", format_rational(c))
                }
            }
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Pow(e, n) if matches!(**e, Expr::Pow(..)) => write!(f, "({e})^{n}"),
            Expr::Pow(e, n) => write!(f, "{e}^{n}"),
            Expr::Apply(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}
