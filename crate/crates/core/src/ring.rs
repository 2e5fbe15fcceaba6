//! Exact scalars: arbitrary-precision rationals and the binomial and
//! factorial coefficients that appear in every product formula.
//!
//! Text form of a [`Rational`] is `p/q`, or `p` when the denominator is 1,
//! with an optional leading `-`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The base ring: lowest-terms rationals with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `p/q`, `p`, `-p/q`. Surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact quotient; the only fallible rational operation.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// `C(m, k)` for `m >= 0`; zero when `k < 0` or `k > m`.
pub fn binomial(m: i64, k: i64) -> Result<BigInt> {
    if m < 0 {
        return Err(Error::NegativeUpperIndex(m));
    }
    Ok(binomial_nonneg(m as u64, k))
}

fn binomial_nonneg(m: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > m {
        return BigInt::zero();
    }
    let k = (k as u64).min(m - k as u64);
    let mut acc = BigInt::one();
    for j in 0..k {
        // exact at every step: acc * (m - j) is divisible by j + 1
        acc = acc * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    acc
}

/// Binomial coefficient extended to any integer upper index through the
/// falling factorial, `m (m-1) ... (m-k+1) / k!`; zero for `k < 0`.
pub fn binomial_general(m: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if m >= 0 {
        return binomial_nonneg(m as u64, k);
    }
    // C(m, k) = (-1)^k C(k - m - 1, k)
    let magnitude = binomial_nonneg((k - m - 1) as u64, k);
    if k.is_odd() {
        -magnitude
    } else {
        magnitude
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Precomputed Pascal triangle for hot loops.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_m: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_m + 1);
        for m in 0..=max_m {
            let mut row = vec![BigInt::one(); m + 1];
            for k in 1..m {
                row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    /// Same conventions as [`binomial_general`]; falls back to direct
    /// computation outside the table.
    pub fn get(&self, m: i64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        if m >= 0 {
            if k > m {
                return BigInt::zero();
            }
            if let Some(row) = self.rows.get(m as usize) {
                return row[k as usize].clone();
            }
            return binomial_nonneg(m as u64, k);
        }
        let upper = k - m - 1;
        let magnitude = if (upper as usize) < self.rows.len() {
            self.rows[upper as usize][k as usize].clone()
        } else {
            binomial_nonneg(upper as u64, k)
        };
        if k.is_odd() {
            -magnitude
        } else {
            magnitude
        }
    }

    /// `C(m, k)` as a rational, for `0 <= m` within the table.
    pub fn rat(&self, m: i64, k: i64) -> Rational {
        Rational::from_integer(self.get(m, k))
    }
}
