//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. Its `Display` impl produces the
//! canonical text form used throughout the crate: `p/q`, or just `p` when the
//! denominator is one, with the sign on the numerator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `x` and `y`, rejecting division by zero.
pub fn arith(x: &Rational, y: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => {
            if y.is_zero() {
                return Err(Error::DivisionByZero);
            }
            x / y
        }
    })
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `numer / denom` reduced to lowest terms.
pub fn ratio(numer: i64, denom: i64) -> Result<Rational> {
    if denom == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(BigInt::from(numer), BigInt::from(denom)))
}

/// Parses the canonical `p/q` (or `p`) text form.
pub fn parse(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| Error::OutOfRange(format!("not a rational: {text:?}")))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|_| Error::OutOfRange(format!("not a rational: {text:?}")))?;
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

/// `x^e` by repeated squaring.
pub fn pow(x: &Rational, mut e: u32) -> Rational {
    let mut base = x.clone();
    let mut acc = Rational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}
