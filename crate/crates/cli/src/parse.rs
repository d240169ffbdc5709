//! Polynomial expressions in one variable `x`.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := sign? coeff | sign? coeff? 'x' ('^' uint)?
//! coeff := uint | uint '/' uint
//! ```
//!
//! Whitespace may separate any two tokens. A missing coefficient means 1, a
//! missing exponent means 1, and repeated powers are summed. Every string
//! produced by `Polynomial`'s `Display` impl parses back to the same value.

use std::collections::BTreeMap;

use boole_core::{Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exponents above this are rejected rather than allocating dense storage.
pub const MAX_EXPONENT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty polynomial expression")]
    Empty,
    #[error("column {column}: {message}")]
    Syntax { column: usize, message: String },
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Some(digits.parse().expect("ascii digits"))
    }

    fn describe_next(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("unexpected {c:?}"),
            None => "unexpected end of input".into(),
        }
    }
}

fn term(cur: &mut Cursor, sign: bool) -> Result<(usize, Rational), ParseError> {
    let mut negative = !sign;
    if cur.eat('-') {
        negative = !negative;
    } else {
        cur.eat('+');
    }
    let coeff = match cur.uint() {
        Some(numer) => {
            if cur.eat('/') {
                let col = cur.column();
                let Some(denom) = cur.uint() else {
                    let found = cur.describe_next();
                    return cur.error(format!("expected denominator, {found}"));
                };
                if denom.is_zero() {
                    return Err(ParseError::Syntax {
                        column: col,
                        message: "zero denominator".into(),
                    });
                }
                Some(Rational::new(numer, denom))
            } else {
                Some(Rational::from_integer(numer))
            }
        }
        None => None,
    };
    let power = if cur.eat('x') {
        if cur.eat('^') {
            let col = cur.column();
            let Some(exp) = cur.uint() else {
                let found = cur.describe_next();
                return cur.error(format!("expected exponent, {found}"));
            };
            match usize::try_from(exp) {
                Ok(e) if e <= MAX_EXPONENT => e,
                _ => {
                    return Err(ParseError::Syntax {
                        column: col,
                        message: format!("exponent exceeds {MAX_EXPONENT}"),
                    })
                }
            }
        } else {
            1
        }
    } else if coeff.is_some() {
        0
    } else {
        let found = cur.describe_next();
        return cur.error(format!("expected a term, {found}"));
    };
    let coeff = coeff.unwrap_or_else(Rational::one);
    Ok((power, if negative { -coeff } else { coeff }))
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut cur = Cursor::new(text);
    let mut powers: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut add =
        |(power, c): (usize, Rational)| *powers.entry(power).or_insert_with(Rational::zero) += c;
    add(term(&mut cur, true)?);
    loop {
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.pos += 1;
                add(term(&mut cur, true)?);
            }
            Some('-') => {
                cur.pos += 1;
                add(term(&mut cur, false)?);
            }
            Some(_) => {
                let found = cur.describe_next();
                return cur.error(format!("expected '+' or '-', {found}"));
            }
        }
    }
    let Some((&degree, _)) = powers.iter().next_back() else {
        unreachable!("at least one term parsed");
    };
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for (power, c) in powers {
        coeffs[degree - power] = c;
    }
    Ok(Polynomial::new(coeffs))
}
