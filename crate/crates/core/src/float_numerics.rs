//! Binary64 evaluation of the alternating grid sum under several summation
//! orders, with errors measured against the exact sum.
//!
//! Terms are generated exactly and rounded once each, so the reported error
//! is summation error plus the rounding of the coefficients to binary64;
//! nothing else.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::boole;
use crate::error::{Error, Result};
use crate::grid::NodeGrid;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// Largest `n` accepted by [`error_sweep`]; `171!` overflows binary64.
pub const MAX_SWEEP_N: usize = 170;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    /// Left to right.
    Naive,
    /// Balanced binary tree over the terms in index order.
    Pairwise,
    /// Neumaier's variant of Kahan summation.
    Compensated,
    /// Left to right after sorting by increasing magnitude.
    SortedMagnitude,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Naive,
        Strategy::Pairwise,
        Strategy::Compensated,
        Strategy::SortedMagnitude,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Pairwise => "pairwise",
            Strategy::Compensated => "compensated",
            Strategy::SortedMagnitude => "sorted_magnitude",
        }
    }

    pub fn sum(self, terms: &[f64]) -> f64 {
        match self {
            Strategy::Naive => terms.iter().fold(0.0, |acc, t| acc + t),
            Strategy::Pairwise => pairwise_sum(terms),
            Strategy::Compensated => compensated_sum(terms),
            Strategy::SortedMagnitude => {
                let mut sorted = terms.to_vec();
                sorted.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
                sorted.iter().fold(0.0, |acc, t| acc + t)
            }
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown summation strategy {s:?}")))
    }
}

fn pairwise_sum(terms: &[f64]) -> f64 {
    match terms.len() {
        0 => 0.0,
        1 => terms[0],
        len => {
            let (left, right) = terms.split_at(len / 2);
            pairwise_sum(left) + pairwise_sum(right)
        }
    }
}

fn compensated_sum(terms: &[f64]) -> f64 {
    let mut sum = 0.0f64;
    let mut correction = 0.0f64;
    for &t in terms {
        let next = sum + t;
        if sum.abs() >= t.abs() {
            correction += (sum - next) + t;
        } else {
            correction += (t - next) + sum;
        }
        sum = next;
    }
    sum + correction
}

/// Outcome of one floating-point summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FloatSum {
    Finite(f64),
    /// A term or the running sum left the binary64 range.
    Overflow,
}

impl FloatSum {
    /// The binary64 value, `+inf` for overflow.
    pub fn value(self) -> f64 {
        match self {
            FloatSum::Finite(v) => v,
            FloatSum::Overflow => f64::INFINITY,
        }
    }

    pub fn is_overflow(self) -> bool {
        matches!(self, FloatSum::Overflow)
    }
}

/// The polynomial with each coefficient replaced by its nearest binary64.
fn round_coefficients(p: &Polynomial) -> Result<Polynomial> {
    let mut out = Vec::with_capacity(p.coefficients().len());
    for c in p.coefficients() {
        let f = c.to_f64().filter(|f| f.is_finite()).ok_or_else(|| {
            Error::OutOfRange(format!("coefficient {c} is outside the binary64 range"))
        })?;
        out.push(Rational::from_float(f).expect("finite float"));
    }
    Ok(Polynomial::new(out))
}

/// The signed terms `(-1)^(n-k) C(n,k) p(a + k*b)` in index order, exact.
pub fn exact_terms(p: &Polynomial, grid: &NodeGrid) -> Result<Vec<Rational>> {
    if let Some(degree) = p.degree() {
        if degree > grid.n() {
            return Err(Error::DegreeOverflow {
                degree,
                n: grid.n(),
            });
        }
    }
    let n = grid.n();
    let mut weight = BigInt::from(1);
    let mut terms = Vec::with_capacity(n + 1);
    for (k, x) in grid.nodes().enumerate() {
        let term = p.eval(&x) * Rational::from_integer(weight.clone());
        terms.push(if (n - k).is_multiple_of(2) {
            term
        } else {
            -term
        });
        weight = weight * (n - k) / (k + 1);
    }
    Ok(terms)
}

fn float_sum_of_terms(terms: &[Rational], strategy: Strategy) -> FloatSum {
    let rounded: Vec<f64> = terms
        .iter()
        .map(|t| t.to_f64().unwrap_or(f64::NAN))
        .collect();
    if rounded.iter().any(|t| !t.is_finite()) {
        return FloatSum::Overflow;
    }
    let value = strategy.sum(&rounded);
    if value.is_finite() {
        FloatSum::Finite(value)
    } else {
        FloatSum::Overflow
    }
}

/// The alternating grid sum in binary64. Coefficients are rounded to the
/// nearest binary64 first; each term is then formed exactly and rounded once.
pub fn float_boole_sum(p: &Polynomial, grid: &NodeGrid, strategy: Strategy) -> Result<FloatSum> {
    let rounded = round_coefficients(p)?;
    let terms = exact_terms(&rounded, grid)?;
    Ok(float_sum_of_terms(&terms, strategy))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// `|computed - exact| / |exact|`.
    Relative,
    /// `|computed - exact|`, used when the exact sum is zero.
    Absolute,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloatErrorRecord {
    pub n: usize,
    pub strategy: Strategy,
    pub computed: f64,
    pub overflow: bool,
    pub exact: Rational,
    pub relative_error: f64,
    pub error_kind: ErrorKind,
    /// `max |term| / |exact|`, or `max |term|` when the exact sum is zero.
    pub term_magnitude_ratio: f64,
}

struct Reference {
    rounded_terms: Vec<Rational>,
    exact: Rational,
    max_term: Rational,
}

impl Reference {
    fn new(p: &Polynomial, grid: &NodeGrid) -> Result<Self> {
        let exact = boole::boole_sum(p, grid)?;
        let rounded_terms = exact_terms(&round_coefficients(p)?, grid)?;
        let max_term = exact_terms(p, grid)?
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(Reference {
            rounded_terms,
            exact,
            max_term,
        })
    }

    fn record(&self, n: usize, strategy: Strategy) -> FloatErrorRecord {
        let outcome = float_sum_of_terms(&self.rounded_terms, strategy);
        let (error_kind, denominator) = if self.exact.is_zero() {
            (ErrorKind::Absolute, None)
        } else {
            (ErrorKind::Relative, Some(self.exact.abs()))
        };
        let relative_error = match outcome {
            FloatSum::Overflow => f64::INFINITY,
            FloatSum::Finite(v) => {
                let diff = (Rational::from_float(v).expect("finite") - &self.exact).abs();
                let err = match &denominator {
                    Some(d) => diff / d,
                    None => diff,
                };
                err.to_f64().unwrap_or(f64::INFINITY)
            }
        };
        let ratio = match &denominator {
            Some(d) => &self.max_term / d,
            None => self.max_term.clone(),
        };
        FloatErrorRecord {
            n,
            strategy,
            computed: outcome.value(),
            overflow: outcome.is_overflow(),
            exact: self.exact.clone(),
            relative_error,
            error_kind,
            term_magnitude_ratio: ratio.to_f64().unwrap_or(f64::INFINITY),
        }
    }
}

/// One floating-point trial against the exact [`boole::boole_sum`].
pub fn error_record(
    p: &Polynomial,
    grid: &NodeGrid,
    strategy: Strategy,
) -> Result<FloatErrorRecord> {
    Ok(Reference::new(p, grid)?.record(grid.n(), strategy))
}

/// Records for `p = x^n` on the grid `0, 1, ..., n`, ordered by `n` and then
/// by the order of `strategies`.
pub fn error_sweep(
    n_min: usize,
    n_max: usize,
    strategies: &[Strategy],
) -> Result<Vec<FloatErrorRecord>> {
    if n_min < 1 || n_min > n_max || n_max > MAX_SWEEP_N {
        return Err(Error::OutOfRange(format!(
            "sweep range [{n_min}, {n_max}] must satisfy 1 <= n_min <= n_max <= {MAX_SWEEP_N}"
        )));
    }
    let per_n: Vec<Vec<FloatErrorRecord>> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let p = Polynomial::monomial(rational::int(1), n);
            let grid = NodeGrid::new(rational::int(0), rational::int(1), n)?;
            let reference = Reference::new(&p, &grid)?;
            Ok(strategies.iter().map(|&s| reference.record(n, s)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(per_n.into_iter().flatten().collect())
}
