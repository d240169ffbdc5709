//! The generalized Boole identity
//!
//! ```text
//! sum_{k=0}^{n} (-1)^(n-k) C(n,k) p(a + k*b) = a0 * b^n * n!
//! ```
//!
//! for every polynomial `p` of degree at most `n`, where `a0` is the
//! coefficient of `x^n` in `p` (zero when `deg p < n`). Also the classic
//! integer special cases and a seeded fuzzing verifier.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::grid::NodeGrid;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    Exact,
}

/// Both sides of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumReport {
    pub computed: Rational,
    pub predicted: Rational,
    /// `computed - predicted`.
    pub residual: Rational,
    pub holds: bool,
    pub mode: SumMode,
    pub n: usize,
    pub grid: NodeGrid,
}

fn check_degree(p: &Polynomial, grid: &NodeGrid) -> Result<()> {
    match p.degree() {
        Some(degree) if degree > grid.n() => Err(Error::DegreeOverflow {
            degree,
            n: grid.n(),
        }),
        _ => Ok(()),
    }
}

/// The alternating sum `sum_k (-1)^(n-k) C(n,k) p(a + k*b)` by direct
/// summation. Fails with [`Error::DegreeOverflow`] when `deg p > n`, since the
/// closed form no longer applies there.
pub fn boole_sum(p: &Polynomial, grid: &NodeGrid) -> Result<Rational> {
    check_degree(p, grid)?;
    let n = grid.n();
    let mut weight = BigInt::one();
    let mut sum = Rational::zero();
    for (k, x) in grid.nodes().enumerate() {
        let term = p.eval(&x) * Rational::from_integer(weight.clone());
        if (n - k).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        // C(n, k+1) = C(n, k) * (n - k) / (k + 1)
        weight = weight * (n - k) / (k + 1);
    }
    Ok(sum)
}

/// `[x^n]p * b^n * n!`.
pub fn predicted_value(p: &Polynomial, grid: &NodeGrid) -> Result<Rational> {
    check_degree(p, grid)?;
    let n = grid.n();
    let lead = p.coefficient(n);
    if lead.is_zero() {
        return Ok(lead);
    }
    Ok(lead
        * rational::pow(grid.step(), n as u32)
        * Rational::from_integer(factorial(n as u64).into()))
}

pub fn verify_proposition(p: &Polynomial, grid: &NodeGrid) -> Result<SumReport> {
    let computed = boole_sum(p, grid)?;
    let predicted = predicted_value(p, grid)?;
    let residual = &computed - &predicted;
    Ok(SumReport {
        holds: residual.is_zero(),
        computed,
        predicted,
        residual,
        mode: SumMode::Exact,
        n: grid.n(),
        grid: grid.clone(),
    })
}

/// Where the integer sums start their index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexFrom {
    /// `k = 0..=n`, matching the general grid sum at `a = 0, b = 1` (with `0^0 = 1`).
    Zero,
    /// `k = 1..=n`, the historical form of the factorial formula.
    One,
}

/// `sum_{k} (-1)^(n-k) C(n,k) k^m` over the chosen index range.
///
/// Under [`IndexFrom::Zero`] this is 0 for `m < n` and `n!` for `m = n`. Under
/// [`IndexFrom::One`] the same holds except at `m = 0`, where the missing
/// `k = 0` term leaves `-(-1)^n`.
pub fn vanishing_sum(n: u64, m: u64, from: IndexFrom) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    if m > n {
        return Err(Error::OutOfRange(format!(
            "m = {m} exceeds n = {n}; the identity only covers m <= n"
        )));
    }
    let start = match from {
        IndexFrom::Zero => 0,
        IndexFrom::One => 1,
    };
    let mut weight = BigInt::from(crate::combinatorics::binomial(n, start));
    let mut sum = BigInt::zero();
    for k in start..=n {
        let term = &weight * Pow::pow(BigInt::from(k), m as u32);
        if (n - k).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        weight = weight * (n - k) / (k + 1);
    }
    Ok(sum)
}

/// `sum_{k=1}^{n} (-1)^(n-k) C(n,k) k^n`, which equals `n!`.
pub fn boole_classic(n: u64) -> Result<BigInt> {
    vanishing_sum(n, n, IndexFrom::One)
}

/// `n!` as a signed integer, for comparison with the sums above.
pub fn factorial_int(n: u64) -> BigInt {
    BigInt::from(factorial(n))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials: usize,
    pub failures: usize,
    pub seed: u64,
    pub witnesses: Vec<(Polynomial, NodeGrid)>,
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let numer = rng.gen_range(-bound..=bound);
    let denom = rng.gen_range(1..=bound.max(1));
    Rational::new(numer.into(), denom.into())
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let bound = bound.max(1);
    let magnitude = rng.gen_range(1..=bound);
    let numer = if rng.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    };
    let denom = rng.gen_range(1..=bound);
    Rational::new(numer.into(), denom.into())
}

/// The `(polynomial, grid)` pair used by trial `trial` of a fuzz run.
///
/// Depends only on `(seed, trial)` and the bounds: each trial draws from its
/// own ChaCha stream, so trials can be generated in any order or in parallel.
/// `n` is uniform in `0..=max_degree` and `deg p` uniform in `0..=n`;
/// numerators lie in `[-coeff_bound, coeff_bound]` and denominators in
/// `[1, coeff_bound]`.
pub fn fuzz_instance(
    seed: u64,
    trial: u64,
    max_degree: usize,
    coeff_bound: u64,
) -> (Polynomial, NodeGrid) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let bound = i64::try_from(coeff_bound).unwrap_or(i64::MAX);
    let n = rng.gen_range(0..=max_degree);
    let degree = rng.gen_range(0..=n);
    let coeffs = (0..=degree)
        .map(|_| random_rational(&mut rng, bound))
        .collect();
    let a = random_rational(&mut rng, bound);
    let b = random_nonzero_rational(&mut rng, bound);
    let grid = NodeGrid::new(a, b, n).expect("step drawn nonzero");
    (Polynomial::new(coeffs), grid)
}

/// Runs [`verify_proposition`] on `trials` seeded random instances.
///
/// Trials run in parallel; the report is assembled in trial order, so it is
/// identical to a sequential run.
pub fn fuzz_verify(max_degree: usize, trials: usize, seed: u64, coeff_bound: u64) -> FuzzReport {
    let witnesses: Vec<_> = (0..trials as u64)
        .into_par_iter()
        .filter_map(|trial| {
            let (p, grid) = fuzz_instance(seed, trial, max_degree, coeff_bound);
            match verify_proposition(&p, &grid) {
                Ok(report) if report.holds => None,
                _ => Some((p, grid)),
            }
        })
        .collect();
    FuzzReport {
        trials,
        failures: witnesses.len(),
        seed,
        witnesses,
    }
}
