//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A polynomial stored leading-first: `coefficients()[0]` multiplies the
/// highest power, the last entry is the constant term.
///
/// Leading zeros are always stripped, so the zero polynomial is the empty
/// coefficient sequence and has no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut coeffs = coeffs;
        let first_nonzero = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(coeffs.len());
        coeffs.drain(..first_nonzero);
        Polynomial { coeffs }
    }

    /// Integer coefficients, leading-first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Result<&Rational> {
        self.coeffs.first().ok_or(Error::UndefinedDegree)
    }

    /// Coefficient of `x^power`; zero above the degree.
    pub fn coefficient(&self, power: usize) -> Rational {
        match self.degree() {
            Some(d) if power <= d => self.coeffs[d - power].clone(),
            _ => Rational::zero(),
        }
    }

    /// Horner evaluation.
    ///
    /// Runs over integers on `v^d * L * p(u/v)`, where `x = u/v` and `L` is
    /// the lcm of the coefficient denominators, and reduces once at the end.
    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(degree) = self.degree() else {
            return Rational::zero();
        };
        let common = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let (u, v) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut v_pow = BigInt::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc *= u;
            if !c.is_zero() {
                acc += c.numer() * (&common / c.denom()) * &v_pow;
            }
            if j < degree {
                v_pow *= v;
            }
        }
        Rational::new(acc, common * v_pow)
    }

    /// `alpha * p + beta * q`.
    pub fn linear_combine(
        alpha: &Rational,
        p: &Polynomial,
        beta: &Rational,
        q: &Polynomial,
    ) -> Self {
        let len = p.coeffs.len().max(q.coeffs.len());
        let mut out = vec![Rational::zero(); len];
        // Right-align both operands so equal powers share a slot.
        for (slot, c) in out[len - p.coeffs.len()..].iter_mut().zip(&p.coeffs) {
            *slot += alpha * c;
        }
        for (slot, c) in out[len - q.coeffs.len()..].iter_mut().zip(&q.coeffs) {
            *slot += beta * c;
        }
        Self::new(out)
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * alpha).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Polynomial) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Taylor shift: the polynomial `q` with `q(x) = p(x + c)`.
    ///
    /// Nested evaluation of `p` at the symbolic argument `x + c`, so the cost
    /// is quadratic in the degree and no power of `(x + c)` is ever expanded.
    pub fn shift(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut acc: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            // acc <- acc * (x + c) + a
            acc.push(Rational::zero());
            for i in (1..acc.len()).rev() {
                let carried = &acc[i - 1] * c;
                acc[i] += carried;
            }
            let last = acc.len() - 1;
            acc[last] += a;
        }
        Self::new(acc)
    }
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::linear_combine(&Rational::one(), self, &Rational::one(), rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::linear_combine(&Rational::one(), self, &-Rational::one(), rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Canonical form: descending powers, explicit signs between terms, unit
/// coefficients omitted on non-constant terms, zero terms skipped. The zero
/// polynomial prints as `0`.
///
/// ```
/// use boole_core::{rational, Polynomial};
/// let p = Polynomial::new(vec![rational::ratio(-3, 2).unwrap(), rational::int(1), rational::int(0), rational::int(-1)]);
/// assert_eq!(p.to_string(), "-3/2x^3 + x^2 - 1");
/// ```
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(degree) = self.degree() else {
            return f.write_str("0");
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = degree - i;
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let magnitude = c.abs();
            if power == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        Ok(())
    }
}
