#![allow(dead_code)]

use boole_core::{NodeGrid, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// A random polynomial of degree <= 8 with small rational coefficients and
/// roughly half of its coefficients zero.
pub fn random_polynomial<R: Rng>(rng: &mut R) -> Polynomial {
    let len = rng.gen_range(0..=9);
    let coeffs = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Rational::zero()
            } else {
                let numer: i64 = rng.gen_range(-999..=999);
                let denom: i64 = if rng.gen_bool(0.5) {
                    1
                } else {
                    rng.gen_range(1..=40)
                };
                Rational::new(numer.into(), denom.into())
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

fn big_factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// The alternating grid sum by the most literal route available: binomials as
/// factorial quotients, powers by repeated multiplication, signs by
/// multiplying out `(-1)^(n-k)`.
pub fn oracle_boole_sum(p: &Polynomial, grid: &NodeGrid) -> Rational {
    let n = grid.n();
    let coeffs = p.coefficients();
    let mut total = Rational::zero();
    for k in 0..=n {
        let x = grid.offset() + grid.step() * Rational::from_integer(BigInt::from(k));
        let mut value = Rational::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let power = coeffs.len() - 1 - i;
            let mut x_pow = Rational::one();
            for _ in 0..power {
                x_pow *= &x;
            }
            value += c * x_pow;
        }
        let binom = big_factorial(n) / (big_factorial(k) * big_factorial(n - k));
        let mut sign = BigInt::one();
        for _ in 0..(n - k) {
            sign = -sign;
        }
        total += Rational::from_integer(sign * binom) * value;
    }
    total
}
