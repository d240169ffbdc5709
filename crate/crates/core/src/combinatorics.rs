use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)`, zero when `k > n`.
///
/// Multiplicative formula over the smaller of `k` and `n - k`; every
/// intermediate division is exact because the running value is always
/// `C(n - k + i, i)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigUint::one());
        }
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 4), BigUint::from(0u32));
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(4), BigUint::from(24u32));
        assert_eq!(factorial(20), BigUint::from(2432902008176640000u64));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorial_recurrence() {
        for n in 1..=40u64 {
            assert_eq!(factorial(n), factorial(n - 1) * n);
        }
    }

    #[test]
    fn row_sums_are_powers_of_two() {
        for n in 0..=60u64 {
            let sum: BigUint = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, BigUint::one() << n);
        }
    }
}
