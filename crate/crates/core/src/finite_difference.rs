//! Forward differences `Δ_h f(x) = f(x + h) - f(x)`, symbolic on polynomials
//! and numeric on sampled sequences.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// `p(x + h) - p(x)`.
pub fn delta(p: &Polynomial, h: &Rational) -> Result<Polynomial> {
    if h.is_zero() {
        return Err(Error::InvalidStep);
    }
    Ok(&p.shift(h) - p)
}

/// `Δ_h` applied `n` times. Stops early once the zero polynomial is reached.
pub fn nth_delta(p: &Polynomial, n: usize, h: &Rational) -> Result<Polynomial> {
    if h.is_zero() {
        return Err(Error::InvalidStep);
    }
    let mut current = p.clone();
    for _ in 0..n {
        if current.is_zero() {
            break;
        }
        current = delta(&current, h)?;
    }
    Ok(current)
}

/// Row 0 holds the input values; row `i + 1` holds adjacent differences of
/// row `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTable {
    rows: Vec<Vec<Rational>>,
}

impl DifferenceTable {
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn last_row(&self) -> &[Rational] {
        self.rows.last().expect("table always has row 0")
    }

    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows
    }
}

pub fn difference_table(values: &[Rational], depth: usize) -> Result<DifferenceTable> {
    if values.is_empty() {
        return Err(Error::Dimension(
            "difference table needs at least one value".into(),
        ));
    }
    if depth >= values.len() {
        return Err(Error::Dimension(format!(
            "depth {depth} needs at least {} values, got {}",
            depth + 1,
            values.len()
        )));
    }
    let mut rows = Vec::with_capacity(depth + 1);
    rows.push(values.to_vec());
    for _ in 0..depth {
        let next = rows
            .last()
            .unwrap()
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .collect();
        rows.push(next);
    }
    Ok(DifferenceTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&poly(&[1, 0, 0]), &int(1)).unwrap(), poly(&[2, 1]));
        assert!(delta(&poly(&[5]), &int(3)).unwrap().is_zero());
        assert_eq!(
            delta(&poly(&[1, 0, 0, 0]), &int(2)).unwrap(),
            poly(&[6, 12, 8])
        );
        assert!(delta(&Polynomial::zero(), &int(1)).unwrap().is_zero());
    }

    #[test]
    fn zero_step_rejected() {
        assert_eq!(delta(&poly(&[1, 0]), &int(0)), Err(Error::InvalidStep));
        assert_eq!(
            nth_delta(&poly(&[1, 0]), 0, &int(0)),
            Err(Error::InvalidStep)
        );
    }

    #[test]
    fn nth_delta_examples() {
        assert_eq!(
            nth_delta(&poly(&[1, 0, 0, 0]), 3, &int(1)).unwrap(),
            poly(&[6])
        );
        let p = poly(&[3, -1, 4]);
        assert_eq!(nth_delta(&p, 0, &int(1)).unwrap(), p);
        assert!(nth_delta(&poly(&[1, 0, 0]), 3, &int(1)).unwrap().is_zero());
    }

    #[test]
    fn table_examples() {
        let t = difference_table(&ints(&[0, 1, 8, 27]), 3).unwrap();
        assert_eq!(
            t.rows(),
            &[
                ints(&[0, 1, 8, 27]),
                ints(&[1, 7, 19]),
                ints(&[6, 12]),
                ints(&[6])
            ]
        );
        let t = difference_table(&ints(&[4, 4, 4]), 1).unwrap();
        assert_eq!(t.last_row(), ints(&[0, 0]).as_slice());
        let t = difference_table(&ints(&[0, 1, 4, 9]), 2).unwrap();
        assert_eq!(t.last_row(), ints(&[2, 2]).as_slice());
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn table_dimension_errors() {
        assert!(matches!(difference_table(&[], 0), Err(Error::Dimension(_))));
        assert!(matches!(
            difference_table(&ints(&[1, 2]), 2),
            Err(Error::Dimension(_))
        ));
        assert_eq!(difference_table(&ints(&[9]), 0).unwrap().rows().len(), 1);
    }
}
