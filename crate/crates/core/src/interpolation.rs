//! Lagrange interpolation over distinct nodes, and leading-coefficient
//! recovery on arithmetic grids.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::grid::NodeGrid;
use crate::polynomial::Polynomial;
use crate::rational::{self, Rational};

/// Nonempty interpolation data with pairwise distinct abscissae.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    xs: Vec<Rational>,
    ys: Vec<Rational>,
}

impl PointSet {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let (xs, ys): (Vec<_>, Vec<_>) = points.into_iter().unzip();
        Self::from_columns(xs, ys)
    }

    pub fn from_columns(xs: Vec<Rational>, ys: Vec<Rational>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::Dimension(format!(
                "{} abscissae but {} values",
                xs.len(),
                ys.len()
            )));
        }
        if xs.is_empty() {
            return Err(Error::Dimension("point set is empty".into()));
        }
        check_distinct(&xs)?;
        Ok(PointSet { xs, ys })
    }

    /// The points `(a + k*b, values[k])`.
    pub fn on_grid(grid: &NodeGrid, values: Vec<Rational>) -> Result<Self> {
        check_sample_count(grid, &values)?;
        Ok(PointSet {
            xs: grid.nodes().collect(),
            ys: values,
        })
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn xs(&self) -> &[Rational] {
        &self.xs
    }

    pub fn ys(&self) -> &[Rational] {
        &self.ys
    }
}

fn check_distinct(nodes: &[Rational]) -> Result<()> {
    let mut seen = HashSet::with_capacity(nodes.len());
    for x in nodes {
        if !seen.insert(x) {
            return Err(Error::DegenerateNodes(x.to_string()));
        }
    }
    Ok(())
}

fn check_sample_count(grid: &NodeGrid, values: &[Rational]) -> Result<()> {
    if values.len() != grid.n() + 1 {
        return Err(Error::Dimension(format!(
            "grid with n = {} has {} nodes, got {} values",
            grid.n(),
            grid.n() + 1,
            values.len()
        )));
    }
    Ok(())
}

/// `L_k(x) = prod_{j != k} (x - x_j) / (x_k - x_j)`.
pub fn lagrange_basis(nodes: &[Rational], k: usize) -> Result<Polynomial> {
    if k >= nodes.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: nodes.len(),
        });
    }
    check_distinct(nodes)?;
    Ok(basis_unchecked(nodes, k))
}

/// `prod_j (x - x_j)`, leading-first.
fn node_polynomial(nodes: &[Rational]) -> Vec<Rational> {
    let mut w = vec![Rational::one()];
    for xj in nodes {
        w.push(Rational::zero());
        for i in (1..w.len()).rev() {
            let carried = &w[i - 1] * xj;
            w[i] -= carried;
        }
    }
    w
}

/// `L_k` from the node polynomial: synthetic division by `(x - x_k)`, then
/// normalisation by `prod_{j != k} (x_k - x_j)`.
fn basis_from_node_polynomial(nodes: &[Rational], w: &[Rational], k: usize) -> Polynomial {
    let xk = &nodes[k];
    let mut quotient = Vec::with_capacity(w.len() - 1);
    let mut carry = Rational::zero();
    for c in &w[..w.len() - 1] {
        carry = carry * xk + c;
        quotient.push(carry.clone());
    }
    let denominator = nodes
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .fold(Rational::one(), |acc, (_, xj)| acc * (xk - xj));
    Polynomial::new(quotient).scale(&denominator.recip())
}

fn basis_unchecked(nodes: &[Rational], k: usize) -> Polynomial {
    basis_from_node_polynomial(nodes, &node_polynomial(nodes), k)
}

/// The unique polynomial of degree below `data.len()` through every point,
/// assembled as `sum_k y_k L_k`.
pub fn lagrange_interpolate(data: &PointSet) -> Polynomial {
    let w = node_polynomial(&data.xs);
    let mut acc = Polynomial::zero();
    for (k, y) in data.ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let term = basis_from_node_polynomial(&data.xs, &w, k);
        acc = Polynomial::linear_combine(&Rational::one(), &acc, y, &term);
    }
    acc
}

/// `[p(a + k*b)]` for `k = 0..=n`.
pub fn sample(p: &Polynomial, grid: &NodeGrid) -> Vec<Rational> {
    grid.nodes().map(|x| p.eval(&x)).collect()
}

/// The `x^n` coefficient of the interpolant through `(a + k*b, values[k])`,
/// via the closed form `(1 / (n! b^n)) sum_k (-1)^(n-k) C(n,k) values[k]`.
///
/// Zero when the interpolant has degree below `n`.
pub fn leading_coeff_from_samples(values: &[Rational], grid: &NodeGrid) -> Result<Rational> {
    check_sample_count(grid, values)?;
    let n = grid.n();
    let mut sum = Rational::zero();
    for (k, y) in values.iter().enumerate() {
        let weight = Rational::from_integer(BigInt::from(binomial(n as u64, k as u64)));
        if (n - k).is_multiple_of(2) {
            sum += weight * y;
        } else {
            sum -= weight * y;
        }
    }
    let scale = Rational::from_integer(BigInt::from(factorial(n as u64)))
        * rational::pow(grid.step(), n as u32);
    Ok(sum / scale)
}
