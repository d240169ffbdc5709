//! Exact finite-difference calculus, Lagrange interpolation on arithmetic
//! grids, and verification of the alternating binomial sum identity
//!
//! ```text
//! sum_{k=0}^{n} (-1)^(n-k) C(n,k) p(a + k*b) = a0 * b^n * n!
//! ```
//!
//! All exact work is done over [`Rational`]; [`float_numerics`] measures how
//! badly binary64 summation fares on the same sums.

pub mod boole;
pub mod combinatorics;
pub mod error;
pub mod finite_difference;
pub mod float_numerics;
pub mod grid;
pub mod interpolation;
pub mod polynomial;
pub mod rational;

pub use error::{Error, Result};
pub use grid::NodeGrid;
pub use polynomial::Polynomial;
pub use rational::Rational;
