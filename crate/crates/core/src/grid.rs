use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The arithmetic progression `a, a + b, ..., a + n*b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeGrid {
    offset: Rational,
    step: Rational,
    n: usize,
}

impl NodeGrid {
    /// Rejects `step == 0`, which would collapse every node onto `offset`.
    pub fn new(offset: Rational, step: Rational, n: usize) -> Result<Self> {
        if step.is_zero() {
            return Err(Error::InvalidStep);
        }
        Ok(NodeGrid { offset, step, n })
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn step(&self) -> &Rational {
        &self.step
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a + k*b`.
    pub fn node(&self, k: usize) -> Rational {
        &self.offset + &self.step * Rational::from_integer(k.into())
    }

    /// All `n + 1` nodes in increasing `k`.
    pub fn nodes(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..=self.n).map(|k| self.node(k))
    }

    /// Same nodes count and offset with the step replaced.
    pub fn with_step(&self, step: Rational) -> Result<Self> {
        Self::new(self.offset.clone(), step, self.n)
    }

    pub fn with_offset(&self, offset: Rational) -> Self {
        NodeGrid {
            offset,
            step: self.step.clone(),
            n: self.n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn zero_step_rejected() {
        assert_eq!(NodeGrid::new(int(1), int(0), 3), Err(Error::InvalidStep));
    }

    #[test]
    fn nodes_are_progression() {
        let g = NodeGrid::new(ratio(1, 2).unwrap(), ratio(-1, 3).unwrap(), 3).unwrap();
        let nodes: Vec<_> = g.nodes().collect();
        assert_eq!(
            nodes,
            vec![
                ratio(1, 2).unwrap(),
                ratio(1, 6).unwrap(),
                ratio(-1, 6).unwrap(),
                ratio(-1, 2).unwrap()
            ]
        );
        assert_eq!(NodeGrid::new(int(4), int(1), 0).unwrap().nodes().count(), 1);
    }
}
