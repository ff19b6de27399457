use rayon::prelude::*;

use crate::combinatorics::Subsets;
use crate::{QMatrix, Rational};

/// Coordinates on `∧^k W* ⊗ U`: column `rank(I) * dim U + u` for an increasing
/// `k`-tuple `I` (lexicographic rank) and a value index `u`, so the value index
/// varies fastest.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    k: usize,
    value_dim: usize,
    subsets: Subsets,
}

impl CochainSpace {
    pub fn new(base_dim: usize, k: usize, value_dim: usize) -> Self {
        CochainSpace {
            k,
            value_dim,
            subsets: Subsets::new(base_dim, k),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value_dim(&self) -> usize {
        self.value_dim
    }

    pub fn tuples(&self) -> &Subsets {
        &self.subsets
    }

    pub fn dim(&self) -> usize {
        self.subsets.len() * self.value_dim
    }

    pub fn index(&self, tuple: &[usize], value: usize) -> usize {
        self.subsets.rank(tuple) * self.value_dim + value
    }

    /// `(tuple, value)` for a coordinate.
    pub fn split(&self, index: usize) -> (&[usize], usize) {
        (self.subsets.get(index / self.value_dim), index % self.value_dim)
    }
}

/// Build a matrix column by column, in parallel.
pub(crate) fn assemble<F>(nrows: usize, ncols: usize, column: F) -> QMatrix
where
    F: Fn(usize) -> Vec<(usize, Rational)> + Send + Sync,
{
    let cols: Vec<Vec<(usize, Rational)>> = (0..ncols).into_par_iter().map(column).collect();
    QMatrix::from_triplets(
        nrows,
        ncols,
        cols.into_iter()
            .enumerate()
            .flat_map(|(j, col)| col.into_iter().map(move |(i, v)| (i, j, v))),
    )
}
