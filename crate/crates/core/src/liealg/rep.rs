use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;

use super::algebra::LieAlgebra;
use crate::combinatorics::{sort_with_sign, Subsets};
use crate::{Error, QMatrix, Rational, Result};

/// A linear action of a Lie algebra: one square matrix per algebra basis vector.
#[derive(Debug, Clone)]
pub struct Representation {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<QMatrix>,
}

impl Representation {
    /// Shapes are checked here; the homomorphism property is checked by
    /// [`check_representation`](Self::check_representation).
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<QMatrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidInput(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidInput(format!(
                "action matrix of shape {:?} in a representation of dimension {dim}",
                m.shape()
            )));
        }
        Ok(Representation { algebra, dim, action })
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let action = vec![QMatrix::zeros(dim, dim); algebra.dim()];
        Representation { algebra, dim, action }
    }

    /// `ad(e_i)` has entry `c_ij^k` in row `k`, column `j`.
    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        let action = (0..n)
            .map(|i| {
                QMatrix::from_triplets(
                    n,
                    n,
                    (0..n).flat_map(|j| {
                        algebra
                            .bracket_basis(i, j)
                            .iter()
                            .map(move |(k, c)| (*k, j, c.clone()))
                    }),
                )
            })
            .collect();
        Representation {
            algebra,
            dim: n,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[QMatrix] {
        &self.action
    }

    pub fn matrix(&self, i: usize) -> &QMatrix {
        &self.action[i]
    }

    /// True iff `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` for every pair of basis vectors.
    pub fn check_representation(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).into_par_iter().all(|i| {
            ((i + 1)..n).all(|j| {
                let lhs = self.combination(self.algebra.bracket_basis(i, j));
                let rhs = &(&self.action[i] * &self.action[j]) - &(&self.action[j] * &self.action[i]);
                lhs == rhs
            })
        })
    }

    /// `ρ(x)` for `x` given in coordinates.
    pub fn combination(&self, x: &[(usize, Rational)]) -> QMatrix {
        x.iter().fold(QMatrix::zeros(self.dim, self.dim), |acc, (k, c)| {
            &acc + &self.action[*k].scale(c)
        })
    }

    /// The contragredient action `-ρ(x)^T`.
    pub fn dual(&self) -> Self {
        Representation {
            algebra: Arc::clone(&self.algebra),
            dim: self.dim,
            action: self.action.par_iter().map(|m| -&m.transpose()).collect(),
        }
    }

    /// The induced action on `∧^k`, basis of increasing `k`-tuples in lexicographic order.
    pub fn wedge(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::InvalidInput(format!(
                "wedge power {k} of a {}-dimensional representation",
                self.dim
            )));
        }
        let subsets = Subsets::new(self.dim, k);
        let n = subsets.len();
        let action = self
            .action
            .par_iter()
            .map(|m| {
                let cols = m.transpose();
                let mut triplets = Vec::new();
                for (c, tuple) in subsets.iter().enumerate() {
                    for r in 0..k {
                        for (b, v) in cols.row(tuple[r]) {
                            let mut t = tuple.to_vec();
                            t[r] = *b;
                            let sign = sort_with_sign(&mut t);
                            if sign != 0 {
                                let v = if sign > 0 { v.clone() } else { -v.clone() };
                                triplets.push((subsets.rank(&t), c, v));
                            }
                        }
                    }
                }
                QMatrix::from_triplets(n, n, triplets)
            })
            .collect();
        Ok(Representation {
            algebra: Arc::clone(&self.algebra),
            dim: n,
            action,
        })
    }

    /// `ρ ⊗ 1 + 1 ⊗ σ` with the first factor varying slowest.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.algebra, &other.algebra) && self.algebra != other.algebra {
            return Err(Error::InvalidInput(
                "tensor product of representations of different algebras".into(),
            ));
        }
        let (p, q) = (self.dim, other.dim);
        let action = self
            .action
            .par_iter()
            .zip(other.action.par_iter())
            .map(|(a, b)| {
                let mut triplets = Vec::new();
                for (i, j, v) in a.entries() {
                    for t in 0..q {
                        triplets.push((i * q + t, j * q + t, v.clone()));
                    }
                }
                for s in 0..p {
                    for (i, j, v) in b.entries() {
                        triplets.push((s * q + i, s * q + j, v.clone()));
                    }
                }
                QMatrix::from_triplets(p * q, p * q, triplets)
            })
            .collect();
        Ok(Representation {
            algebra: Arc::clone(&self.algebra),
            dim: p * q,
            action,
        })
    }

    /// Extend to the direct sum with a one-dimensional center acting as the identity.
    pub fn with_center(&self) -> Self {
        let algebra = Arc::new(self.algebra.with_center("c"));
        let mut action = self.action.clone();
        action.push(QMatrix::identity(self.dim));
        Representation {
            algebra,
            dim: self.dim,
            action,
        }
    }

    /// True iff `m` (from this space to `target`) commutes with the action.
    pub fn intertwines(&self, target: &Self, m: &QMatrix) -> bool {
        m.shape() == (target.dim, self.dim)
            && self
                .action
                .par_iter()
                .zip(target.action.par_iter())
                .all(|(a, b)| (b * m) == (m * a))
    }

    /// Scalar multiple of the identity acting, if `x` acts as one.
    pub fn acts_as_scalar(&self, x: &[(usize, Rational)]) -> Option<Rational> {
        let m = self.combination(x);
        let c = m.get(0, 0).cloned().unwrap_or_else(Rational::zero);
        (m == QMatrix::identity(self.dim).scale(&c)).then_some(c)
    }
}
