use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactla::SubspaceBasis;
use crate::{Error, QMatrix, Rational, Result, SparseVec};

/// Collect `(index, value)` terms into a sorted sparse vector, summing repeats.
pub(crate) fn accumulate<I>(terms: I) -> SparseVec<Rational>
where
    I: IntoIterator<Item = (usize, Rational)>,
{
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, v) in terms {
        *acc.entry(k).or_insert_with(Rational::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// A finite-dimensional Lie algebra given by structure constants on a labeled basis.
///
/// `[e_i, e_j] = sum_k c_ij^k e_k`, stored as one sparse vector per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<SparseVec<Rational>>,
}

impl LieAlgebra {
    /// Build from a bracket function on basis indices; antisymmetry is checked.
    pub fn from_brackets<F>(labels: Vec<String>, bracket: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> SparseVec<Rational>,
    {
        let dim = labels.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = bracket(i, j);
                if v.iter().any(|(k, _)| *k >= dim) {
                    return Err(Error::InvalidInput(format!("bracket [{i},{j}] leaves the basis")));
                }
                table.push(v);
            }
        }
        let alg = LieAlgebra { labels, table };
        for i in 0..dim {
            for j in i..dim {
                let neg: SparseVec<Rational> =
                    alg.bracket_basis(j, i).iter().map(|(k, v)| (*k, -v)).collect();
                if *alg.bracket_basis(i, j) != neg {
                    return Err(Error::InvalidInput(format!(
                        "bracket is not antisymmetric at ({}, {})",
                        alg.labels[i], alg.labels[j]
                    )));
                }
            }
        }
        Ok(alg)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            labels: (0..dim).map(|i| format!("x{i}")).collect(),
            table: vec![Vec::new(); dim * dim],
        }
    }

    /// The span of the given matrices, which must be linearly independent and
    /// closed under the commutator.
    pub fn from_matrices(labels: Vec<String>, mats: &[QMatrix]) -> Result<Self> {
        let coords = MatrixCoordinates::new(mats)?;
        let commutators: Vec<Vec<SparseVec<Rational>>> = (0..mats.len())
            .into_par_iter()
            .map(|i| {
                (0..mats.len())
                    .map(|j| {
                        let c = &(&mats[i] * &mats[j]) - &(&mats[j] * &mats[i]);
                        coords
                            .solve(&c)
                            .ok_or_else(|| Error::InvalidInput(format!("[{i},{j}] is not in the span")))
                    })
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        LieAlgebra::from_brackets(labels, |i, j| commutators[i][j].clone())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec<Rational> {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &SparseVec<Rational>, y: &SparseVec<Rational>) -> SparseVec<Rational> {
        accumulate(x.iter().flat_map(|(i, a)| {
            y.iter().flat_map(move |(j, b)| {
                let ab = a * b;
                self.bracket_basis(*i, *j).iter().map(move |(k, c)| (*k, &ab * c))
            })
        }))
    }

    /// True iff the Jacobi identity holds on every triple of basis vectors.
    pub fn check_jacobi(&self) -> bool {
        let n = self.dim();
        (0..n).into_par_iter().all(|i| {
            let ei = vec![(i, Rational::one())];
            for j in (i + 1)..n {
                let ej = vec![(j, Rational::one())];
                let ij = self.bracket_basis(i, j);
                for k in (j + 1)..n {
                    let ek = vec![(k, Rational::one())];
                    let jk = self.bracket_basis(j, k);
                    let ki = self.bracket_basis(k, i);
                    let sum = accumulate(
                        self.bracket(&ei, jk)
                            .into_iter()
                            .chain(self.bracket(&ej, ki))
                            .chain(self.bracket(&ek, ij)),
                    );
                    if !sum.is_empty() {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// Restriction to the span of the listed basis vectors, which must close.
    pub fn subalgebra(&self, basis: &[usize]) -> Result<Self> {
        let mut position = vec![usize::MAX; self.dim()];
        for (new, &old) in basis.iter().enumerate() {
            position[old] = new;
        }
        let labels = basis.iter().map(|&i| self.labels[i].clone()).collect();
        let mut table = Vec::with_capacity(basis.len() * basis.len());
        for &i in basis {
            for &j in basis {
                let mut v = Vec::new();
                for (k, c) in self.bracket_basis(i, j) {
                    if position[*k] == usize::MAX {
                        return Err(Error::InvalidInput(format!(
                            "[{}, {}] leaves the subalgebra",
                            self.labels[i], self.labels[j]
                        )));
                    }
                    v.push((position[*k], c.clone()));
                }
                v.sort_by_key(|(k, _)| *k);
                table.push(v);
            }
        }
        Ok(LieAlgebra { labels, table })
    }

    /// Direct sum with a one-dimensional center, appended as the last basis vector.
    pub fn with_center(&self, label: &str) -> Self {
        let n = self.dim();
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let mut table = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..=n {
            for j in 0..=n {
                table.push(if i < n && j < n {
                    self.bracket_basis(i, j).clone()
                } else {
                    Vec::new()
                });
            }
        }
        LieAlgebra { labels, table }
    }
}

/// Expresses matrices in a fixed independent family of matrices.
pub(crate) struct MatrixCoordinates {
    shape: (usize, usize),
    span: SubspaceBasis<Rational>,
    count: usize,
}

impl MatrixCoordinates {
    pub fn new(mats: &[QMatrix]) -> Result<Self> {
        let shape = mats.first().map_or((0, 0), QMatrix::shape);
        let flat = shape.0 * shape.1;
        // Augment each flattened matrix with a unit vector recording its index; the
        // reduced basis then carries the change of coordinates in its tail.
        let rows = mats.iter().enumerate().map(|(i, m)| {
            assert_eq!(m.shape(), shape, "matrices of different shapes");
            let mut v: SparseVec<Rational> = m
                .entries()
                .map(|(r, c, x)| (r * shape.1 + c, x.clone()))
                .collect();
            v.push((flat + i, Rational::one()));
            v
        });
        let span = SubspaceBasis::span(flat + mats.len(), rows);
        if span.pivots().iter().any(|&p| p >= flat) {
            return Err(Error::InvalidInput("matrices are linearly dependent".into()));
        }
        Ok(MatrixCoordinates {
            shape,
            span,
            count: mats.len(),
        })
    }

    pub fn solve(&self, m: &QMatrix) -> Option<SparseVec<Rational>> {
        let flat = self.shape.0 * self.shape.1;
        let v: SparseVec<Rational> = m
            .entries()
            .map(|(r, c, x)| (r * self.shape.1 + c, x.clone()))
            .collect();
        // Reduced rows have the form [B_k | T_k]; v = sum_k v[p_k] B_k must hold exactly.
        let mut residual: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for b in self.span.vectors() {
            let p = b[0].0;
            let Some(c) = v.iter().find(|(k, _)| *k == p).map(|(_, x)| x.clone()) else {
                continue;
            };
            for (k, x) in b {
                if *k < flat {
                    *residual.entry(*k).or_insert_with(Rational::zero) -= &c * x;
                } else {
                    *out.entry(*k - flat).or_insert_with(Rational::zero) += &c * x;
                }
            }
        }
        if residual.values().any(|x| !x.is_zero()) {
            return None;
        }
        debug_assert!(out.keys().all(|&k| k < self.count));
        Some(out.into_iter().filter(|(_, x)| !x.is_zero()).collect())
    }
}
