use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::domain::{EliminationDomain, Integers, Row};
use super::eliminate::{eliminate, PivotOrder, Reduced};
use super::{integer_rows, SparseMatrix, SparseVec};
use crate::Rational;

/// A basis of a subspace, kept in reduced row echelon form.
///
/// The leading entry of each vector is 1, leading columns strictly increase, and
/// every leading column is zero in all other vectors. Equal subspaces therefore
/// have equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis<T> {
    ambient_dim: usize,
    vectors: Vec<SparseVec<T>>,
}

impl<T> SubspaceBasis<T> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[SparseVec<T>] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<SparseVec<T>> {
        self.vectors
    }

    /// Leading column of each basis vector.
    pub fn pivots(&self) -> Vec<usize> {
        self.vectors.iter().map(|v| v[0].0).collect()
    }
}

impl SubspaceBasis<Rational> {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec<Rational>>,
    {
        let rows: Vec<SparseVec<Rational>> = vectors
            .into_iter()
            .inspect(|v| {
                assert!(v.iter().all(|(c, _)| *c < ambient_dim));
            })
            .collect();
        let m = SparseMatrix::from_rows(ambient_dim, rows);
        Self::row_space(&m)
    }

    /// Canonical basis of the row space of `m`.
    pub fn row_space(m: &SparseMatrix<Rational>) -> Self {
        let red = eliminate(&Integers, integer_rows(m), m.ncols(), PivotOrder::Ascending);
        SubspaceBasis {
            ambient_dim: m.ncols(),
            vectors: back_reduce(red),
        }
    }

    /// Coefficients of `v` in this basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec<Rational>) -> Option<Vec<Rational>> {
        let mut rest: Vec<Rational> = vec![Rational::zero(); self.ambient_dim];
        for (i, x) in v {
            rest[*i] = x.clone();
        }
        let mut coords = Vec::with_capacity(self.dim());
        for b in &self.vectors {
            let c = rest[b[0].0].clone();
            if !c.is_zero() {
                for (j, y) in b {
                    rest[*j] -= &c * y;
                }
            }
            coords.push(c);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec<Rational>) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vectors.par_iter().all(|v| other.contains(v))
    }

    /// The basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> SparseMatrix<Rational> {
        SparseMatrix::from_rows(self.ambient_dim, self.vectors.clone())
    }
}

/// Turn an ascending echelon form into reduced row echelon form over the rationals.
fn back_reduce(red: Reduced<BigInt>) -> Vec<SparseVec<Rational>> {
    let mut rows: Vec<Row<BigInt>> = red.pivots.into_iter().map(|p| p.row).collect();
    // Ascending elimination yields pivot rows with increasing leading columns.
    for k in (0..rows.len()).rev() {
        let (head, tail) = rows.split_at_mut(k);
        let pivot = &tail[0];
        let col = pivot[0].0;
        let pc = &pivot[0].1;
        head.par_iter_mut().for_each(|r| {
            if let Ok(pos) = r.binary_search_by_key(&col, |(c, _)| *c) {
                let rc = r[pos].1.clone();
                *r = combine_int(r, pivot, pc, &rc);
            }
        });
    }
    rows.into_iter()
        .map(|r| {
            let lead = r[0].1.clone();
            r.into_iter()
                .map(|(c, v)| (c, Rational::new(v, lead.clone())))
                .collect()
        })
        .collect()
}

fn combine_int(r: &Row<BigInt>, p: &Row<BigInt>, pc: &BigInt, rc: &BigInt) -> Row<BigInt> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, pc * &r[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(rc * &p[j].1)));
            j += 1;
        } else {
            let v = pc * &r[i].1 - rc * &p[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    Integers.normalize(&mut out);
    out
}

/// Canonical kernel basis from a descending echelon form.
///
/// For each free column `f` the kernel vector is the unique solution with a 1 at
/// `f` and 0 at every other free column. Pivot rows of a descending elimination
/// are supported on columns up to their pivot, so the solution vanishes below `f`
/// and the family is already in reduced row echelon form.
pub(crate) fn kernel_from_descending(red: &Reduced<BigInt>) -> SubspaceBasis<Rational> {
    let ncols = red.ncols;
    let mut pivots: Vec<&super::eliminate::PivotRow<BigInt>> = red.pivots.iter().collect();
    pivots.sort_by_key(|p| p.col);
    let free = red.free_columns();

    let vectors: Vec<SparseVec<Rational>> = free
        .par_iter()
        .map(|&f| {
            let mut x: Vec<Rational> = vec![Rational::zero(); ncols];
            let mut nonzero = vec![false; ncols];
            x[f] = Rational::one();
            nonzero[f] = true;
            let start = pivots.partition_point(|p| p.col < f);
            for p in &pivots[start..] {
                let (last, body) = p.row.split_last().expect("pivot row is nonempty");
                debug_assert_eq!(last.0, p.col);
                let mut s = Rational::zero();
                for (j, u) in body {
                    if nonzero[*j] {
                        s += &x[*j] * u;
                    }
                }
                if !s.is_zero() {
                    let v = -s / &last.1;
                    x[p.col] = v;
                    nonzero[p.col] = true;
                }
            }
            x.into_iter().enumerate().filter(|(j, _)| nonzero[*j]).collect()
        })
        .collect();

    SubspaceBasis {
        ambient_dim: ncols,
        vectors,
    }
}
