//! Exact sparse linear algebra over the rationals.
//!
//! Every verdict in this crate is a rank or kernel dimension, so the default path
//! is exact: rational rows are scaled to primitive integer rows and reduced with
//! fraction-free elimination. Reduction modulo a prime is available as a fast
//! lower bound on the rank.

mod domain;
mod eliminate;
mod matrix;
mod subspace;
mod text;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use domain::{is_prime, EliminationDomain, Integers, PrimeField};
pub use eliminate::{eliminate, PivotOrder, PivotRow, Reduced};
pub use matrix::SparseMatrix;
pub use subspace::SubspaceBasis;

use crate::{Error, Rational, Result};

/// Sparse vector as sorted `(index, value)` pairs with no zero values.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Scale each row to a primitive integer vector. Row spaces are unchanged.
pub(crate) fn integer_rows(m: &SparseMatrix<Rational>) -> Vec<domain::Row<BigInt>> {
    m.rows()
        .iter()
        .map(|r| {
            let lcm = r.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
            r.iter()
                .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
                .collect()
        })
        .collect()
}

impl SparseMatrix<Rational> {
    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        eliminate(&Integers, integer_rows(self), self.ncols(), PivotOrder::Markowitz).rank()
    }

    /// Canonical basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis<Rational> {
        let red = eliminate(
            &Integers,
            integer_rows(self),
            self.ncols(),
            PivotOrder::Descending,
        );
        subspace::kernel_from_descending(&red)
    }

    /// Rank of the reduction modulo `p`; never exceeds [`rank`](Self::rank).
    pub fn modular_rank(&self, p: u64) -> Result<usize> {
        let field = prime_field(p)?;
        let mut rows = Vec::with_capacity(self.nrows());
        for r in self.rows() {
            let mut out = Vec::with_capacity(r.len());
            for (c, v) in r {
                let den = field.reduce(v.denom());
                let inv = field.inv(den).ok_or(Error::BadPrime {
                    p,
                    reason: "divides a denominator",
                })?;
                let x = field.mul(&field.reduce(v.numer()), &inv);
                if x != 0 {
                    out.push((*c, x));
                }
            }
            rows.push(out);
        }
        Ok(eliminate(&field, rows, self.ncols(), PivotOrder::Markowitz).rank())
    }

    /// Image of a basis: the matrix applied to each vector.
    pub fn apply_to(&self, basis: &SubspaceBasis<Rational>) -> Vec<SparseVec<Rational>> {
        use rayon::prelude::*;
        basis.vectors().par_iter().map(|v| self.mul_vec(v)).collect()
    }

    /// If `self = c * other` for a single nonzero rational `c`, return `c`.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        if self.shape() != other.shape() || self.nnz() != other.nnz() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for (a, b) in self.rows().iter().zip(other.rows()) {
            if a.len() != b.len() {
                return None;
            }
            for ((ca, va), (cb, vb)) in a.iter().zip(b) {
                if ca != cb {
                    return None;
                }
                let q = va / vb;
                match &ratio {
                    None => ratio = Some(q),
                    Some(r) if *r == q => {}
                    Some(_) => return None,
                }
            }
        }
        ratio.filter(|r| !r.is_zero())
    }
}

pub(crate) fn prime_field(p: u64) -> Result<PrimeField> {
    if p >= 1 << 63 || !is_prime(p) {
        return Err(Error::BadPrime {
            p,
            reason: "not a prime below 2^63",
        });
    }
    Ok(PrimeField::new_unchecked(p))
}
