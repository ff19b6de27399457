use std::sync::Arc;

use num_traits::One;

use super::algebra::LieAlgebra;
use super::rep::Representation;
use crate::{Error, QMatrix, Rational, Result};

fn unit_matrix(n: usize, i: usize, j: usize) -> QMatrix {
    QMatrix::from_triplets(n, n, [(i, j, Rational::one())])
}

/// Matrices as a representation of the algebra they span.
fn defining_rep(labels: Vec<String>, mats: Vec<QMatrix>, n: usize) -> Result<Representation> {
    let algebra = LieAlgebra::from_matrices(labels, &mats)?;
    Representation::new(Arc::new(algebra), n, mats)
}

/// `𝔤𝔩(n)` on `ℚ^n`, basis `E_ij` in row-major order.
pub fn gl(n: usize) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidInput("gl(0)".into()));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{},{}", i + 1, j + 1));
            mats.push(unit_matrix(n, i, j));
        }
    }
    defining_rep(labels, mats, n)
}

/// `𝔰𝔩(n)` on `ℚ^n`: off-diagonal `E_ij` in row-major order, then `H_i = E_ii - E_{i+1,i+1}`.
pub fn sl(n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("sl({n}) needs n >= 2")));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(format!("E{},{}", i + 1, j + 1));
                mats.push(unit_matrix(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        labels.push(format!("H{}", i + 1));
        mats.push(&unit_matrix(n, i, i) - &unit_matrix(n, i + 1, i + 1));
    }
    defining_rep(labels, mats, n)
}

/// The involution pairing basis vectors in the split form: `B(e_i, e_σ(i)) = 1`.
pub(crate) fn split_partner(n: usize, i: usize) -> usize {
    let m = n / 2;
    if i < m {
        i + m
    } else if i < 2 * m {
        i - m
    } else {
        i
    }
}

/// `𝔰𝔬(n)` of the split form `B(e_i, e_{i+m}) = 1` (plus `B(e_{2m}, e_{2m}) = 1`
/// for odd `n`), with its defining representation.
///
/// Basis `X_ab = J(E_ab - E_ba)` for `a < b`, where `J` is the Gram matrix; it sends
/// `e_b` to `e_σ(a)` and `e_a` to `-e_σ(b)`.
pub fn so_split(n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("so({n}) needs n >= 2")));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            labels.push(format!("X{},{}", a + 1, b + 1));
            mats.push(QMatrix::from_triplets(
                n,
                n,
                [
                    (split_partner(n, a), b, Rational::one()),
                    (split_partner(n, b), a, -Rational::one()),
                ],
            ));
        }
    }
    defining_rep(labels, mats, n)
}
