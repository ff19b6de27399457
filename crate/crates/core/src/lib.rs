//! Exact computation of formal curvature modules and the graded Lie algebra
//! machinery used to certify that they are of Ricci type.

#![allow(clippy::needless_range_loop)]

mod combinatorics;
pub mod curvature;
mod error;
pub mod exactla;
pub mod kostant;
pub mod liealg;

pub use error::{Error, Result};
pub use exactla::{SparseMatrix, SparseVec, SubspaceBasis};

pub type Rational = num_rational::BigRational;
pub type QMatrix = SparseMatrix<Rational>;
pub type QSubspace = SubspaceBasis<Rational>;
