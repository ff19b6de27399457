//! Plain-text matrix exchange format.
//!
//! ```text
//! nrows ncols nnz
//! i j num/den
//! ```
//!
//! Indices are 1-based, entries are sorted row-major then by column, lines end in
//! LF, and every value is written as `num/den` in lowest terms (`3/1`, `-1/2`).

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use super::SparseMatrix;
use crate::{Error, Rational, Result};

impl SparseMatrix<Rational> {
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + self.nnz() * 16);
        writeln!(out, "{} {} {}", self.nrows(), self.ncols(), self.nnz()).unwrap();
        for (i, j, v) in self.entries() {
            writeln!(out, "{} {} {}/{}", i + 1, j + 1, v.numer(), v.denom()).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
        let (_, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(1, "header must be three integers"))?;
        let [nrows, ncols, nnz] = dims[..] else {
            return Err(err(1, "header must be three integers"));
        };

        let mut triplets = Vec::with_capacity(nnz);
        let mut last: Option<(usize, usize)> = None;
        for (k, line) in lines {
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(j), Some(v), None) = (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(err(k, "expected `i j num/den`"));
            };
            let i: usize = i.parse().map_err(|_| err(k, "bad row index"))?;
            let j: usize = j.parse().map_err(|_| err(k, "bad column index"))?;
            if i == 0 || j == 0 || i > nrows || j > ncols {
                return Err(err(k, "index out of range"));
            }
            let (num, den) = v.split_once('/').ok_or_else(|| err(k, "value must be num/den"))?;
            let num: BigInt = num.parse().map_err(|_| err(k, "bad numerator"))?;
            let den: BigInt = den.parse().map_err(|_| err(k, "bad denominator"))?;
            if den <= BigInt::zero() {
                return Err(err(k, "denominator must be positive"));
            }
            let value = Rational::new(num, den);
            if value.is_zero() {
                return Err(err(k, "explicit zero entry"));
            }
            if last.is_some_and(|prev| prev >= (i, j)) {
                return Err(err(k, "entries must be sorted row-major and distinct"));
            }
            last = Some((i, j));
            triplets.push((i - 1, j - 1, value));
        }
        if triplets.len() != nnz {
            return Err(err(1, "entry count does not match header"));
        }
        Ok(SparseMatrix::from_triplets(nrows, ncols, triplets))
    }
}
