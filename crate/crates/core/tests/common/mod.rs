//! Dense reference implementations, deliberately naive and independent of the
//! sparse elimination in the library.

#![allow(dead_code)]

use holonomy::{QMatrix, Rational};
use num_traits::{One, Zero};

pub type Dense = Vec<Vec<Rational>>;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn to_dense(m: &QMatrix) -> Dense {
    let mut out = vec![vec![Rational::zero(); m.ncols()]; m.nrows()];
    for (i, j, v) in m.entries() {
        out[i][j] = v.clone();
    }
    out
}

/// Textbook Gauss-Jordan; returns the reduced rows and pivot columns.
pub fn rref(mut a: Dense, ncols: usize) -> (Dense, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..ncols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn dense_rank(a: &Dense, ncols: usize) -> usize {
    rref(a.clone(), ncols).1.len()
}

/// Kernel basis read off from the reduced form, one vector per free column.
pub fn dense_kernel(a: &Dense, ncols: usize) -> Vec<Vec<Rational>> {
    let (red, pivots) = rref(a.clone(), ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Rank over GF(p) of an integer-valued dense matrix given by rows.
pub fn dense_rank_mod(mut a: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = ((acc as u128 * b as u128) % p as u128) as u64;
            }
            b = ((b as u128 * b as u128) % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow(a[r][c], p - 2);
        let pivot_row: Vec<u64> = a[r]
            .iter()
            .map(|&x| ((x as u128 * inv as u128) % p as u128) as u64)
            .collect();
        for i in (r + 1)..a.len() {
            let f = a[i][c];
            if f != 0 {
                for k in c..ncols {
                    let sub = ((f as u128 * pivot_row[k] as u128) % p as u128) as u64;
                    a[i][k] = (a[i][k] + p - sub) % p;
                }
            }
        }
        a[r] = pivot_row;
        r += 1;
    }
    r
}

/// Increasing pairs and triples in lexicographic order.
pub fn pairs(n: usize) -> Vec<[usize; 2]> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| [i, j])).collect()
}

pub fn triples(n: usize) -> Vec<[usize; 3]> {
    (0..n)
        .flat_map(|i| ((i + 1)..n).flat_map(move |j| ((j + 1)..n).map(move |k| [i, j, k])))
        .collect()
}
