use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::classical::{so_split, split_partner};
use super::rep::Representation;
use crate::{Error, QMatrix, Rational, Result};

/// Which half of the Fock space carries a half-spinor representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn matches(self, mask: usize) -> bool {
        mask.count_ones().is_multiple_of(2) == (self == Parity::Even)
    }
}

/// Creation operator `a_i^†` on the exterior algebra over `m` generators, basis
/// indexed by bitmask, with the Jordan–Wigner sign.
fn creation(m: usize, i: usize) -> QMatrix {
    let size = 1usize << m;
    QMatrix::from_triplets(
        size,
        size,
        (0..size).filter(|s| s & (1 << i) == 0).map(|s| {
            let sign = if (s & ((1 << i) - 1)).count_ones().is_multiple_of(2) {
                1
            } else {
                -1
            };
            (s | (1 << i), s, Rational::from_integer(BigInt::from(sign)))
        }),
    )
}

/// Clifford generators `γ(e_i) = 2 a_i^†` and `γ(e_{m+i}) = a_i`, which satisfy
/// `γ(u)γ(w) + γ(w)γ(u) = 2 B(u, w)` for the split form.
fn clifford_generators(m: usize) -> Vec<QMatrix> {
    let two = Rational::from_integer(BigInt::from(2));
    let up: Vec<QMatrix> = (0..m).map(|i| creation(m, i)).collect();
    let down: Vec<QMatrix> = up.iter().map(QMatrix::transpose).collect();
    up.iter().map(|a| a.scale(&two)).chain(down).collect()
}

/// A half-spinor representation of `so_split(n)`, `n = 2m`, of dimension `2^(m-1)`.
///
/// `X_ab` acts by `½ γ(e_σ(a)) γ(e_σ(b)) - ½ B(e_σ(a), e_σ(b))` on the Fock space,
/// restricted to basis masks of the requested parity in increasing order.
pub fn half_spinor_rep(n: usize, parity: Parity) -> Result<Representation> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "half-spinors need even n >= 2, got {n}"
        )));
    }
    let m = n / 2;
    let so = so_split(n)?;
    let gamma = clifford_generators(m);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let keep: Vec<usize> = (0..1usize << m).filter(|&s| parity.matches(s)).collect();
    let mut action = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let (u, w) = (split_partner(n, a), split_partner(n, b));
            let mut x = (&gamma[u] * &gamma[w]).scale(&half);
            if split_partner(n, u) == w {
                x = &x - &QMatrix::identity(1 << m).scale(&half);
            }
            action.push(x.submatrix(&keep, &keep));
        }
    }
    Representation::new(Arc::clone(so.algebra()), keep.len(), action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(half_spinor_rep(10, Parity::Even).unwrap().dim(), 16);
        assert_eq!(half_spinor_rep(10, Parity::Odd).unwrap().dim(), 16);
        assert_eq!(half_spinor_rep(6, Parity::Even).unwrap().dim(), 4);
        assert!(half_spinor_rep(7, Parity::Even).is_err());
    }

    #[test]
    fn clifford_relations() {
        let m = 3;
        let n = 2 * m;
        let g = clifford_generators(m);
        for u in 0..n {
            for w in 0..n {
                let anti = &(&g[u] * &g[w]) + &(&g[w] * &g[u]);
                let expected = if split_partner(n, u) == w {
                    QMatrix::identity(1 << m).scale(&Rational::from_integer(BigInt::from(2)))
                } else {
                    QMatrix::zeros(1 << m, 1 << m)
                };
                assert_eq!(anti, expected, "u={u} w={w}");
            }
        }
    }

    #[test]
    fn representations_and_parity_blocks() {
        for n in [2, 4, 6, 8] {
            for parity in [Parity::Even, Parity::Odd] {
                let rho = half_spinor_rep(n, parity).unwrap();
                assert!(rho.check_representation(), "n={n} {parity:?}");
            }
        }
        // The full Fock action preserves parity, so no entry couples even and odd masks.
        let m = 4;
        let g = clifford_generators(m);
        for u in 0..2 * m {
            for w in 0..2 * m {
                let x = &g[u] * &g[w];
                assert!(x
                    .entries()
                    .all(|(i, j, _)| (i.count_ones() + j.count_ones()) % 2 == 0));
            }
        }
    }
}
