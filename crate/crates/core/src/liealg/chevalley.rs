use std::sync::Arc;

use num_bigint::BigInt;

use super::algebra::LieAlgebra;
use crate::kostant::RootSystem;
use crate::{Error, Rational, Result, SparseVec};

/// A Chevalley-basis Lie algebra together with the root data that indexes it.
///
/// Basis order: `h_1..h_r`, then `e_β` and then `f_β` for the positive roots `β`
/// in the order of [`RootSystem::positive_roots`].
#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    algebra: Arc<LieAlgebra>,
}

impl ChevalleyAlgebra {
    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn e_index(&self, root: usize) -> usize {
        self.roots.rank() + root
    }

    pub fn f_index(&self, root: usize) -> usize {
        self.roots.rank() + self.roots.positive_roots().len() + root
    }

    /// Root coordinates of each basis vector (zero for the Cartan part).
    pub fn weight_of(&self, basis: usize) -> Vec<i64> {
        let r = self.roots.rank();
        let npos = self.roots.positive_roots().len();
        if basis < r {
            vec![0; r]
        } else if basis < r + npos {
            self.roots.positive_roots()[basis - r].clone()
        } else {
            self.roots.positive_roots()[basis - r - npos]
                .iter()
                .map(|c| -c)
                .collect()
        }
    }
}

/// Chevalley basis of the simple Lie algebra of a simply-laced root system.
///
/// Root vectors `E_γ` for all roots satisfy `[E_α, E_β] = ε(α, β) E_{α+β}` and
/// `[E_α, E_{-α}] = -h_α`, where `ε` is the bimultiplicative sign with
/// `ε(α_i, α_j) = -1` for `i = j` or `i < j` adjacent. With `e_β = E_β` and
/// `f_β = -E_{-β}` every structure constant is an integer. Signs are then
/// normalized so that `[e_α, e_{ξ-α}] = +e_ξ` for the extraspecial pair of every
/// non-simple positive root `ξ`, i.e. `α` the first simple root (in index order)
/// with `ξ - α` a root.
pub fn chevalley(roots: &RootSystem) -> Result<ChevalleyAlgebra> {
    if !roots.is_simply_laced() {
        return Err(Error::UnsupportedType(format!(
            "{}: Chevalley bases are built for simply-laced types only",
            roots
        )));
    }
    let r = roots.rank();
    let pos = roots.positive_roots();
    let npos = pos.len();
    let dim = r + 2 * npos;
    let cartan = roots.cartan();

    let eps = |a: &[i64], b: &[i64]| -> i64 {
        let mut parity = 0i64;
        for i in 0..r {
            for j in i..r {
                if i == j || cartan[i][j] == -1 {
                    parity += a[i] * b[j];
                }
            }
        }
        if parity.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    };

    // Each non-Cartan basis vector as (sign, γ) with x = sign · E_γ.
    let as_root_vector = |x: usize| -> (i64, Vec<i64>) {
        if x < r + npos {
            (1, pos[x - r].clone())
        } else {
            (-1, pos[x - r - npos].iter().map(|c| -c).collect())
        }
    };
    // Basis element and sign for E_γ.
    let from_root_vector = |gamma: &[i64]| -> Option<(usize, i64)> {
        if let Some(k) = roots.root_index(gamma) {
            return Some((r + k, 1));
        }
        let neg: Vec<i64> = gamma.iter().map(|c| -c).collect();
        roots.root_index(&neg).map(|k| (r + npos + k, -1))
    };
    let int = |v: i64| Rational::from_integer(BigInt::from(v));

    let raw = |x: usize, y: usize| -> Vec<(usize, i64)> {
        match (x < r, y < r) {
            (true, true) => Vec::new(),
            (true, false) => {
                let (_, gamma) = as_root_vector(y);
                let c = roots.pairing(&gamma, x);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(y, c)]
                }
            }
            (false, true) => {
                let (_, gamma) = as_root_vector(x);
                let c = roots.pairing(&gamma, y);
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(x, -c)]
                }
            }
            (false, false) => {
                let (s1, g1) = as_root_vector(x);
                let (s2, g2) = as_root_vector(y);
                let sum: Vec<i64> = g1.iter().zip(&g2).map(|(a, b)| a + b).collect();
                if sum.iter().all(|&c| c == 0) {
                    // -s1 s2 h_{γ1}, with h_γ = Σ c_i h_i in the simply-laced case.
                    g1.iter()
                        .enumerate()
                        .filter(|(_, c)| **c != 0)
                        .map(|(i, c)| (i, -s1 * s2 * c))
                        .collect()
                } else if let Some((k, sk)) = from_root_vector(&sum) {
                    vec![(k, s1 * s2 * eps(&g1, &g2) * sk)]
                } else {
                    Vec::new()
                }
            }
        }
    };

    // Extraspecial normalization, one positive root at a time in height order.
    let mut sigma = vec![1i64; dim];
    for (xi_idx, xi) in pos.iter().enumerate() {
        if RootSystem::height(xi) == 1 {
            continue;
        }
        let (m, rest) = (0..r)
            .find_map(|m| {
                let mut rest = xi.clone();
                rest[m] -= 1;
                roots.root_index(&rest).map(|k| (m, k))
            })
            .expect("non-simple positive root has a simple predecessor");
        // Simple roots come first among the positive roots, in index order.
        let bracket = raw(r + m, r + rest);
        let &[(k, n)] = &bracket[..] else {
            unreachable!("bracket of root vectors summing to a root is a single term");
        };
        debug_assert_eq!(k, r + xi_idx);
        let s = sigma[r + m] * sigma[r + rest] * n.signum();
        sigma[r + xi_idx] = s;
        sigma[r + npos + xi_idx] = s;
    }

    let labels = (0..dim)
        .map(|x| {
            if x < r {
                format!("h{}", x + 1)
            } else {
                let (s, g) = as_root_vector(x);
                let name = if s > 0 { 'e' } else { 'f' };
                let digits: String = g.iter().map(|c| c.abs().to_string()).collect();
                format!("{name}{digits}")
            }
        })
        .collect();
    let algebra = LieAlgebra::from_brackets(labels, |x, y| {
        let mut v: SparseVec<Rational> = raw(x, y)
            .into_iter()
            .map(|(k, c)| (k, int(sigma[x] * sigma[y] * sigma[k] * c)))
            .collect();
        v.sort_by_key(|(k, _)| *k);
        v
    })?;
    Ok(ChevalleyAlgebra {
        roots: roots.clone(),
        algebra: Arc::new(algebra),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::build_root_system;
    use num_traits::One;

    /// Structure constant `N` with `[e_α, e_β] = N e_{α+β}` for positive roots.
    fn positive_constant(c: &ChevalleyAlgebra, a: usize, b: usize) -> Option<Rational> {
        let sum: Vec<i64> = c.roots.positive_roots()[a]
            .iter()
            .zip(&c.roots.positive_roots()[b])
            .map(|(x, y)| x + y)
            .collect();
        let k = c.roots.root_index(&sum)?;
        c.algebra
            .bracket_basis(c.e_index(a), c.e_index(b))
            .iter()
            .find(|(i, _)| *i == c.e_index(k))
            .map(|(_, v)| v.clone())
    }

    #[test]
    fn dimensions_and_jacobi() {
        for (t, n, dim) in [('A', 1, 3), ('A', 2, 8), ('A', 3, 15), ('D', 4, 28), ('E', 6, 78)] {
            let c = chevalley(&build_root_system(t, n).unwrap()).unwrap();
            assert_eq!(c.algebra().dim(), dim);
            assert!(c.algebra().check_jacobi(), "{t}{n}");
        }
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let roots = build_root_system('E', 6).unwrap();
        let c = chevalley(&roots).unwrap();
        for (xi, coords) in roots.positive_roots().iter().enumerate() {
            if RootSystem::height(coords) == 1 {
                continue;
            }
            let m = (0..6)
                .find(|&m| {
                    let mut rest = coords.clone();
                    rest[m] -= 1;
                    roots.root_index(&rest).is_some()
                })
                .unwrap();
            let mut rest = coords.clone();
            rest[m] -= 1;
            let n = positive_constant(&c, m, roots.root_index(&rest).unwrap());
            assert_eq!(n, Some(Rational::one()), "root {xi}");
        }
    }

    #[test]
    fn chevalley_relations() {
        let roots = build_root_system('A', 3).unwrap();
        let c = chevalley(&roots).unwrap();
        let alg = c.algebra();
        for (k, beta) in roots.positive_roots().iter().enumerate() {
            // [e_β, f_β] = h_β
            let expected: SparseVec<Rational> = beta
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| (i, Rational::from_integer(BigInt::from(*x))))
                .collect();
            assert_eq!(alg.bracket_basis(c.e_index(k), c.f_index(k)), &expected);
        }
    }

    #[test]
    fn non_simply_laced_is_rejected() {
        let b3 = build_root_system('B', 3).unwrap();
        assert!(matches!(chevalley(&b3), Err(Error::UnsupportedType(_))));
    }
}
