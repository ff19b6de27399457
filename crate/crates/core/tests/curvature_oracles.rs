//! Curvature maps checked against direct tensor evaluation and dense elimination.

#![allow(clippy::needless_range_loop)]

mod common;

use std::sync::Arc;

use common::{dense_kernel, dense_rank, dense_rank_mod, pairs, q, to_dense, triples, Dense};
use holonomy::curvature::{
    antisymmetrization_matrix, bianchi_matrix, curvature_module, is_ricci_type, prolongation, rank_on,
    ricci_trace_matrix, ricci_trace_matrix_transposed, spencer_h12,
};
use holonomy::kostant::build_root_system;
use holonomy::liealg::{
    append_center, chevalley, component_rep, dual_rep, gl, grade_by_node, half_spinor_rep, sl, so_split,
    wedge_rep, Parity, Representation,
};
use holonomy::{QMatrix, Rational};
use num_traits::Zero;

fn action(rho: &Representation) -> Vec<Dense> {
    rho.action().iter().map(to_dense).collect()
}

/// `ψ(e_a, e_b)` for `ψ = e^i ∧ e^j ⊗ X`, as a coefficient of `X`.
fn wedge_coef(pair: [usize; 2], a: usize, b: usize) -> i64 {
    match (a == pair[0] && b == pair[1], a == pair[1] && b == pair[0]) {
        (true, _) => 1,
        (_, true) => -1,
        _ => 0,
    }
}

fn direct_bianchi(rho: &Representation) -> Dense {
    let (n, g) = (rho.dim(), rho.algebra().dim());
    let act = action(rho);
    let cols = pairs(n);
    let rows = triples(n);
    let mut m = vec![vec![Rational::zero(); cols.len() * g]; rows.len() * n];
    for (p, &pair) in cols.iter().enumerate() {
        for (alpha, x) in act.iter().enumerate() {
            for (t, &[a, b, c]) in rows.iter().enumerate() {
                for u in 0..n {
                    let v = q(wedge_coef(pair, a, b)) * &x[u][c]
                        + q(wedge_coef(pair, b, c)) * &x[u][a]
                        + q(wedge_coef(pair, c, a)) * &x[u][b];
                    m[t * n + u][p * g + alpha] = v;
                }
            }
        }
    }
    m
}

fn direct_ricci(rho: &Representation) -> Dense {
    let (n, g) = (rho.dim(), rho.algebra().dim());
    let act = action(rho);
    let cols = pairs(n);
    let mut m = vec![vec![Rational::zero(); cols.len() * g]; n * n];
    for (p, &pair) in cols.iter().enumerate() {
        for (alpha, x) in act.iter().enumerate() {
            for a in 0..n {
                for b in 0..n {
                    let mut tr = Rational::zero();
                    for z in 0..n {
                        tr += q(wedge_coef(pair, z, a)) * &x[z][b];
                    }
                    m[a * n + b][p * g + alpha] = tr;
                }
            }
        }
    }
    m
}

fn direct_antisymmetrization(rho: &Representation) -> Dense {
    let (n, g) = (rho.dim(), rho.algebra().dim());
    let act = action(rho);
    let rows = pairs(n);
    let mut m = vec![vec![Rational::zero(); n * g]; rows.len() * n];
    for (r, &[x, y]) in rows.iter().enumerate() {
        for u in 0..n {
            for (alpha, a) in act.iter().enumerate() {
                m[r * n + u][x * g + alpha] += &a[u][y];
                m[r * n + u][y * g + alpha] -= &a[u][x];
            }
        }
    }
    m
}

struct Oracle {
    k: usize,
    prolongation: usize,
    spencer_h12: usize,
    ricci_type: bool,
}

fn oracle(rho: &Representation) -> Oracle {
    let (n, g) = (rho.dim(), rho.algebra().dim());
    let ncols = pairs(n).len() * g;
    let kernel = dense_kernel(&direct_bianchi(rho), ncols);
    let ricci = direct_ricci(rho);
    let images: Dense = kernel
        .iter()
        .map(|v| {
            ricci
                .iter()
                .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    let trace_rank = dense_rank(&images, n * n);
    let g1 = dense_kernel(&direct_antisymmetrization(rho), n * g);
    // ∂(e^k ⊗ A) for A in 𝔤⁽¹⁾, written on the basis e^x ∧ e^y ⊗ X_α.
    let spencer: Dense = (0..n)
        .flat_map(|k| g1.iter().map(move |a| (k, a)))
        .map(|(k, a)| {
            let mut col = vec![Rational::zero(); ncols];
            for (p, &[x, y]) in pairs(n).iter().enumerate() {
                for alpha in 0..g {
                    let mut v = Rational::zero();
                    if x == k {
                        v += &a[y * g + alpha];
                    }
                    if y == k {
                        v -= &a[x * g + alpha];
                    }
                    col[p * g + alpha] = v;
                }
            }
            col
        })
        .collect();
    Oracle {
        k: kernel.len(),
        prolongation: g1.len(),
        spencer_h12: kernel.len() - dense_rank(&spencer, ncols),
        ricci_type: trace_rank == kernel.len(),
    }
}

fn check_against_oracle(rho: &Representation) -> Oracle {
    assert_eq!(to_dense(&bianchi_matrix(rho)), direct_bianchi(rho));
    assert_eq!(to_dense(&ricci_trace_matrix(rho)), direct_ricci(rho));
    assert_eq!(
        to_dense(&antisymmetrization_matrix(rho)),
        direct_antisymmetrization(rho)
    );
    let o = oracle(rho);
    let report = is_ricci_type(rho);
    assert_eq!(report.dim_K, o.k);
    assert_eq!(report.dim_prolongation, o.prolongation);
    assert_eq!(report.dim_spencer_h12, o.spencer_h12);
    assert_eq!(report.ricci_type, o.ricci_type);
    o
}

#[test]
fn orthogonal_algebras_match_the_riemann_tensor_count() {
    for (n, ricci) in [(3usize, true), (4, false), (5, false)] {
        let o = check_against_oracle(&so_split(n).unwrap());
        assert_eq!(o.k, n * n * (n * n - 1) / 12, "so({n})");
        assert_eq!(o.prolongation, 0);
        assert_eq!(o.spencer_h12, o.k);
        assert_eq!(o.ricci_type, ricci);
    }
}

#[test]
fn spencer_cohomology_of_so4_is_all_of_k() {
    assert_eq!(spencer_h12(&so_split(4).unwrap()), 20);
}

#[test]
fn general_and_special_linear_prolongations() {
    let o = check_against_oracle(&gl(2).unwrap());
    assert_eq!((o.k, o.prolongation), (4, 6));
    assert!(bianchi_matrix(&gl(2).unwrap()).nrows() == 0);
    // gl(n)⁽¹⁾ = S²V*⊗V and sl(n)⁽¹⁾ is its traceless part.
    assert_eq!(check_against_oracle(&gl(3).unwrap()).prolongation, 18);
    assert_eq!(check_against_oracle(&sl(3).unwrap()).prolongation, 15);
}

#[test]
fn small_spinor_representations() {
    // so(6) ≅ sl(4) on a half-spinor, so(8) on a half-spinor ≅ so(8) on C⁸.
    let s6 = half_spinor_rep(6, Parity::Even).unwrap();
    assert_eq!(check_against_oracle(&s6).prolongation, 36);
    assert_eq!(check_against_oracle(&append_center(&s6)).prolongation, 40);
    let s8 = check_against_oracle(&half_spinor_rep(8, Parity::Odd).unwrap());
    assert_eq!(s8.k, so_split_k(8));
    assert_eq!(s8.prolongation, 0);
}

fn so_split_k(n: usize) -> usize {
    n * n * (n * n - 1) / 12
}

#[test]
fn maps_are_equivariant() {
    for rho in [
        so_split(4).unwrap(),
        half_spinor_rep(6, Parity::Odd).unwrap(),
        gl(3).unwrap(),
    ] {
        let dual = dual_rep(&rho);
        let adjoint = Representation::adjoint(Arc::clone(rho.algebra()));
        let domain = wedge_rep(&dual, 2).unwrap().tensor(&adjoint).unwrap();
        let cubic = wedge_rep(&dual, 3).unwrap().tensor(&rho).unwrap();
        let trace_target = dual.tensor(&dual).unwrap();
        assert!(domain.intertwines(&cubic, &bianchi_matrix(&rho)));
        assert!(domain.intertwines(&trace_target, &ricci_trace_matrix(&rho)));
        assert!(domain.intertwines(&trace_target, &ricci_trace_matrix_transposed(&rho)));
    }
}

#[test]
fn transposed_trace_has_the_same_rank_on_k() {
    for rho in [
        so_split(4).unwrap(),
        so_split(5).unwrap(),
        half_spinor_rep(8, Parity::Even).unwrap(),
    ] {
        let k = curvature_module(&rho);
        assert_eq!(
            rank_on(&ricci_trace_matrix(&rho), &k),
            rank_on(&ricci_trace_matrix_transposed(&rho), &k)
        );
    }
}

fn mod_p(x: &Rational, p: u64) -> u64 {
    let reduce = |n: &num_bigint::BigInt| {
        let r = n % num_bigint::BigInt::from(p);
        let r: i64 = r.try_into().unwrap();
        r.rem_euclid(p as i64) as u64
    };
    let (num, den) = (reduce(x.numer()), reduce(x.denom()));
    let mut inv = 1u64;
    let (mut b, mut e) = (den, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            inv = ((inv as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    ((num as u128 * inv as u128) % p as u128) as u64
}

/// The prolongation of ℂ⊕𝔰𝔭𝔦𝔫(10) on a half-spinor is sixteen dimensional.
#[test]
fn spin10_with_center_has_a_sixteen_dimensional_prolongation() {
    let p = 1_000_000_007;
    for parity in [Parity::Even, Parity::Odd] {
        let rho = append_center(&half_spinor_rep(10, parity).unwrap());
        let dense = direct_antisymmetrization(&rho);
        let ncols = rho.dim() * rho.algebra().dim();
        let reduced: Vec<Vec<u64>> = dense
            .iter()
            .map(|r| r.iter().map(|x| mod_p(x, p)).collect())
            .collect();
        // The rank mod p is at most the rational rank, so this bounds the kernel from above.
        assert_eq!(ncols - dense_rank_mod(reduced, ncols, p), 16);
        assert_eq!(prolongation(&rho).dim(), 16);
    }
}

/// For ξ ∈ 𝔤₁ of the grading of 𝔢₆, `x ↦ [ξ, x]` is a symmetric element of
/// `V* ⊗ 𝔤₀`, which bounds the prolongation from below.
#[test]
fn e6_grading_supplies_the_prolongation() {
    let c = chevalley(&build_root_system('E', 6).unwrap()).unwrap();
    let g = grade_by_node(&c, 1).unwrap();
    let rho = component_rep(&g, -1).unwrap();
    let g0 = g.component(0).len();
    let v = g.component(-1);
    let vectors: Vec<Vec<(usize, Rational)>> = g
        .component(1)
        .iter()
        .map(|&xi| {
            let mut out = Vec::new();
            for (i, &x) in v.iter().enumerate() {
                for (b, coef) in g.algebra().bracket_basis(xi, x) {
                    out.push((i * g0 + g.position(*b), coef.clone()));
                }
            }
            out.sort_by_key(|e| e.0);
            out
        })
        .collect();
    let m = antisymmetrization_matrix(&rho);
    for vec in &vectors {
        assert!(m.mul_vec(vec).is_empty());
    }
    let span = QMatrix::from_rows(v.len() * g0, vectors);
    assert_eq!(span.rank(), 16);
    assert_eq!(prolongation(&rho).dim(), 16);
}
