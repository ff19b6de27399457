//! Lie cochain complex of one-graded algebras against Kostant's theorem and
//! against direct evaluation.

#![allow(clippy::needless_range_loop)]

mod common;

use common::{q, to_dense, Dense};
use holonomy::curvature::{
    dlie_squared, lie_cochain_differential, lie_cohomology_component, lie_cohomology_dim, verify_homogeneity,
    verify_prop1, RankMode,
};
use holonomy::kostant::{build_root_system, kostant_h, minimal_coset_reps, LocatedIn, RootSystem};
use holonomy::liealg::{chevalley, grade_by_node, GradedLieAlgebra};
use holonomy::{Error, Rational};
use num_traits::Zero;

fn graded(letter: char, rank: usize, node: usize) -> GradedLieAlgebra {
    let c = chevalley(&build_root_system(letter, rank).unwrap()).unwrap();
    grade_by_node(&c, node).unwrap()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in 0..n {
        for mut s in subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out
}

/// `∂_Lie` evaluated row by row: `(∂ψ)(v_J) = Σ_i (-1)^i [v_{J_i}, ψ(v_{J∖J_i})]`.
fn direct_dlie(g: &GradedLieAlgebra, k: usize) -> Dense {
    let v = g.component(-1);
    let dim = g.algebra().dim();
    let mut domain = subsets(v.len(), k);
    domain.sort();
    let mut codomain = subsets(v.len(), k + 1);
    codomain.sort();
    let mut m = vec![vec![Rational::zero(); domain.len() * dim]; codomain.len() * dim];
    for (r, tuple) in codomain.iter().enumerate() {
        for i in 0..tuple.len() {
            let mut rest = tuple.clone();
            let vi = rest.remove(i);
            let c = domain.binary_search(&rest).unwrap();
            let sign = q(if i % 2 == 0 { 1 } else { -1 });
            for x in 0..dim {
                for (b, coef) in g.algebra().bracket_basis(v[vi], x) {
                    m[r * dim + b][c * dim + x] += &sign * coef;
                }
            }
        }
    }
    m
}

#[test]
fn differential_matches_direct_evaluation() {
    for (letter, rank, node) in [('A', 2, 1), ('A', 3, 2), ('D', 4, 1)] {
        let g = graded(letter, rank, node);
        for k in 0..3 {
            assert_eq!(
                to_dense(&lie_cochain_differential(&g, k)),
                direct_dlie(&g, k),
                "{letter}{rank} k={k}"
            );
        }
    }
}

#[test]
fn differential_squares_to_zero() {
    for (letter, rank, node) in [('A', 3, 1), ('D', 5, 1), ('E', 6, 1)] {
        let g = graded(letter, rank, node);
        for k in 0..2 {
            assert!(dlie_squared(&g, k).is_zero(), "{letter}{rank} k={k}");
        }
    }
}

#[test]
fn homogeneity_holds_for_one_gradings() {
    for (letter, rank, node) in [('A', 2, 1), ('A', 4, 2), ('D', 4, 4), ('E', 6, 1), ('E', 6, 6)] {
        assert!(verify_homogeneity(&graded(letter, rank, node)));
    }
}

#[test]
fn dlie_is_minus_bianchi() {
    for (letter, rank, node) in [('A', 3, 1), ('A', 4, 1), ('D', 4, 1), ('D', 5, 5), ('E', 6, 1)] {
        assert_eq!(
            verify_prop1(&graded(letter, rank, node)).unwrap(),
            q(-1),
            "{letter}{rank}"
        );
    }
    // ∧³ of a plane vanishes, so there is nothing to compare.
    assert!(matches!(
        verify_prop1(&graded('A', 2, 1)),
        Err(Error::NotProportional(_))
    ));
}

fn kostant_by_degree(r: &RootSystem, node: usize, k: usize) -> [u64; 3] {
    let mut out = [0; 3];
    for c in kostant_h(r, node, k).unwrap() {
        out[(c.located_in.value_degree() + 1) as usize] += c.dimension;
    }
    out
}

#[test]
fn direct_cohomology_agrees_with_kostant() {
    let cases = [
        ('A', 2, 1, 3),
        ('A', 3, 1, 3),
        ('A', 3, 2, 3),
        ('A', 4, 2, 2),
        ('D', 4, 1, 2),
        ('D', 5, 1, 2),
    ];
    for (letter, rank, node, max_k) in cases {
        let r = build_root_system(letter, rank).unwrap();
        let g = graded(letter, rank, node);
        for k in 0..=max_k {
            let direct = lie_cohomology_dim(&g, k, &RankMode::Exact).unwrap();
            let predicted = kostant_by_degree(&r, node, k);
            for j in -1i8..=1 {
                assert_eq!(
                    direct.by_value_degree[&j] as u64,
                    predicted[(j + 1) as usize],
                    "{letter}{rank}/{node} k={k} j={j}"
                );
            }
        }
    }
}

#[test]
fn e6_second_cohomology_has_no_degree_zero_part() {
    let r = build_root_system('E', 6).unwrap();
    let components = kostant_h(&r, 1, 2).unwrap();
    assert_eq!(components.len(), 1);
    assert_eq!(components[0].located_in, LocatedIn::V);
    assert_eq!(components[0].dimension, 1200);
    let g = graded('E', 6, 1);
    let modular = RankMode::Modular(vec![1_000_000_007, 998_244_353, 2_147_483_647]);
    assert_eq!(lie_cohomology_component(&g, 2, 0, &modular).unwrap(), 0);
    assert_eq!(lie_cohomology_component(&g, 2, 0, &RankMode::Exact).unwrap(), 0);
}

#[test]
fn modular_mode_is_validated() {
    let g = graded('A', 2, 1);
    let too_few = RankMode::Modular(vec![101, 103, 101]);
    assert!(matches!(
        lie_cohomology_dim(&g, 1, &too_few),
        Err(Error::InvalidInput(_))
    ));
    let composite = RankMode::Modular(vec![101, 103, 105]);
    assert!(matches!(
        lie_cohomology_dim(&g, 1, &composite),
        Err(Error::BadPrime { p: 105, .. })
    ));
    let ok = RankMode::Modular(vec![101, 103, 107]);
    assert_eq!(
        lie_cohomology_dim(&g, 1, &ok).unwrap(),
        lie_cohomology_dim(&g, 1, &RankMode::Exact).unwrap()
    );
}

/// Roots of `𝔤₁`, i.e. positive roots with coefficient one at the node.
fn upper_roots(r: &RootSystem, node: usize) -> Vec<Vec<i64>> {
    r.positive_roots()
        .iter()
        .filter(|b| b[node - 1] == 1)
        .cloned()
        .collect()
}

/// Count subsets of `𝔤₁`'s roots that are closed downward (β ≤ γ when γ - β is a
/// non-negative combination of simple roots), by size.
fn order_ideals_by_size(r: &RootSystem, node: usize) -> Vec<usize> {
    let roots = upper_roots(r, node);
    let n = roots.len();
    let below = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut counts = vec![0; n + 1];
    for mask in 0u32..(1 << n) {
        let closed = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .all(|i| (0..n).all(|j| !below(&roots[j], &roots[i]) || mask >> j & 1 == 1));
        if closed {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

#[test]
fn coset_representatives_are_counted_by_order_ideals() {
    for (letter, rank, node) in [('A', 4, 2), ('D', 5, 1), ('D', 5, 5), ('E', 6, 1), ('E', 7, 7)] {
        let r = build_root_system(letter, rank).unwrap();
        let expected = order_ideals_by_size(&r, node);
        let reps = minimal_coset_reps(&r, node, usize::MAX).unwrap();
        let mut by_len = vec![0; expected.len()];
        for w in &reps {
            by_len[w.length()] += 1;
        }
        assert_eq!(by_len, expected, "{letter}{rank}/{node}");
    }
}
