use std::fmt;

use super::roots::RootSystem;
use super::weyl::{check_node, levi_weyl_dimension, minimal_coset_reps, Weight, WeylElement};
use crate::{Error, Result};

/// Which summand of `∧^k V* ⊗ 𝔢` a cohomology component lives in, by the
/// degree of its values: `V = 𝔤₋₁`, `𝔤₀`, or `V* = 𝔤₁`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocatedIn {
    V,
    G0,
    VDual,
}

impl LocatedIn {
    pub fn from_value_degree(j: i64) -> Option<Self> {
        match j {
            -1 => Some(LocatedIn::V),
            0 => Some(LocatedIn::G0),
            1 => Some(LocatedIn::VDual),
            _ => None,
        }
    }

    pub fn value_degree(self) -> i64 {
        match self {
            LocatedIn::V => -1,
            LocatedIn::G0 => 0,
            LocatedIn::VDual => 1,
        }
    }

    /// Label such as `∧^2V*⊗V`.
    pub fn label(self, k: usize) -> String {
        format!("∧^{k}V*⊗{self}")
    }
}

impl fmt::Display for LocatedIn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LocatedIn::V => "V",
            LocatedIn::G0 => "g0",
            LocatedIn::VDual => "V*",
        })
    }
}

/// One irreducible summand of `H^k(𝔤₋₁, 𝔢)` as predicted by Kostant's theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyComponent {
    pub w: WeylElement,
    /// `w·λ` in fundamental coordinates; the component has lowest weight `-(w·λ)`.
    pub weight: Weight,
    /// Eigenvalue of the grading element on the component.
    pub homogeneity: i64,
    pub located_in: LocatedIn,
    pub dimension: u64,
}

/// The one-grading coefficient check shared with the Lie algebra side.
pub fn one_graded_node(r: &RootSystem, node: usize) -> Result<usize> {
    let n = check_node(r, node)?;
    let c = r.highest_root()[n];
    if c != 1 {
        return Err(Error::NotOneGraded { node, coefficient: c });
    }
    Ok(n)
}

/// Components of `H^k(𝔤₋₁, 𝔢)` with adjoint coefficients for the one-grading at
/// `node` (1-based).
///
/// For `w` in `W^p` of length `k` the component has lowest weight `-(w·θ)`, with
/// `θ` the highest root. In root coordinates `w·θ = w(θ) - Σ_{β ∈ Φ_w} β`, and its
/// `α_node` coefficient is minus the grading-element eigenvalue. A cochain in
/// `∧^k V* ⊗ 𝔤_j` has eigenvalue `k + j`, which fixes `j`.
pub fn kostant_h(r: &RootSystem, node: usize, k: usize) -> Result<Vec<CohomologyComponent>> {
    let n = one_graded_node(r, node)?;
    let theta = r.highest_root().to_vec();
    minimal_coset_reps(r, node, k)?
        .into_iter()
        .filter(|w| w.length() == k)
        .map(|w| {
            let mut shifted = w.act_on_root(r, &theta);
            for beta in w.inversion_set(r) {
                for (s, b) in shifted.iter_mut().zip(&beta) {
                    *s -= b;
                }
            }
            let weight = Weight(r.to_fundamental(&shifted));
            let homogeneity = -shifted[n];
            let j = homogeneity - k as i64;
            let located_in = LocatedIn::from_value_degree(j)
                .ok_or_else(|| Error::InvalidInput(format!("value degree {j} outside a one-grading")))?;
            let dimension = levi_weyl_dimension(r, node, &weight)?;
            Ok(CohomologyComponent {
                w,
                weight,
                homogeneity,
                located_in,
                dimension,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::{affine_action, build_root_system};

    #[test]
    fn e6_degree_zero_is_the_lowest_root_line() {
        let e6 = build_root_system('E', 6).unwrap();
        let h0 = kostant_h(&e6, 1, 0).unwrap();
        assert_eq!(h0.len(), 1);
        assert_eq!(h0[0].w, WeylElement::identity());
        assert_eq!(h0[0].weight, Weight(e6.to_fundamental(e6.highest_root())));
        assert_eq!(h0[0].located_in, LocatedIn::V);
        assert_eq!(h0[0].dimension, 16);
    }

    #[test]
    fn e6_degree_two_lies_in_values_v() {
        let e6 = build_root_system('E', 6).unwrap();
        let h2 = kostant_h(&e6, 1, 2).unwrap();
        assert_eq!(h2.len(), 1);
        assert_eq!(h2[0].located_in, LocatedIn::V);
        assert_eq!(h2[0].homogeneity, 1);
        assert_eq!(h2[0].w.bourbaki_word(), vec![1, 3]);
    }

    #[test]
    fn shifted_weight_agrees_with_affine_action() {
        let e6 = build_root_system('E', 6).unwrap();
        let theta = Weight(e6.to_fundamental(e6.highest_root()));
        for k in 0..5 {
            for c in kostant_h(&e6, 1, k).unwrap() {
                assert_eq!(c.weight, affine_action(&e6, &c.w, &theta));
            }
        }
    }

    #[test]
    fn rejects_nodes_that_are_not_one_graded() {
        let e6 = build_root_system('E', 6).unwrap();
        assert_eq!(
            kostant_h(&e6, 2, 2),
            Err(Error::NotOneGraded {
                node: 2,
                coefficient: 2
            })
        );
        assert!(kostant_h(&e6, 7, 2).is_err());
    }
}
