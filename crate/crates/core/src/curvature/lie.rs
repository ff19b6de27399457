use std::collections::BTreeMap;

use serde::Serialize;

use super::bianchi::{bianchi_matrix, ricci_trace_matrix};
use super::cochain::{assemble, CochainSpace};
use crate::exactla::is_prime;
use crate::liealg::{component_rep, GradedLieAlgebra};
use crate::{Error, QMatrix, QSubspace, Rational, Result};

/// Which values a cochain space carries: the whole algebra or one graded piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Values {
    All,
    Degree(i8),
}

fn value_basis(g: &GradedLieAlgebra, values: Values) -> Vec<usize> {
    match values {
        Values::All => (0..g.algebra().dim()).collect(),
        Values::Degree(d) if (-1..=1).contains(&d) => g.component(d).to_vec(),
        Values::Degree(_) => Vec::new(),
    }
}

/// `∂_Lie` on `∧^k 𝔤₋₁* ⊗ (values)` into `∧^{k+1} 𝔤₋₁* ⊗ (targets)`. Terms whose
/// value leaves the target basis are dropped, which is exact whenever the
/// target contains the image (as it does for the graded blocks).
fn differential(g: &GradedLieAlgebra, k: usize, values: Values, targets: Values) -> QMatrix {
    let v = g.component(-1);
    let n = v.len();
    let cols_basis = value_basis(g, values);
    let rows_basis = value_basis(g, targets);
    let mut row_pos = vec![usize::MAX; g.algebra().dim()];
    for (p, &x) in rows_basis.iter().enumerate() {
        row_pos[x] = p;
    }
    let domain = CochainSpace::new(n, k, cols_basis.len());
    let codomain = CochainSpace::new(n, k + 1, rows_basis.len());
    let alg = g.algebra();
    assemble(codomain.dim(), domain.dim(), |c| {
        let (tuple, a) = domain.split(c);
        let x = cols_basis[a];
        let mut out = Vec::new();
        for j in 0..n {
            if tuple.contains(&j) {
                continue;
            }
            let pos = tuple.partition_point(|&t| t < j);
            let mut bigger = Vec::with_capacity(k + 1);
            bigger.extend_from_slice(&tuple[..pos]);
            bigger.push(j);
            bigger.extend_from_slice(&tuple[pos..]);
            let odd = pos % 2 == 1;
            for (b, coef) in alg.bracket_basis(v[j], x) {
                let p = row_pos[*b];
                if p != usize::MAX {
                    out.push((
                        codomain.index(&bigger, p),
                        if odd { -coef.clone() } else { coef.clone() },
                    ));
                }
            }
        }
        out
    })
}

/// `(∂_Lie ψ)(v_0, …, v_k) = Σ_i (-1)^i [v_i, ψ(v_0, …, v̂_i, …, v_k)]` on
/// `∧^k 𝔤₋₁* ⊗ 𝔢`, values in the algebra's basis order.
pub fn lie_cochain_differential(g: &GradedLieAlgebra, k: usize) -> QMatrix {
    differential(g, k, Values::All, Values::All)
}

/// The block of `∂_Lie` from `∧^k 𝔤₋₁* ⊗ 𝔤_j` to `∧^{k+1} 𝔤₋₁* ⊗ 𝔤_{j-1}`, values
/// in component order.
pub fn lie_cochain_block(g: &GradedLieAlgebra, k: usize, j: i8) -> QMatrix {
    differential(g, k, Values::Degree(j), Values::Degree(j - 1))
}

/// Checks on the degree-one differential that `𝔤₋₁*⊗𝔤₁ → ∧²𝔤₋₁*⊗𝔤₀`,
/// `𝔤₋₁*⊗𝔤₀ → ∧²𝔤₋₁*⊗𝔤₋₁`, and `𝔤₋₁*⊗𝔤₋₁ → 0`, entry by entry.
pub fn verify_homogeneity(g: &GradedLieAlgebra) -> bool {
    let d = lie_cochain_differential(g, 1);
    let dim = g.algebra().dim();
    let homogeneous = d
        .entries()
        .all(|(row, col, _)| g.degree(row % dim) == g.degree(col % dim) - 1);
    homogeneous
}

/// The constant `c` with `∂_Lie |_{∧²𝔤₋₁*⊗𝔤₀} = c · Bianchi(𝔤₀ on 𝔤₋₁)`.
pub fn verify_prop1(g: &GradedLieAlgebra) -> Result<Rational> {
    let lie = lie_cochain_block(g, 2, 0);
    let bianchi = bianchi_matrix(&component_rep(g, -1)?);
    if lie.shape() != bianchi.shape() {
        return Err(Error::NotProportional(format!(
            "shapes differ: {:?} and {:?}",
            lie.shape(),
            bianchi.shape()
        )));
    }
    if lie.is_zero() && bianchi.is_zero() {
        return Err(Error::NotProportional(
            "both maps vanish, so the constant is undetermined".into(),
        ));
    }
    lie.proportionality(&bianchi)
        .ok_or_else(|| Error::NotProportional("entries have different ratios".into()))
}

/// The image of `∂_Lie` on `𝔤₋₁*⊗𝔤₁` compared with `K(𝔤₀)` for `𝔤₀` acting on `𝔤₋₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageDecomposition {
    pub image_dim: usize,
    pub kernel_dim: usize,
    pub image_in_kernel: bool,
    pub equals_kernel: bool,
}

pub fn image_decomposition(g: &GradedLieAlgebra) -> Result<ImageDecomposition> {
    let d = lie_cochain_block(g, 1, 1);
    let image = QSubspace::row_space(&d.transpose());
    let bianchi = bianchi_matrix(&component_rep(g, -1)?);
    let kernel = bianchi.kernel_basis();
    let image_in_kernel = bianchi.apply_to(&image).iter().all(Vec::is_empty);
    Ok(ImageDecomposition {
        image_dim: image.dim(),
        kernel_dim: kernel.dim(),
        image_in_kernel,
        equals_kernel: image == kernel,
    })
}

/// `t_R ∘ ∂_Lie` on `𝔤₋₁*⊗𝔤₁`, an `n² × n²` matrix with `n = dim 𝔤₋₁`.
pub fn tr_circ_dlie(g: &GradedLieAlgebra) -> Result<QMatrix> {
    let trace = ricci_trace_matrix(&component_rep(g, -1)?);
    Ok(&trace * &lie_cochain_block(g, 1, 1))
}

/// How ranks are computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankMode {
    Exact,
    /// Rank modulo each prime; all must agree, and at least three distinct primes
    /// are required. The result is a probabilistic lower bound on the exact rank.
    Modular(Vec<u64>),
}

impl RankMode {
    pub fn label(&self) -> &'static str {
        match self {
            RankMode::Exact => "exact",
            RankMode::Modular(_) => "modular, probabilistic",
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let RankMode::Modular(primes) = self {
            let mut distinct = primes.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() < 3 {
                return Err(Error::InvalidInput(
                    "modular mode needs at least 3 distinct primes".into(),
                ));
            }
            if let Some(&p) = distinct.iter().find(|&&p| !is_prime(p)) {
                return Err(Error::BadPrime {
                    p,
                    reason: "not prime",
                });
            }
        }
        Ok(())
    }

    pub fn rank(&self, m: &QMatrix) -> Result<usize> {
        match self {
            RankMode::Exact => Ok(m.rank()),
            RankMode::Modular(primes) => {
                self.validate()?;
                let ranks = primes
                    .iter()
                    .map(|&p| m.modular_rank(p).map(|r| (p, r)))
                    .collect::<Result<Vec<_>>>()?;
                if ranks.windows(2).any(|w| w[0].1 != w[1].1) {
                    return Err(Error::ModularDisagreement(format!("{ranks:?}")));
                }
                Ok(ranks[0].1)
            }
        }
    }
}

/// `H^k(𝔤₋₁, 𝔢)` split by the degree of the values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub k: usize,
    /// Value degree `j` (so the summand is `∧^k V* ⊗ 𝔤_j`) to dimension.
    pub by_value_degree: BTreeMap<i8, usize>,
    pub total: usize,
}

/// `dim H^k = dim ker ∂_k - rank ∂_{k-1}`, computed block by block: `∂` lowers the
/// value degree by one, so `H^k ∩ (∧^k⊗𝔤_j)` only involves `∂_k` on that block and
/// `∂_{k-1}` on `∧^{k-1}⊗𝔤_{j+1}`.
pub fn lie_cohomology_dim(g: &GradedLieAlgebra, k: usize, mode: &RankMode) -> Result<CohomologyDims> {
    mode.validate()?;
    let mut by_value_degree = BTreeMap::new();
    for j in -1i8..=1 {
        by_value_degree.insert(j, lie_cohomology_component(g, k, j, mode)?);
    }
    let total = by_value_degree.values().sum();
    Ok(CohomologyDims {
        k,
        by_value_degree,
        total,
    })
}

/// `dim H^k ∩ (∧^k 𝔤₋₁* ⊗ 𝔤_j)`.
pub fn lie_cohomology_component(g: &GradedLieAlgebra, k: usize, j: i8, mode: &RankMode) -> Result<usize> {
    let out = lie_cochain_block(g, k, j);
    let kernel = out.ncols() - mode.rank(&out)?;
    let incoming = if k == 0 || j == 1 {
        0
    } else {
        mode.rank(&lie_cochain_block(g, k - 1, j + 1))?
    };
    Ok(kernel - incoming)
}

/// `∂_Lie ∘ ∂_Lie`, which must vanish.
pub fn dlie_squared(g: &GradedLieAlgebra, k: usize) -> QMatrix {
    &lie_cochain_differential(g, k + 1) * &lie_cochain_differential(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::build_root_system;
    use crate::liealg::{chevalley, grade_by_node};

    fn a2() -> GradedLieAlgebra {
        grade_by_node(&chevalley(&build_root_system('A', 2).unwrap()).unwrap(), 1).unwrap()
    }

    #[test]
    fn block_shapes() {
        let g = a2();
        assert_eq!(lie_cochain_differential(&g, 0).shape(), (16, 8));
        assert_eq!(lie_cochain_block(&g, 1, 1).shape(), (4, 4));
        assert_eq!(lie_cochain_block(&g, 0, -1).shape(), (0, 2));
        assert_eq!(lie_cochain_block(&g, 2, 0).shape(), (0, 4));
    }

    #[test]
    fn a2_cohomology() {
        let g = a2();
        let dims: Vec<usize> = (0..4)
            .map(|k| lie_cohomology_dim(&g, k, &RankMode::Exact).unwrap().total)
            .collect();
        assert_eq!(dims, [2, 4, 2, 0]);
    }

    #[test]
    fn image_of_degree_one_is_k() {
        let d = image_decomposition(&a2()).unwrap();
        assert!(d.image_in_kernel);
        assert_eq!(d.image_dim, 4);
        assert_eq!(tr_circ_dlie(&a2()).unwrap().shape(), (4, 4));
    }

    #[test]
    fn mode_labels() {
        assert_eq!(RankMode::Exact.label(), "exact");
        assert_eq!(RankMode::Modular(vec![3, 5, 7]).label(), "modular, probabilistic");
        assert!(RankMode::Modular(vec![3, 5]).validate().is_err());
    }
}
