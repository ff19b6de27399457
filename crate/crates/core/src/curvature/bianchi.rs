use rayon::prelude::*;
use serde::Serialize;

use super::cochain::{assemble, CochainSpace};
use crate::liealg::Representation;
use crate::{QMatrix, QSubspace, Rational, SparseVec};

/// Columns of every action matrix, so `columns[α].row(t)` lists `ρ(X_α) e_t`.
fn action_columns(rho: &Representation) -> Vec<QMatrix> {
    rho.action().par_iter().map(QMatrix::transpose).collect()
}

/// Domain `∧²V* ⊗ 𝔤` of the Bianchi map.
pub fn curvature_domain(rho: &Representation) -> CochainSpace {
    CochainSpace::new(rho.dim(), 2, rho.algebra().dim())
}

/// `ψ ↦ ((x, y, z) ↦ ψ(x,y)z + ψ(y,z)x + ψ(z,x)y)` from `∧²V*⊗𝔤` to `∧³V*⊗V`.
///
/// For `ψ = e^{ij} ⊗ X` and a third index `t`, the triple `{i, j, t}` receives
/// `±ρ(X) e_t`, negative exactly when `i < t < j`.
pub fn bianchi_matrix(rho: &Representation) -> QMatrix {
    let n = rho.dim();
    let domain = curvature_domain(rho);
    let codomain = CochainSpace::new(n, 3, n);
    let cols = action_columns(rho);
    assemble(codomain.dim(), domain.dim(), |c| {
        let (pair, alpha) = domain.split(c);
        let (i, j) = (pair[0], pair[1]);
        let mut out = Vec::new();
        for t in (0..n).filter(|&t| t != i && j != t) {
            let mut triple = [i, j, t];
            triple.sort_unstable();
            let negate = i < t && t < j;
            for (b, v) in cols[alpha].row(t) {
                out.push((
                    codomain.index(&triple, *b),
                    if negate { -v.clone() } else { v.clone() },
                ));
            }
        }
        out
    })
}

/// `K(𝔤)`: the kernel of the Bianchi map.
pub fn curvature_module(rho: &Representation) -> QSubspace {
    bianchi_matrix(rho).kernel_basis()
}

/// `A ↦ ((x, y) ↦ A(x)y - A(y)x)` from `V*⊗𝔤` to `∧²V*⊗V`, columns `i * dim 𝔤 + α`.
pub fn antisymmetrization_matrix(rho: &Representation) -> QMatrix {
    let n = rho.dim();
    let g = rho.algebra().dim();
    let codomain = CochainSpace::new(n, 2, n);
    let cols = action_columns(rho);
    assemble(codomain.dim(), n * g, |c| {
        let (i, alpha) = (c / g, c % g);
        let mut out = Vec::new();
        for q in (0..n).filter(|&q| q != i) {
            let (pair, sign_flip) = if i < q { ([i, q], false) } else { ([q, i], true) };
            for (b, v) in cols[alpha].row(q) {
                out.push((
                    codomain.index(&pair, *b),
                    if sign_flip { -v.clone() } else { v.clone() },
                ));
            }
        }
        out
    })
}

/// `𝔤⁽¹⁾ = {A ∈ V*⊗𝔤 : A(x)y = A(y)x}`.
pub fn prolongation(rho: &Representation) -> QSubspace {
    antisymmetrization_matrix(rho).kernel_basis()
}

/// `∂: V* ⊗ 𝔤⁽¹⁾ → ∧²V* ⊗ 𝔤`, `(∂T)(x, y) = T(x)y - T(y)x`, with columns
/// `k * dim 𝔤⁽¹⁾ + p` for the `p`-th basis vector of the prolongation.
pub fn spencer_differential(rho: &Representation, prolongation: &QSubspace) -> QMatrix {
    let n = rho.dim();
    let g = rho.algebra().dim();
    let p = prolongation.dim();
    let codomain = curvature_domain(rho);
    assemble(codomain.dim(), n * p, |c| {
        let (k, idx) = (c / p, c % p);
        let mut out = Vec::new();
        for (entry, v) in &prolongation.vectors()[idx] {
            let (y, alpha) = (entry / g, entry % g);
            if y > k {
                out.push((codomain.index(&[k, y], alpha), v.clone()));
            } else if y < k {
                out.push((codomain.index(&[y, k], alpha), -v.clone()));
            }
        }
        out
    })
}

/// `dim H^{1,2} = dim K - rank ∂(V*⊗𝔤⁽¹⁾)`.
pub fn spencer_h12(rho: &Representation) -> usize {
    let k = curvature_module(rho);
    let g1 = prolongation(rho);
    k.dim() - spencer_differential(rho, &g1).rank()
}

/// `(t_R ψ)(x, y) = tr(z ↦ ψ(z, x) y)` from `∧²V*⊗𝔤` to `V*⊗V*`, rows `x * dim V + y`.
pub fn ricci_trace_matrix(rho: &Representation) -> QMatrix {
    ricci_trace_with(rho, false)
}

/// The same contraction with its output transposed, `(x, y) ↦ (t_R ψ)(y, x)`.
pub fn ricci_trace_matrix_transposed(rho: &Representation) -> QMatrix {
    ricci_trace_with(rho, true)
}

fn ricci_trace_with(rho: &Representation, transposed: bool) -> QMatrix {
    let n = rho.dim();
    let domain = curvature_domain(rho);
    let action = rho.action();
    let row = |x: usize, y: usize| if transposed { y * n + x } else { x * n + y };
    assemble(n * n, domain.dim(), |c| {
        let (pair, alpha) = domain.split(c);
        let (i, j) = (pair[0], pair[1]);
        let m = &action[alpha];
        // ψ(e_i, e_j) = X, ψ(e_j, e_i) = -X; the trace picks the z-th coordinate.
        let mut out: Vec<(usize, Rational)> = m.row(i).iter().map(|(y, v)| (row(j, *y), v.clone())).collect();
        out.extend(m.row(j).iter().map(|(y, v)| (row(i, *y), -v.clone())));
        out
    })
}

/// Rank of a linear map restricted to a subspace.
pub fn rank_on(m: &QMatrix, subspace: &QSubspace) -> usize {
    let images: Vec<SparseVec<Rational>> = m.apply_to(subspace);
    QMatrix::from_rows(m.nrows(), images).rank()
}

/// Summary of the curvature computations for one representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct CurvatureReport {
    pub dim_V: usize,
    pub dim_g: usize,
    pub dim_domain: usize,
    pub dim_K: usize,
    pub dim_prolongation: usize,
    pub dim_spencer_h12: usize,
    pub ricci_trace_rank_on_K: usize,
    pub ricci_type: bool,
}

/// `K(𝔤)` is of Ricci type iff the Ricci trace is injective on it.
pub fn is_ricci_type(rho: &Representation) -> CurvatureReport {
    let k = curvature_module(rho);
    let g1 = prolongation(rho);
    let spencer_rank = spencer_differential(rho, &g1).rank();
    let trace_rank = rank_on(&ricci_trace_matrix(rho), &k);
    CurvatureReport {
        dim_V: rho.dim(),
        dim_g: rho.algebra().dim(),
        dim_domain: curvature_domain(rho).dim(),
        dim_K: k.dim(),
        dim_prolongation: g1.dim(),
        dim_spencer_h12: k.dim() - spencer_rank,
        ricci_trace_rank_on_K: trace_rank,
        ricci_type: trace_rank == k.dim(),
    }
}
