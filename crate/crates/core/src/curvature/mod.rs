//! Curvature modules of representations and the Lie cochain complex of a
//! one-graded algebra.
//!
//! Cochains on a space `W` with values in `U` use [`CochainSpace`] coordinates.
//! The Bianchi map uses the cyclic sum without a `1/3`, so on
//! `∧²𝔤₋₁* ⊗ 𝔤₀` it agrees with `∂_Lie` up to sign.

mod bianchi;
mod cochain;
mod lie;

pub use bianchi::{
    antisymmetrization_matrix, bianchi_matrix, curvature_domain, curvature_module, is_ricci_type,
    prolongation, rank_on, ricci_trace_matrix, ricci_trace_matrix_transposed, spencer_differential,
    spencer_h12, CurvatureReport,
};
pub use cochain::CochainSpace;
pub use lie::{
    dlie_squared, image_decomposition, lie_cochain_block, lie_cochain_differential, lie_cohomology_component,
    lie_cohomology_dim, tr_circ_dlie, verify_homogeneity, verify_prop1, CohomologyDims, ImageDecomposition,
    RankMode,
};
