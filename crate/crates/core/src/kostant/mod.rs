//! Root systems, Weyl groups and Kostant's computation of nilradical cohomology.

mod bbw;
mod roots;
mod weyl;

pub use bbw::{kostant_h, one_graded_node, CohomologyComponent, LocatedIn};
pub use roots::{build_root_system, RootSystem};
pub use weyl::{
    affine_action, levi_weyl_dimension, minimal_coset_reps, rho, weyl_dimension, Weight, WeylElement,
};
