//! Lie algebras by structure constants, their representations, and the
//! concrete algebras used downstream: split orthogonal algebras, half-spinors,
//! Chevalley bases and one-gradings.

mod algebra;
mod chevalley;
mod classical;
mod graded;
mod rep;
mod spinor;

pub use algebra::LieAlgebra;
pub use chevalley::{chevalley, ChevalleyAlgebra};
pub use classical::{gl, sl, so_split};
pub use graded::{component_rep, grade_by_node, GradedLieAlgebra};
pub use rep::Representation;
pub use spinor::{half_spinor_rep, Parity};

pub fn check_jacobi(l: &LieAlgebra) -> bool {
    l.check_jacobi()
}

pub fn check_representation(rho: &Representation) -> bool {
    rho.check_representation()
}

/// `ρ ⊕` a one-dimensional center acting as the identity.
pub fn append_center(rho: &Representation) -> Representation {
    rho.with_center()
}

pub fn dual_rep(rho: &Representation) -> Representation {
    rho.dual()
}

pub fn wedge_rep(rho: &Representation, k: usize) -> crate::Result<Representation> {
    rho.wedge(k)
}

pub fn tensor_rep(rho: &Representation, sigma: &Representation) -> crate::Result<Representation> {
    rho.tensor(sigma)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_bigint::BigInt;

    use super::*;
    use crate::{QMatrix, Rational};

    fn sl2() -> LieAlgebra {
        // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
        let q = |v: i64| Rational::from_integer(BigInt::from(v));
        LieAlgebra::from_brackets(vec!["e".into(), "f".into(), "h".into()], |i, j| match (i, j) {
            (0, 1) => vec![(2, q(1))],
            (1, 0) => vec![(2, q(-1))],
            (2, 0) => vec![(0, q(2))],
            (0, 2) => vec![(0, q(-2))],
            (2, 1) => vec![(1, q(-2))],
            (1, 2) => vec![(1, q(2))],
            _ => Vec::new(),
        })
        .unwrap()
    }

    #[test]
    fn jacobi_validator() {
        assert!(check_jacobi(&LieAlgebra::abelian(4)));
        let good = sl2();
        assert!(check_jacobi(&good));
        let q = |v: i64| Rational::from_integer(BigInt::from(v));
        let bad = LieAlgebra::from_brackets(good.labels().to_vec(), |i, j| match (i, j) {
            (2, 0) => vec![(0, q(3))],
            (0, 2) => vec![(0, q(-3))],
            _ => good.bracket_basis(i, j).clone(),
        })
        .unwrap();
        assert!(!check_jacobi(&bad));
    }

    #[test]
    fn antisymmetry_is_enforced() {
        let q = Rational::from_integer(BigInt::from(1));
        let r = LieAlgebra::from_brackets(vec!["a".into(), "b".into()], |i, j| {
            if (i, j) == (0, 1) {
                vec![(0, q.clone())]
            } else {
                Vec::new()
            }
        });
        assert!(r.is_err());
    }

    #[test]
    fn standard_representations() {
        let alg = Arc::new(sl2());
        assert!(check_representation(&Representation::adjoint(Arc::clone(&alg))));
        assert!(check_representation(&Representation::trivial(
            Arc::new(LieAlgebra::abelian(3)),
            4
        )));
        assert!(!check_representation(
            &Representation::new(Arc::clone(&alg), 1, vec![QMatrix::identity(1); 3]).unwrap()
        ));
    }

    #[test]
    fn functorial_constructions() {
        let rho = half_spinor_rep(10, Parity::Even).unwrap();
        let dd = dual_rep(&dual_rep(&rho));
        assert_eq!(dd.action(), rho.action());
        let w2 = wedge_rep(&rho, 2).unwrap();
        assert_eq!(w2.dim(), 120);
        assert_eq!(wedge_rep(&rho, 3).unwrap().dim(), 560);
        assert!(w2.check_representation());
        let small = half_spinor_rep(6, Parity::Odd).unwrap();
        let t = tensor_rep(&small, &dual_rep(&small)).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(t.check_representation());
        assert!(wedge_rep(&small, 5).is_err());
    }

    #[test]
    fn center_acts_as_identity() {
        let c = append_center(&half_spinor_rep(10, Parity::Even).unwrap());
        assert_eq!(c.algebra().dim(), 46);
        assert_eq!(c.matrix(45), &QMatrix::identity(16));
        assert!(check_representation(&c));
        assert!(check_jacobi(c.algebra()));
    }
}
