use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::algebra::LieAlgebra;
use super::chevalley::ChevalleyAlgebra;
use super::rep::Representation;
use crate::kostant::one_graded_node;
use crate::{Error, QMatrix, Rational, Result, SparseVec};

/// A Lie algebra with a grading `𝔤₋₁ ⊕ 𝔤₀ ⊕ 𝔤₁` on its basis vectors.
#[derive(Debug, Clone)]
pub struct GradedLieAlgebra {
    algebra: Arc<LieAlgebra>,
    degree: Vec<i8>,
    grading_element: Option<SparseVec<Rational>>,
    components: [Vec<usize>; 3],
    position: Vec<usize>,
}

impl GradedLieAlgebra {
    /// Checks `[𝔤_a, 𝔤_b] ⊆ 𝔤_{a+b}` on all basis pairs and, when given,
    /// `[E, x] = deg(x) x` for the grading element.
    pub fn new(
        algebra: Arc<LieAlgebra>,
        degree: Vec<i8>,
        grading_element: Option<SparseVec<Rational>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if degree.len() != n || degree.iter().any(|d| !(-1..=1).contains(d)) {
            return Err(Error::InvalidInput(
                "degrees must be -1, 0 or 1 for each basis vector".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                let target = degree[i] + degree[j];
                let v = algebra.bracket_basis(i, j);
                if v.iter().any(|(k, _)| degree[*k] != target) {
                    return Err(Error::InvalidInput(format!(
                        "[{}, {}] is not homogeneous of degree {target}",
                        algebra.labels()[i],
                        algebra.labels()[j]
                    )));
                }
            }
        }
        if let Some(e) = &grading_element {
            for (x, d) in degree.iter().enumerate() {
                let expected: SparseVec<Rational> = if *d == 0 {
                    Vec::new()
                } else {
                    vec![(x, Rational::from_integer(BigInt::from(*d)))]
                };
                if algebra.bracket(e, &vec![(x, Rational::one())]) != expected {
                    return Err(Error::InvalidInput(format!(
                        "grading element does not act by the degree on {}",
                        algebra.labels()[x]
                    )));
                }
            }
        }
        let mut components: [Vec<usize>; 3] = Default::default();
        let mut position = vec![0; n];
        for (x, d) in degree.iter().enumerate() {
            let comp = &mut components[(*d + 1) as usize];
            position[x] = comp.len();
            comp.push(x);
        }
        Ok(GradedLieAlgebra {
            algebra,
            degree,
            grading_element,
            components,
            position,
        })
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn degree(&self, basis: usize) -> i8 {
        self.degree[basis]
    }

    pub fn grading_element(&self) -> Option<&SparseVec<Rational>> {
        self.grading_element.as_ref()
    }

    /// Basis indices of `𝔤_d`, in increasing order.
    pub fn component(&self, d: i8) -> &[usize] {
        &self.components[(d + 1) as usize]
    }

    /// Position of a basis vector inside its own component.
    pub fn position(&self, basis: usize) -> usize {
        self.position[basis]
    }

    pub fn component_dims(&self) -> (usize, usize, usize) {
        (
            self.components[0].len(),
            self.components[1].len(),
            self.components[2].len(),
        )
    }

    /// The degree-zero subalgebra, basis in the order of `component(0)`.
    pub fn degree_zero(&self) -> Result<LieAlgebra> {
        self.algebra.subalgebra(self.component(0))
    }

    /// The grading element in the basis of [`degree_zero`](Self::degree_zero).
    pub fn grading_element_in_degree_zero(&self) -> Option<SparseVec<Rational>> {
        self.grading_element
            .as_ref()
            .map(|e| e.iter().map(|(k, v)| (self.position[*k], v.clone())).collect())
    }

    /// True iff `𝔤_d` is an abelian subalgebra.
    pub fn is_abelian(&self, d: i8) -> bool {
        let comp = self.component(d);
        comp.iter()
            .all(|&i| comp.iter().all(|&j| self.algebra.bracket_basis(i, j).is_empty()))
    }
}

/// The one-grading of a Chevalley algebra by the coefficient of `α_node` (1-based).
pub fn grade_by_node(c: &ChevalleyAlgebra, node: usize) -> Result<GradedLieAlgebra> {
    let roots = c.roots();
    let n = one_graded_node(roots, node)?;
    let r = roots.rank();
    let dim = c.algebra().dim();
    let degree: Vec<i8> = (0..dim).map(|x| c.weight_of(x)[n] as i8).collect();

    // E = Σ x_i h_i with [E, e_α] = α_node e_α, i.e. A^T x = unit vector at the node.
    let cartan = roots.cartan();
    let int = |v: i64| Rational::from_integer(BigInt::from(v));
    let system = QMatrix::from_triplets(
        r,
        r + 1,
        (0..r)
            .flat_map(|j| (0..r).map(move |i| (j, i, int(cartan[i][j]))))
            .chain(std::iter::once((n, r, int(-1)))),
    );
    let kernel = system.kernel_basis();
    let v = kernel
        .vectors()
        .first()
        .ok_or_else(|| Error::InvalidCartanMatrix("Cartan matrix is singular".into()))?;
    let last = v
        .iter()
        .find(|(k, _)| *k == r)
        .map(|(_, x)| x.clone())
        .filter(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidCartanMatrix("no grading element".into()))?;
    let e: SparseVec<Rational> = v
        .iter()
        .filter(|(k, _)| *k < r)
        .map(|(k, x)| (*k, x / &last))
        .collect();

    GradedLieAlgebra::new(Arc::clone(c.algebra()), degree, Some(e))
}

/// `𝔤₀` acting on `𝔤_d` (`d = ±1`) by the bracket.
pub fn component_rep(g: &GradedLieAlgebra, d: i8) -> Result<Representation> {
    if d != -1 && d != 1 {
        return Err(Error::InvalidInput(format!("component degree {d} is not ±1")));
    }
    let g0 = Arc::new(g.degree_zero()?);
    let target = g.component(d);
    let m = target.len();
    let action = g
        .component(0)
        .iter()
        .map(|&x| {
            QMatrix::from_triplets(
                m,
                m,
                target.iter().enumerate().flat_map(|(col, &y)| {
                    g.algebra()
                        .bracket_basis(x, y)
                        .iter()
                        .map(move |(k, v)| (g.position(*k), col, v.clone()))
                }),
            )
        })
        .collect();
    Representation::new(g0, m, action)
}
