use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::roots::RootSystem;
use crate::{Error, Result};

/// Integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A Weyl group element as a word in simple reflections (0-based indices),
/// read as the product `s_{w[0]} s_{w[1]} ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        WeylElement { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Length of the word; equals the Coxeter length when the word is reduced.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// The word with 1-based (Bourbaki) indices.
    pub fn bourbaki_word(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    /// `w(λ)` for a weight in fundamental coordinates.
    pub fn act(&self, r: &RootSystem, lambda: &Weight) -> Weight {
        self.word
            .iter()
            .rev()
            .fold(lambda.clone(), |mu, &i| reflect_weight(r, i, &mu))
    }

    /// `w(β)` for a root (or any vector) in simple-root coordinates.
    pub fn act_on_root(&self, r: &RootSystem, beta: &[i64]) -> Vec<i64> {
        self.word.iter().rev().fold(beta.to_vec(), |mut b, &i| {
            let p = r.pairing(&b, i);
            b[i] -= p;
            b
        })
    }

    /// `{β > 0 : w⁻¹(β) < 0}`, computed as `{w_{<j}(α_{w[j]})}` over the word.
    pub fn inversion_set(&self, r: &RootSystem) -> Vec<Vec<i64>> {
        (0..self.word.len())
            .map(|j| {
                let prefix = WeylElement::from_word(self.word[..j].to_vec());
                let mut alpha = vec![0; r.rank()];
                alpha[self.word[j]] = 1;
                prefix.act_on_root(r, &alpha)
            })
            .collect()
    }

    /// Number of positive roots sent to negative roots by `w⁻¹`, by direct search.
    pub fn count_inversions(&self, r: &RootSystem) -> usize {
        let inverse = WeylElement::from_word(self.word.iter().rev().copied().collect());
        r.positive_roots()
            .iter()
            .filter(|beta| inverse.act_on_root(r, beta).iter().any(|&c| c < 0))
            .count()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `s_i(λ) = λ - λ_i α_i`, with `α_i` in fundamental coordinates given by the
/// `i`-th column of the Cartan matrix.
fn reflect_weight(r: &RootSystem, i: usize, lambda: &Weight) -> Weight {
    let li = lambda.0[i];
    Weight(
        lambda
            .0
            .iter()
            .enumerate()
            .map(|(j, &x)| x - li * r.cartan()[j][i])
            .collect(),
    )
}

/// Half the sum of the positive roots: every fundamental coordinate is 1.
pub fn rho(r: &RootSystem) -> Weight {
    Weight(vec![1; r.rank()])
}

/// The shifted action `w·λ = w(λ + ρ) - ρ`.
pub fn affine_action(r: &RootSystem, w: &WeylElement, lambda: &Weight) -> Weight {
    let rho = rho(r);
    w.act(r, &lambda.add(&rho)).sub(&rho)
}

/// Minimal length coset representatives for the maximal parabolic of `node`
/// (1-based), up to length `max_len`, ordered by length and then by word.
///
/// `w` qualifies iff every root in its inversion set involves `α_node`.
/// Extending `w` by `s_j` on the right adds the root `w(α_j)` to the inversion
/// set, so the set is grown one reflection at a time; each element keeps the
/// lexicographically least reduced word reaching it.
pub fn minimal_coset_reps(r: &RootSystem, node: usize, max_len: usize) -> Result<Vec<WeylElement>> {
    let n = check_node(r, node)?;
    let rho = rho(r);
    let mut out = vec![WeylElement::identity()];
    let mut level = vec![WeylElement::identity()];
    for _ in 0..max_len {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut next = Vec::new();
        for w in &level {
            for j in 0..r.rank() {
                let mut alpha = vec![0; r.rank()];
                alpha[j] = 1;
                let image = w.act_on_root(r, &alpha);
                if image[n] > 0 && image.iter().all(|&c| c >= 0) {
                    let mut word = w.word.clone();
                    word.push(j);
                    let ws = WeylElement::from_word(word);
                    if seen.insert(ws.act(r, &rho)) {
                        next.push(ws);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        // Level is processed in word order, so the first word found is the least.
        next.sort();
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

pub(crate) fn check_node(r: &RootSystem, node: usize) -> Result<usize> {
    if node == 0 || node > r.rank() {
        return Err(Error::InvalidInput(format!(
            "node {node} outside 1..={} for {}",
            r.rank(),
            r
        )));
    }
    Ok(node - 1)
}

/// Dimension of the irreducible module of highest weight `λ`.
pub fn weyl_dimension(r: &RootSystem, lambda: &Weight) -> Result<u64> {
    dimension_over(r, lambda, None)
}

/// Dimension of the irreducible module of the Levi factor obtained by deleting
/// `node` (1-based); `λ` must be dominant at every other node.
pub fn levi_weyl_dimension(r: &RootSystem, node: usize, lambda: &Weight) -> Result<u64> {
    let n = check_node(r, node)?;
    dimension_over(r, lambda, Some(n))
}

fn dimension_over(r: &RootSystem, lambda: &Weight, removed: Option<usize>) -> Result<u64> {
    if lambda.0.len() != r.rank() {
        return Err(Error::InvalidInput("weight of the wrong rank".into()));
    }
    let dominant = lambda
        .0
        .iter()
        .enumerate()
        .all(|(i, &x)| Some(i) == removed || x >= 0);
    if !dominant {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    // <μ, β^∨> is proportional to sum_i c_i d_i μ_i with a factor depending only on β.
    let d = r.symmetrizer();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for beta in r.positive_roots() {
        if removed.is_some_and(|n| beta[n] != 0) {
            continue;
        }
        let shifted: i64 = (0..r.rank()).map(|i| beta[i] * d[i] * (lambda.0[i] + 1)).sum();
        let base: i64 = (0..r.rank()).map(|i| beta[i] * d[i]).sum();
        num *= shifted;
        den *= base;
    }
    (num / den)
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("dimension out of range".into()))
}
