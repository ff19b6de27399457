//! Named algebras and representations.
//!
//! | name | meaning |
//! |---|---|
//! | `so<n>-split` | split orthogonal algebra on `ℂⁿ` |
//! | `gl<n>`, `sl<n>` | defining representations |
//! | `spin10c-center` | `ℂ ⊕ 𝔰𝔭𝔦𝔫(10)` on the even half-spinors |
//! | `spin10c-center-odd` | the same on the odd half-spinors |
//! | `e6-chevalley` | Chevalley basis of `𝔢₆`, graded by `--node` |
//! | `<a|d|e><rank>-chevalley` | the same for other simply-laced types |
//!
//! Graded algebras used where a representation is expected stand for
//! `𝔤₀` acting on `𝔤₋₁`.

use holonomy::kostant::build_root_system;
use holonomy::liealg::{
    append_center, chevalley, component_rep, gl, grade_by_node, half_spinor_rep, sl, so_split,
    GradedLieAlgebra, Parity, Representation,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub dim: usize,
    pub rep_dim: usize,
}

enum Entry {
    So(usize),
    Gl(usize),
    Sl(usize),
    Spin10(Parity),
    Chevalley(char, usize),
}

fn number(s: &str) -> Option<usize> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

fn parse(name: &str) -> Option<Entry> {
    match name {
        "spin10c-center" => return Some(Entry::Spin10(Parity::Even)),
        "spin10c-center-odd" => return Some(Entry::Spin10(Parity::Odd)),
        _ => {}
    }
    if let Some(n) = name.strip_prefix("so").and_then(|r| r.strip_suffix("-split")) {
        return number(n).map(Entry::So);
    }
    if let Some(rest) = name.strip_suffix("-chevalley") {
        let mut chars = rest.chars();
        let letter = chars.next()?.to_ascii_uppercase();
        return matches!(letter, 'A' | 'D' | 'E')
            .then(|| number(chars.as_str()))
            .flatten()
            .map(|r| Entry::Chevalley(letter, r));
    }
    if let Some(n) = name.strip_prefix("gl") {
        return number(n).map(Entry::Gl);
    }
    if let Some(n) = name.strip_prefix("sl") {
        return number(n).map(Entry::Sl);
    }
    None
}

pub fn is_graded(name: &str) -> bool {
    chevalley_type(name).is_some()
}

/// Root system type and rank of a `<type><rank>-chevalley` name.
pub fn chevalley_type(name: &str) -> Option<(char, usize)> {
    match parse(name) {
        Some(Entry::Chevalley(letter, rank)) => Some((letter, rank)),
        _ => None,
    }
}

/// A Chevalley algebra graded at `node` (1-based, Bourbaki).
pub fn graded(name: &str, node: usize) -> Result<GradedLieAlgebra> {
    match parse(name) {
        Some(Entry::Chevalley(letter, rank)) => {
            let c = chevalley(&build_root_system(letter, rank)?)?;
            Ok(grade_by_node(&c, node)?)
        }
        Some(_) => Err(CliError::Usage(format!("`{name}` is not a graded algebra"))),
        None => Err(CliError::UnknownAlgebra(name.to_string())),
    }
}

pub fn graded_descriptor(name: &str, g: &GradedLieAlgebra) -> AlgebraDescriptor {
    AlgebraDescriptor {
        name: name.to_string(),
        dim: g.algebra().dim(),
        rep_dim: g.component(-1).len(),
    }
}

pub fn representation(name: &str, node: usize) -> Result<(Representation, AlgebraDescriptor)> {
    let rep = match parse(name).ok_or_else(|| CliError::UnknownAlgebra(name.to_string()))? {
        Entry::So(n) => so_split(n)?,
        Entry::Gl(n) => gl(n)?,
        Entry::Sl(n) => sl(n)?,
        Entry::Spin10(parity) => append_center(&half_spinor_rep(10, parity)?),
        Entry::Chevalley(..) => component_rep(&graded(name, node)?, -1)?,
    };
    let descriptor = AlgebraDescriptor {
        name: name.to_string(),
        dim: rep.algebra().dim(),
        rep_dim: rep.dim(),
    };
    Ok((rep, descriptor))
}
