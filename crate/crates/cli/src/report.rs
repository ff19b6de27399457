use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::AlgebraDescriptor;
use crate::config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

/// One claim compared against what was computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: &str, expected: impl Serialize, observed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let observed = serde_json::to_value(observed).expect("serializable");
        Check {
            name: name.to_string(),
            pass: expected == observed,
            expected,
            observed,
        }
    }
}

/// Not covered by the determinism guarantee.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    pub cache_hit: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub version: String,
    pub config: RunConfig,
    /// `"exact"` or `"modular, probabilistic"`; applies to every number in `result`.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDescriptor>,
    pub conventions: BTreeMap<String, String>,
    pub result: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report with timing removed, which is stable across runs.
    pub fn deterministic_json(&self) -> String {
        Report {
            timing: None,
            ..self.clone()
        }
        .to_json()
    }
}

pub fn conventions() -> BTreeMap<String, String> {
    [
        ("bianchi", "cyclic sum psi(x,y)z + psi(y,z)x + psi(z,x)y, no 1/3"),
        (
            "cochains",
            "increasing index tuples in lexicographic order, value index fastest",
        ),
        ("tensor_basis", "row-major, first factor slowest"),
        ("kernels", "reduced echelon form, pivot columns increasing"),
        ("nodes", "Bourbaki numbering, 1-based"),
        (
            "spinors",
            "Fock space on m modes, gamma(e_i) = 2a_i^+, gamma(e_{m+i}) = a_i",
        ),
        (
            "cohomology",
            "H^k(g_{-1}, e) with adjoint coefficients, split by value degree",
        ),
        (
            "ricci_trace",
            "(t_R psi)(x,y) = tr(z -> psi(z,x)y), rows x*dim V + y",
        ),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_string()))
    .collect()
}
