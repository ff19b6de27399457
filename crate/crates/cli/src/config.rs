use std::path::PathBuf;

use holonomy::curvature::RankMode;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verb {
    Report,
    Kmodule,
    Prolong,
    Cohomology,
    Kostant,
    ExportMatrix,
}

/// Everything a run depends on. `out` and `cache` only say where things go, so
/// they are left out of the echo and of cache keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub verb: Verb,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub root_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modular_primes: Option<Vec<u64>>,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub cache: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(verb: Verb) -> Self {
        RunConfig {
            verb,
            target: None,
            algebra: None,
            root_type: None,
            node: None,
            degree: None,
            matrix: None,
            modular_primes: None,
            out: None,
            cache: None,
        }
    }

    pub fn mode(&self) -> RankMode {
        match &self.modular_primes {
            Some(p) => RankMode::Modular(p.clone()),
            None => RankMode::Exact,
        }
    }

    /// Check that the fields required by the verb are present and that nothing
    /// else is set.
    pub fn validate(&self) -> Result<()> {
        let need = |present: bool, name: &str| -> Result<()> {
            if present {
                Ok(())
            } else {
                Err(CliError::Usage(format!("{:?} needs --{name}", self.verb)))
            }
        };
        let reject = |set: bool, name: &str| -> Result<()> {
            if set {
                Err(CliError::Usage(format!(
                    "--{name} does not apply to {:?}",
                    self.verb
                )))
            } else {
                Ok(())
            }
        };
        reject(
            self.modular_primes.is_some() && self.verb != Verb::Cohomology,
            "modular-primes",
        )?;
        match self.verb {
            Verb::Report => {
                need(self.target.is_some(), "target")?;
                if self.target.as_deref() != Some("spin10") {
                    return Err(CliError::Usage(format!(
                        "unknown report `{}`; the only report is spin10",
                        self.target.as_deref().unwrap_or_default()
                    )));
                }
                if !matches!(self.node, None | Some(1) | Some(6)) {
                    return Err(CliError::Usage("report spin10 takes --node 1 or --node 6".into()));
                }
            }
            Verb::Kmodule | Verb::Prolong => need(self.algebra.is_some(), "algebra")?,
            Verb::Cohomology => {
                need(self.algebra.is_some(), "algebra")?;
                need(self.degree.is_some(), "degree")?;
                self.mode().validate()?;
            }
            Verb::Kostant => {
                need(self.root_type.is_some(), "type")?;
                need(self.node.is_some(), "node")?;
                need(self.degree.is_some(), "degree")?;
            }
            Verb::ExportMatrix => {
                need(self.matrix.is_some(), "name")?;
                need(self.algebra.is_some(), "algebra")?;
            }
        }
        Ok(())
    }
}
