use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::{RunConfig, Verb};

/// Environment variable naming the cache directory when `--cache` is absent.
pub const CACHE_ENV: &str = "HOLONOMY_CACHE";

/// Exact curvature modules, prolongations and Lie algebra cohomology.
///
/// Nodes use Bourbaki numbering starting at 1. Exit status is 0 on success,
/// 1 when a check or computation fails, 2 on a usage error.
#[derive(Debug, Parser)]
#[command(name = "holonomy", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report (or the exported matrix) here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cache directory for finished reports and matrices.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full pipeline for C + spin(10) on a half-spinor; the only target is `spin10`.
    Report {
        target: String,
        /// E6 node to compare against: 1 (even half-spinor) or 6 (odd).
        #[arg(long)]
        node: Option<usize>,
    },
    /// Curvature module, prolongation and Ricci-type verdict.
    Kmodule {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        node: Option<usize>,
    },
    /// First prolongation and Spencer H^{1,2}.
    Prolong {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        node: Option<usize>,
    },
    /// H^k(g_{-1}, g) of a graded algebra, split by value degree.
    Cohomology {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long)]
        degree: usize,
        /// Use ranks modulo these primes (at least three) instead of exact ranks.
        #[arg(long, value_delimiter = ',')]
        modular_primes: Option<Vec<u64>>,
    },
    /// Kostant's prediction for H^k of the nilradical of a maximal parabolic.
    Kostant {
        /// Root system type such as E6.
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        node: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Write one of bianchi, ricci_trace, dlie-k0, dlie-k1, dlie-k2, tr-circ-dlie.
    ExportMatrix {
        #[arg(long)]
        name: String,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        node: Option<usize>,
    },
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let mut c = match self.command {
            Command::Report { target, node } => RunConfig {
                target: Some(target),
                node,
                ..RunConfig::new(Verb::Report)
            },
            Command::Kmodule { algebra, node } => RunConfig {
                algebra: Some(algebra),
                node,
                ..RunConfig::new(Verb::Kmodule)
            },
            Command::Prolong { algebra, node } => RunConfig {
                algebra: Some(algebra),
                node,
                ..RunConfig::new(Verb::Prolong)
            },
            Command::Cohomology {
                algebra,
                node,
                degree,
                modular_primes,
            } => RunConfig {
                algebra: Some(algebra),
                node,
                degree: Some(degree),
                modular_primes,
                ..RunConfig::new(Verb::Cohomology)
            },
            Command::Kostant {
                root_type,
                node,
                degree,
            } => RunConfig {
                root_type: Some(root_type),
                node: Some(node),
                degree: Some(degree),
                ..RunConfig::new(Verb::Kostant)
            },
            Command::ExportMatrix { name, algebra, node } => RunConfig {
                matrix: Some(name),
                algebra: Some(algebra),
                node,
                ..RunConfig::new(Verb::ExportMatrix)
            },
        };
        c.out = self.out;
        c.cache = self.cache;
        c
    }
}
