use std::fs;
use std::time::Instant;

use holonomy::curvature::{
    bianchi_matrix, curvature_module, image_decomposition, is_ricci_type, lie_cochain_differential,
    lie_cohomology_component, lie_cohomology_dim, prolongation, ricci_trace_matrix, spencer_differential,
    tr_circ_dlie, verify_homogeneity, verify_prop1, RankMode,
};
use holonomy::kostant::{build_root_system, kostant_h, LocatedIn, RootSystem};
use holonomy::liealg::{component_rep, Representation};
use holonomy::{QMatrix, Rational};
use serde_json::{json, Value};

use crate::cache::{self, Cache};
use crate::catalog::{self, AlgebraDescriptor};
use crate::config::{RunConfig, Verb};
use crate::error::{CliError, Result};
use crate::report::{conventions, Check, Report, Timing, SCHEMA_VERSION};

pub const MATRIX_NAMES: [&str; 6] = [
    "bianchi",
    "ricci_trace",
    "dlie-k0",
    "dlie-k1",
    "dlie-k2",
    "tr-circ-dlie",
];

/// Fill in defaults so that equivalent invocations echo the same config.
fn normalized(config: &RunConfig) -> RunConfig {
    let mut c = config.clone();
    let graded = c.algebra.as_deref().is_some_and(catalog::is_graded);
    if c.node.is_none() && (c.verb == Verb::Report || graded) {
        c.node = Some(1);
    }
    if let Some(primes) = &mut c.modular_primes {
        primes.sort_unstable();
        primes.dedup();
    }
    c
}

/// Run a verb and return its report. Matrices from `export-matrix` are written
/// to `config.out` when it is set.
pub fn run(config: &RunConfig) -> Result<Report> {
    let (report, text) = run_inner(config)?;
    if let (Some(text), Some(out)) = (text, &config.out) {
        fs::write(out, text)?;
    }
    Ok(report)
}

/// Compute the named matrix, returning the report and the matrix in text form.
pub fn export_matrix(config: &RunConfig) -> Result<(Report, String)> {
    if config.verb != Verb::ExportMatrix {
        return Err(CliError::Usage(
            "export_matrix needs the export-matrix verb".into(),
        ));
    }
    let (report, text) = run_inner(config)?;
    Ok((report, text.expect("export-matrix produces a matrix")))
}

fn run_inner(config: &RunConfig) -> Result<(Report, Option<String>)> {
    let start = Instant::now();
    config.validate()?;
    if let Some(name) = &config.matrix {
        if !MATRIX_NAMES.contains(&name.as_str()) {
            return Err(CliError::UnknownMatrix(name.clone()));
        }
    }
    let config = normalized(config);
    let mode = config.mode();
    let cache = config.cache.as_deref().map(Cache::open).transpose()?;
    let key = cache::key(
        &serde_json::to_string(&json!({
            "schema_version": SCHEMA_VERSION,
            "version": env!("CARGO_PKG_VERSION"),
            "conventions": conventions(),
            "config": &config,
        }))
        .expect("config serializes"),
    );
    let exporting = config.verb == Verb::ExportMatrix;

    if let Some(cache) = &cache {
        let report = cache.get(&key, "json")?;
        let text = if exporting { cache.get(&key, "txt")? } else { None };
        if let Some(report) = report.filter(|_| !exporting || text.is_some()) {
            let mut report: Report = serde_json::from_str(&report)
                .map_err(|e| CliError::Cache(format!("corrupt entry {key}: {e}")))?;
            report.timing = Some(Timing {
                elapsed_ms: start.elapsed().as_millis() as u64,
                cache_hit: true,
            });
            return Ok((report, text));
        }
    }

    let mut text = None;
    let outcome = match config.verb {
        Verb::Report => spin10(config.node.unwrap_or(1))?,
        Verb::Kmodule => kmodule(&config)?,
        Verb::Prolong => prolong(&config)?,
        Verb::Cohomology => cohomology(&config, &mode)?,
        Verb::Kostant => kostant(&config)?,
        Verb::ExportMatrix => {
            let (outcome, t) = export(&config)?;
            text = Some(t);
            outcome
        }
    };
    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        version: env!("CARGO_PKG_VERSION").to_string(),
        config,
        mode: mode.label().to_string(),
        algebra: outcome.algebra,
        conventions: conventions(),
        result: outcome.result,
        checks: outcome.checks,
        timing: None,
    };
    if let Some(cache) = &cache {
        if let Some(t) = &text {
            cache.put(&key, "txt", t)?;
        }
        cache.put(&key, "json", &report.deterministic_json())?;
    }
    report.timing = Some(Timing {
        elapsed_ms: start.elapsed().as_millis() as u64,
        cache_hit: false,
    });
    Ok((report, text))
}

struct Outcome {
    algebra: Option<AlgebraDescriptor>,
    result: Value,
    checks: Vec<Check>,
}

fn kmodule(config: &RunConfig) -> Result<Outcome> {
    let name = config.algebra.as_deref().unwrap_or_default();
    let (rho, descriptor) = catalog::representation(name, config.node.unwrap_or(1))?;
    let report = is_ricci_type(&rho);
    Ok(Outcome {
        algebra: Some(descriptor),
        result: serde_json::to_value(report).expect("serializable"),
        checks: Vec::new(),
    })
}

fn prolong(config: &RunConfig) -> Result<Outcome> {
    let name = config.algebra.as_deref().unwrap_or_default();
    let (rho, descriptor) = catalog::representation(name, config.node.unwrap_or(1))?;
    let g1 = prolongation(&rho);
    let k = curvature_module(&rho);
    let spencer_rank = spencer_differential(&rho, &g1).rank();
    Ok(Outcome {
        algebra: Some(descriptor),
        result: json!({
            "dim_prolongation": g1.dim(),
            "dim_K": k.dim(),
            "spencer_image_rank": spencer_rank,
            "dim_spencer_h12": k.dim() - spencer_rank,
        }),
        checks: Vec::new(),
    })
}

fn kostant_totals(r: &RootSystem, node: usize, k: usize) -> Result<[u64; 3]> {
    let mut out = [0; 3];
    for c in kostant_h(r, node, k)? {
        out[(c.located_in.value_degree() + 1) as usize] += c.dimension;
    }
    Ok(out)
}

fn cohomology(config: &RunConfig, mode: &RankMode) -> Result<Outcome> {
    let name = config.algebra.as_deref().unwrap_or_default();
    let node = config.node.unwrap_or(1);
    let k = config.degree.unwrap_or_default();
    let (letter, rank) = catalog::chevalley_type(name).ok_or_else(|| {
        if catalog::representation(name, node).is_ok() {
            CliError::Usage(format!(
                "cohomology needs a graded algebra such as e6-chevalley, not `{name}`"
            ))
        } else {
            CliError::UnknownAlgebra(name.to_string())
        }
    })?;
    let g = catalog::graded(name, node)?;
    let dims = lie_cohomology_dim(&g, k, mode)?;
    let predicted = kostant_totals(&build_root_system(letter, rank)?, node, k)?;
    let mut checks = Vec::new();
    for (i, j) in (-1i8..=1).enumerate() {
        let located = LocatedIn::from_value_degree(j as i64).expect("degree in range");
        checks.push(Check::new(
            &format!("kostant agrees on {}", located.label(k)),
            predicted[i],
            dims.by_value_degree[&j] as u64,
        ));
    }
    Ok(Outcome {
        algebra: Some(catalog::graded_descriptor(name, &g)),
        result: serde_json::to_value(&dims).expect("serializable"),
        checks,
    })
}

fn parse_type(t: &str) -> Result<(char, usize)> {
    let mut chars = t.chars();
    let letter = chars
        .next()
        .map(|c| c.to_ascii_uppercase())
        .ok_or_else(|| CliError::Usage("empty --type".into()))?;
    let rank = chars
        .as_str()
        .parse()
        .map_err(|_| CliError::Usage(format!("--type must look like E6, got `{t}`")))?;
    Ok((letter, rank))
}

fn kostant(config: &RunConfig) -> Result<Outcome> {
    let t = config.root_type.as_deref().unwrap_or_default();
    let (letter, rank) = parse_type(t)?;
    let r = build_root_system(letter, rank)?;
    let node = config.node.unwrap_or(1);
    let k = config.degree.unwrap_or_default();
    let components = kostant_h(&r, node, k)?;
    let list: Vec<Value> = components
        .iter()
        .map(|c| {
            json!({
                "word": c.w.bourbaki_word(),
                "weight": c.weight.coords(),
                "homogeneity": c.homogeneity,
                "located_in": c.located_in.label(k),
                "dimension": c.dimension,
            })
        })
        .collect();
    let total: u64 = components.iter().map(|c| c.dimension).sum();
    let positive = r.positive_roots().len();
    let upper = r.positive_roots().iter().filter(|b| b[node - 1] != 0).count();
    Ok(Outcome {
        algebra: Some(AlgebraDescriptor {
            name: r.label().to_string(),
            dim: rank + 2 * positive,
            rep_dim: upper,
        }),
        result: json!({ "degree": k, "components": list, "total_dimension": total }),
        checks: Vec::new(),
    })
}

fn export(config: &RunConfig) -> Result<(Outcome, String)> {
    let name = config.algebra.as_deref().unwrap_or_default();
    let node = config.node.unwrap_or(1);
    let matrix_name = config.matrix.as_deref().unwrap_or_default();
    let (m, descriptor): (QMatrix, AlgebraDescriptor) = match matrix_name {
        "bianchi" | "ricci_trace" => {
            let (rho, d) = catalog::representation(name, node)?;
            let m = if matrix_name == "bianchi" {
                bianchi_matrix(&rho)
            } else {
                ricci_trace_matrix(&rho)
            };
            (m, d)
        }
        _ => {
            if catalog::chevalley_type(name).is_none() {
                return Err(match catalog::representation(name, node) {
                    Ok(_) => CliError::Usage(format!(
                        "{matrix_name} needs a graded algebra such as e6-chevalley"
                    )),
                    Err(e) => e,
                });
            }
            let g = catalog::graded(name, node)?;
            let m = match matrix_name {
                "dlie-k0" => lie_cochain_differential(&g, 0),
                "dlie-k1" => lie_cochain_differential(&g, 1),
                "dlie-k2" => lie_cochain_differential(&g, 2),
                _ => tr_circ_dlie(&g)?,
            };
            (m, catalog::graded_descriptor(name, &g))
        }
    };
    let text = m.to_text();
    let outcome = Outcome {
        algebra: Some(descriptor),
        result: json!({
            "matrix": matrix_name,
            "nrows": m.nrows(),
            "ncols": m.ncols(),
            "nnz": m.nnz(),
            "sha256": cache::key(&text),
        }),
        checks: Vec::new(),
    };
    Ok((outcome, text))
}

fn rational(c: &Rational) -> String {
    c.to_string()
}

fn is_unit(c: &Rational) -> bool {
    *c == Rational::from_integer(1.into()) || *c == Rational::from_integer((-1).into())
}

/// The whole pipeline for `ℂ⊕𝔰𝔭𝔦𝔫(10)` on a half-spinor, cross-checked against
/// the grading of `𝔢₆` at `node` (1 or 6).
fn spin10(node: usize) -> Result<Outcome> {
    let algebra = if node == 6 {
        "spin10c-center-odd"
    } else {
        "spin10c-center"
    };
    let (rho, descriptor) = catalog::representation(algebra, node)?;
    let fock = is_ricci_type(&rho);

    let g = catalog::graded("e6-chevalley", node)?;
    let (minus, zero, plus) = g.component_dims();
    let graded_rep: Representation = component_rep(&g, -1)?;
    let graded_k = curvature_module(&graded_rep).dim();
    let graded_verdict = is_ricci_type(&graded_rep);
    let prop1 = verify_prop1(&g)?;
    let homogeneous = verify_homogeneity(&g);
    let image = image_decomposition(&g)?;
    let composite = tr_circ_dlie(&g)?;
    let composite_rank = composite.rank();
    let e6 = build_root_system('E', 6)?;
    let h2 = kostant_h(&e6, node, 2)?;
    let h2_in_g0 = lie_cohomology_component(&g, 2, 0, &RankMode::Exact)?;
    let n = rho.dim();

    let checks = vec![
        Check::new("prolongation vanishes", 0, fock.dim_prolongation),
        Check::new("dim K", 256, fock.dim_K),
        Check::new("ricci type", true, fock.ricci_type),
        Check::new("grading of e6 is (16, 46, 16)", [16, 46, 16], [minus, zero, plus]),
        Check::new("dim K agrees between constructions", fock.dim_K, graded_k),
        Check::new(
            "ricci verdict agrees between constructions",
            fock.ricci_type,
            graded_verdict.ricci_type,
        ),
        Check::new("d_Lie = c * Bianchi with |c| = 1", true, is_unit(&prop1)),
        Check::new("homogeneity", true, homogeneous),
        Check::new("t_R o d_Lie is invertible", n * n, composite_rank),
        Check::new("K equals the image of d_Lie on V*xV*", true, image.equals_kernel),
        Check::new(
            "H^2 lies in wedge^2 V* x V",
            vec!["∧^2V*⊗V".to_string()],
            h2.iter().map(|c| c.located_in.label(2)).collect::<Vec<_>>(),
        ),
        Check::new("H^2 meets wedge^2 V* x g0 trivially", 0, h2_in_g0),
    ];
    let result = json!({
        "curvature": fock,
        "e6": {
            "node": node,
            "grading": [minus, zero, plus],
            "dim_K": graded_k,
            "ricci_type": graded_verdict.ricci_type,
            "dim_prolongation": graded_verdict.dim_prolongation,
            "dlie_bianchi_constant": rational(&prop1),
            "homogeneity": homogeneous,
            "image": image,
            "tr_circ_dlie": { "nrows": composite.nrows(), "ncols": composite.ncols(), "nnz": composite.nnz(), "rank": composite_rank },
            "h2_in_wedge2_g0": h2_in_g0,
            "kostant_h2": h2.iter().map(|c| json!({
                "word": c.w.bourbaki_word(),
                "weight": c.weight.coords(),
                "homogeneity": c.homogeneity,
                "located_in": c.located_in.label(2),
                "dimension": c.dimension,
            })).collect::<Vec<_>>(),
        },
    });
    Ok(Outcome {
        algebra: Some(descriptor),
        result,
        checks,
    })
}
