use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use holonomy_cli::{export_matrix, run, Cli, Verb};

fn main() -> ExitCode {
    let config = Cli::parse().into_config();
    let outcome = if config.verb == Verb::ExportMatrix && config.out.is_none() {
        export_matrix(&config).map(|(report, text)| (report, Some(text)))
    } else {
        run(&config).map(|report| (report, None))
    };
    let (report, text) = match outcome {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match (text, &config.out) {
        (Some(text), _) => std::io::stdout().write_all(text.as_bytes()),
        (None, Some(out)) if config.verb != Verb::ExportMatrix => std::fs::write(out, report.to_json()),
        _ => std::io::stdout().write_all(report.to_json().as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    for check in report.failed_checks() {
        eprintln!(
            "check failed: {} (expected {}, observed {})",
            check.name, check.expected, check.observed
        );
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
