//! File formats and the batch driver for `kktheory-core`.

pub mod groups;
pub mod input;
pub mod report;
pub mod text;

use std::io::Write;
use std::path::PathBuf;

use kktheory_core::spectral::SpectralError;

pub use input::{parse_spec, ParseError};
pub use report::{build_report, Options, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub input: PathBuf,
    pub format: Format,
    pub options: Options,
}

fn exit_code(e: &SpectralError) -> i32 {
    if e.is_validation() {
        EXIT_INPUT
    } else if e.is_bound() {
        EXIT_BOUND
    } else {
        EXIT_COMPUTATION
    }
}

fn diagnostic(name: &str, message: &str) -> String {
    if message.starts_with(name) {
        format!("error: {message}")
    } else {
        format!("error: {name}: {message}")
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text::render(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is plain data");
            s.push('\n');
            s
        }
    }
}

/// Runs one job and returns the process exit status. The report goes to
/// `out`, diagnostics to `err`.
pub fn run(config: &JobConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(&config.input) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: ParseError: cannot read {}: {e}", config.input.display());
            return EXIT_INPUT;
        }
    };
    let spec = match parse_spec(&text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let report = match build_report(&spec, &config.options) {
        Ok(r) => r,
        Err(report::Fatal(e)) => {
            let _ = writeln!(err, "{}", diagnostic(e.name(), &e.to_string()));
            return exit_code(&e);
        }
    };
    let _ = out.write_all(render(&report, config.format).as_bytes());
    match &report.error {
        None => EXIT_OK,
        Some(info) => {
            let _ = writeln!(err, "{}", diagnostic(&info.name, &info.message));
            if info.name == "BoundExceeded" {
                EXIT_BOUND
            } else {
                EXIT_COMPUTATION
            }
        }
    }
}
