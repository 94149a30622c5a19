//! Command-line front end for `casimir-core`.
//!
//! [`run`] is the whole program minus process exit, so it can be driven
//! from tests with in-memory streams.

// NaN must fail validation, so `!(x > 0.0)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod record;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use casimir_core::Tolerances;
use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::error::{exit, CliError};
use crate::record::{Format, RunRecord};

/// Evaluate one non-sweep, non-verify subcommand.
pub fn evaluate(command: &Command) -> Result<RunRecord, CliError> {
    match command {
        Command::RindlerForce(a) => commands::rindler_force(a),
        Command::RindlerEnergy(a) => commands::rindler_energy(a),
        Command::DesitterForce(a) => commands::desitter_force(a),
        Command::FlrwCurvature(a) => commands::flrw_curvature(a),
        Command::AnomalyTrace(a) => commands::anomaly_trace(a),
        Command::Sweep(_) | Command::Verify => {
            Err(CliError::Usage(format!("`{}` is not a single evaluation", command.name())))
        }
    }
}

fn format_of(cli: &Cli) -> Result<Format, CliError> {
    match (cli.json, cli.csv) {
        (true, true) => Err(CliError::Usage("--json and --csv are mutually exclusive".into())),
        (true, false) => Ok(Format::Json),
        (false, true) => Ok(Format::Csv),
        (false, false) => Ok(Format::Text),
    }
}

/// Rendered output plus whether verification failed.
struct Rendered {
    body: String,
    verification_failure: Option<CliError>,
}

fn execute(cli: &Cli, format: Format) -> Result<Rendered, CliError> {
    let ok = |body| Rendered { body, verification_failure: None };
    match &cli.command {
        Command::Sweep(args) => {
            let records = sweep::run(args, evaluate)?;
            Ok(ok(record::render_records(&records, format, true)?))
        }
        Command::Verify => {
            let tol = match cli.tol {
                Some(t) if !(t > 0.0 && t.is_finite()) => {
                    return Err(CliError::Usage(format!("--tol must be positive and finite, got {t}")))
                }
                Some(t) => Tolerances::uniform(t),
                None => Tolerances::DEFAULT,
            };
            let report = verify::run(&tol, cli.tol);
            let body = match format {
                Format::Text => verify::render_text(&report),
                Format::Json => record::render_json(&report)?,
                Format::Csv => verify::render_csv(&report)?,
            };
            let failure = (!report.all_passed())
                .then_some(CliError::Verification { failed: report.failed, total: report.checks.len() });
            Ok(Rendered { body, verification_failure: failure })
        }
        other => {
            let rec = evaluate(other)?;
            Ok(ok(record::render_records(std::slice::from_ref(&rec), format, false)?))
        }
    }
}

fn report_error(err: &CliError, format: Format, stderr: &mut dyn Write) {
    let _ = match format {
        Format::Json => writeln!(
            stderr,
            "{}",
            serde_json::to_string(&serde_json::json!({ "error": err.report() })).unwrap_or_default()
        ),
        _ => writeln!(stderr, "error[{}]: {}", err.kind(), err),
    };
}

/// Run the program on `args` (including `argv[0]`) and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let wants_json = args.iter().any(|a| a == "--json");
    let early_format = if wants_json { Format::Json } else { Format::Text };
    let args = match config::expand(args) {
        Ok(a) => a,
        Err(e) => {
            report_error(&e, early_format, stderr);
            return e.exit_code();
        }
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    exit::SUCCESS
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    exit::VALIDATION
                }
            };
        }
    };
    let format = match format_of(&cli) {
        Ok(f) => f,
        Err(e) => {
            report_error(&e, early_format, stderr);
            return e.exit_code();
        }
    };
    let rendered = match execute(&cli, format) {
        Ok(r) => r,
        Err(e) => {
            report_error(&e, format, stderr);
            return e.exit_code();
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &rendered.body),
        None => {
            if format == Format::Text && !cli.quiet && !matches!(cli.command, Command::Sweep(_)) {
                let _ = writeln!(stdout, "{}", record::UNITS_BANNER);
            }
            stdout.write_all(rendered.body.as_bytes())
        }
    };
    if let Err(e) = written {
        let e = CliError::Io(e);
        report_error(&e, format, stderr);
        return e.exit_code();
    }
    match rendered.verification_failure {
        Some(e) => {
            report_error(&e, format, stderr);
            e.exit_code()
        }
        None => exit::SUCCESS,
    }
}
