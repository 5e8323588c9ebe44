mod args;
mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, Format, OutputArgs};
use hardy_core::HardyError;
use report::num;

const EXIT_ALPHA_EXCLUDED: u8 = 2;
const EXIT_NO_ROOT: u8 = 3;
const EXIT_DIAGNOSTIC: u8 = 4;
const EXIT_USAGE: u8 = 64;

fn exit_code(e: &HardyError) -> u8 {
    match e {
        HardyError::AlphaExcluded => EXIT_ALPHA_EXCLUDED,
        HardyError::NoRoot { .. } => EXIT_NO_ROOT,
        HardyError::InvalidInterval { .. }
        | HardyError::InvalidShell { .. }
        | HardyError::InvalidTolerance(_)
        | HardyError::InvalidGrid(_)
        | HardyError::DomainError { .. } => EXIT_USAGE,
        _ => EXIT_DIAGNOSTIC,
    }
}

fn error_object(e: &HardyError) -> Value {
    let mut v = json!({ "error": e.code(), "message": e.to_string() });
    if let HardyError::NoRoot {
        alpha,
        log_ratio,
        existence_bound,
    } = *e
    {
        v["alpha"] = num(alpha);
        v["log_ratio"] = num(log_ratio);
        v["existence_bound"] = num(existence_bound);
    }
    v
}

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Beta(a) | Command::Constants(a) => &a.output,
        Command::Eigen(a) => &a.output,
        Command::VerifyIntegral(a) | Command::VerifyDifferential(a) => &a.output,
        Command::Shell(a) => &a.output,
        Command::Sweep(a) => &a.output,
    }
}

fn emit(text: &str, out: &OutputArgs) -> std::io::Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    let start = Instant::now();
    let result = match &cli.command {
        Command::Beta(a) => commands::beta(a),
        Command::Constants(a) => commands::constants(a),
        Command::Eigen(a) => commands::eigen(a),
        Command::VerifyIntegral(a) => commands::verify_integral(a),
        Command::VerifyDifferential(a) => commands::verify_differential(a),
        Command::Shell(a) => commands::shell(a),
        Command::Sweep(a) => commands::sweep(a),
    };
    let mut outcome = match result {
        Ok(o) => o,
        Err(e) => {
            println!("{}", error_object(&e));
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    outcome.report.wall_time_ms = start.elapsed().as_millis() as u64;

    let out = output_args(&cli.command);
    let text = match (out.format, &outcome.table) {
        (Format::Json, _) => outcome.report.to_json(),
        (Format::Csv, Some(table)) => table.clone(),
        (Format::Csv, None) => outcome.report.to_csv(),
    };
    if let Err(e) = emit(&text, out) {
        println!("{}", json!({ "error": "io", "message": e.to_string() }));
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if outcome.report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DIAGNOSTIC)
    }
}
