//! `t0enum`: tables, b-file sequences and formula-vs-oracle verification
//! for labelled hypergraph counts.
//!
//! Exit codes: 0 ok, 1 mismatch, 2 bad arguments, 3 unknown or oracle-only
//! class, 4 oracle budget exceeded.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::{Outcome, EXIT_USAGE};

fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Table(a) => commands::table(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Verify(a) => commands::verify(a),
        Command::Sequence(a) => commands::sequence(a),
        Command::EgfCheck(a) => commands::egf_check(a),
        Command::Manifest(a) => commands::manifest(a),
    };
    result.unwrap_or_else(|e| e)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    if !outcome.stderr.is_empty() {
        eprintln!("error: {}", outcome.stderr);
    }
    ExitCode::from(outcome.code)
}
