//! `grid-minors` — generators, extractors, verifiers, oracles, and
//! threshold calculators for grid-minor certificates.
//!
//! Exit codes: 0 success, 2 validation or precondition failure (with a
//! one-line JSON error object on standard error), 3 trials exhausted,
//! 64 unknown command. Every run emits a manifest recording the command,
//! flags, seed, input digests, output paths, wall clock, and outcome.

mod commands;
mod manifest;

use clap::error::ErrorKind;
use clap::Parser;
use grid_minors::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "grid-minors",
    version,
    about = "Verified grid-minor certificates: generation, extraction, checking."
)]
struct Cli {
    /// Where to write the run manifest (default: next to the first output
    /// file, or one line on standard error when nothing is written).
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: commands::Cmd,
}

fn main() -> ExitCode {
    let started = std::time::Instant::now();
    let flags: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => return parse_failure(e),
    };
    let mut rec = manifest::Recorder::new(cli.command.name(), flags);
    let code = match commands::run(&cli.command, &mut rec) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", error_object(&e));
            exit_code(&e)
        }
    };
    rec.emit(cli.manifest.as_deref(), started.elapsed(), code);
    ExitCode::from(code)
}

fn parse_failure(e: clap::Error) -> ExitCode {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            print!("{e}");
            ExitCode::SUCCESS
        }
        ErrorKind::InvalidSubcommand
        | ErrorKind::UnknownArgument
        | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprint!("{e}");
            ExitCode::from(64)
        }
        _ => {
            let message = e.render().to_string();
            eprintln!(
                "{}",
                serde_json::json!({ "kind": "usage", "message": message })
            );
            ExitCode::from(2)
        }
    }
}

fn error_object(e: &Error) -> String {
    serde_json::json!({ "kind": kind(e), "message": e.to_string() }).to_string()
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TrialsExhausted { .. } => 3,
        _ => 2,
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid-argument",
        Error::EmptyGraph => "empty-graph",
        Error::VertexOutOfRange { .. } => "vertex-out-of-range",
        Error::Unreachable { .. } => "unreachable",
        Error::OverlappingParts { .. } => "overlapping-parts",
        Error::DisconnectedPart { .. } => "disconnected-part",
        Error::InvalidModel(_) => "invalid-model",
        Error::InvalidDecomposition(_) => "invalid-decomposition",
        Error::NotAGrid { .. } => "not-a-grid",
        Error::NotDivisible { .. } => "not-divisible",
        Error::DimensionTooSmall { .. } => "dimension-too-small",
        Error::RadiusExceeded { .. } => "radius-exceeded",
        Error::TrialsExhausted { .. } => "trials-exhausted",
        Error::GuaranteeZero => "guarantee-zero",
        Error::MissingAnchor { .. } => "missing-anchor",
        Error::OutDegreeExceeded { .. } => "out-degree-exceeded",
        Error::SizeLimit { .. } => "size-limit",
        Error::Defect(_) => "defect",
        Error::Parse { .. } => "parse",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}
