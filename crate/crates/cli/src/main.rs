use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use momentcut::commands::{EXIT_INPUT, EXIT_OK};
use momentcut::{Command, JobSpec, Options, DEFAULT_MAX_RANK};
use momentcut_core::Rat;

#[derive(Parser)]
#[command(name = "momentcut", version, about = "Exact multifold cuts of Delzant polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct Common {
    /// Job file in JSON.
    spec: PathBuf,
    /// Height of the top hyperplane, e.g. 5/2.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    a: Option<Rat>,
    /// Write a figure.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Also write the report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check that every vertex is smooth.
    CheckDelzant(Common),
    /// List the pieces cut out by the cutting data.
    Subdivide(Common),
    /// Decide quasi-regularity by both criteria.
    CheckRegular(Common),
    /// Build the lifted polytope, its fan and fibration data.
    Lift(Common),
    /// Degrees of the walls of a planar subdivision.
    Degrees(Common),
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|e| format!("invalid rational {s:?}: {e}"))
}

fn max_rank() -> Result<usize, String> {
    match std::env::var("MOMENTCUT_MAX_RANK") {
        Err(_) => Ok(DEFAULT_MAX_RANK),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("MOMENTCUT_MAX_RANK: not a number: {v:?}")),
    }
}

fn input_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match cli.command {
        Cmd::CheckDelzant(c) => (Command::CheckDelzant, c),
        Cmd::Subdivide(c) => (Command::Subdivide, c),
        Cmd::CheckRegular(c) => (Command::CheckRegular, c),
        Cmd::Lift(c) => (Command::Lift, c),
        Cmd::Degrees(c) => (Command::Degrees, c),
    };
    let max_rank = match max_rank() {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let text = match std::fs::read_to_string(&args.spec) {
        Ok(t) => t,
        Err(e) => return input_error(format_args!("{}: {e}", args.spec.display())),
    };
    let job = match JobSpec::parse(&text) {
        Ok(j) => j,
        Err(e) => return input_error(e),
    };
    let opts = Options {
        a: args.a,
        svg: args.svg.is_some(),
        max_rank,
    };
    let outcome = match momentcut::run(command, &job, &opts) {
        Ok(o) => o,
        Err(e) => return input_error(e),
    };

    let report = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    if let Err(e) = writeln!(std::io::stdout().lock(), "{report}") {
        // A closed pipe just means the reader has seen enough.
        if e.kind() != ErrorKind::BrokenPipe {
            return input_error(format_args!("stdout: {e}"));
        }
    }
    eprintln!("{}", outcome.summary);
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, format!("{report}\n")) {
            return input_error(format_args!("{}: {e}", path.display()));
        }
    }
    if let (Some(path), Some(svg)) = (&args.svg, &outcome.svg) {
        if let Err(e) = std::fs::write(path, svg) {
            return input_error(format_args!("{}: {e}", path.display()));
        }
    }
    if outcome.exit == EXIT_OK {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(outcome.exit)
    }
}
