//! `prodstate` — classify 2-qubit term sets, compile reduction gadgets,
//! run heuristic solvers and brute-force oracles, and verify the geometry
//! bounds, all with reproducible JSON output.
//!
//! Every command embeds its full effective configuration (including the
//! seed) in the emitted JSON, so re-running a saved configuration
//! reproduces the output byte for byte. Exit codes: 0 success, 2 usage
//! error, 3 domain error (the error name is printed as JSON on stderr).

mod commands;
mod output;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "prodstate", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the complexity of a 2-qubit term set.
    Classify(commands::ClassifyArgs),
    /// Compile a reduction into a graph or Hamiltonian artifact.
    Compile(commands::CompileArgs),
    /// Run a heuristic solver on a cut objective or Hamiltonian.
    Solve(commands::SolveArgs),
    /// Brute-force oracles: exact Max-Cut, 3-coloring, or grid search.
    Oracle(commands::OracleArgs),
    /// Sample-and-check the inscribed-simplex geometry bounds.
    VerifyGeometry(commands::VerifyGeometryArgs),
    /// Compile, solve, decode, and compare against the brute-force oracle.
    Roundtrip(commands::RoundtripArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify(args) => commands::classify(args),
        Command::Compile(args) => commands::compile(args),
        Command::Solve(args) => commands::solve(args),
        Command::Oracle(args) => commands::oracle(args),
        Command::VerifyGeometry(args) => commands::verify_geometry(args),
        Command::Roundtrip(args) => commands::roundtrip(args),
    };
    match result {
        Ok(()) => {}
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(2);
        }
        Err(commands::CliError::Domain(err)) => {
            let msg = serde_json::json!({
                "error": err.code(),
                "message": err.to_string(),
            });
            eprintln!("{msg}");
            std::process::exit(3);
        }
    }
}
