use std::process::ExitCode;

use clap::{Parser, Subcommand};

use radon_cli::config::{Flags, RunConfig, Suite};

/// Numerical verification of Radon-type transforms over p-adic, real and
/// complex spaces.
#[derive(Parser)]
#[command(name = "radon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact p-adic identities: round trip, Fourier, Černov, structural
    Padic(Flags),
    /// Real Mellin formula, reciprocity, round trip and zonal kernels
    Real(Flags),
    /// The complex analogues for bidegrees (p, q)
    Complex(Flags),
    /// Planar zero component and polar duality
    Support(Flags),
    /// Mellin transforms of the kernels, formula against quadrature
    MellinTable(Flags),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (suite, flags) = match cli.command {
        Command::Padic(f) => (Suite::Padic, f),
        Command::Real(f) => (Suite::Real, f),
        Command::Complex(f) => (Suite::Complex, f),
        Command::Support(f) => (Suite::Support, f),
        Command::MellinTable(f) => (Suite::MellinTable, f),
    };
    let cfg = match RunConfig::resolve(suite, &flags) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match radon_cli::run(&cfg) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("FAIL {failure}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
