use std::io;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use radon_core::harness::commands::{self, parse_dims, Algorithm};
use radon_core::harness::fuzz::{FuzzConfig, DEFAULT_BOUND};

/// Exact Radon partitions: generate instances, compute certificates,
/// cross-verify against brute force, fuzz.
#[derive(Parser)]
#[command(name = "radon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Recursive,
    Algebraic,
}

#[derive(Subcommand)]
enum Command {
    /// Print a random general-position instance of d + 2 points.
    Gen {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Print the Radon certificate of an instance file.
    Compute {
        #[arg(long, value_enum)]
        algo: Algo,
        file: PathBuf,
    },
    /// Run both algorithms and the oracle; exit 0 iff they agree on a unique partition.
    Verify { file: PathBuf },
    /// Generate and verify many instances per dimension.
    Fuzz {
        /// Dimension range, e.g. 1..6 (inclusive).
        #[arg(long, value_parser = parse_dims)]
        dims: RangeInclusive<usize>,
        #[arg(long)]
        instances: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = match cli.command {
        Command::Gen { dim, seed, bound } => commands::cmd_gen(dim, seed, bound, &mut out, &mut err),
        Command::Compute { algo, file } => {
            let algo = match algo {
                Algo::Recursive => Algorithm::Recursive,
                Algo::Algebraic => Algorithm::Algebraic,
            };
            commands::cmd_compute(&file, algo, &mut out, &mut err)
        }
        Command::Verify { file } => commands::cmd_verify(&file, &mut out, &mut err),
        Command::Fuzz { dims, instances, seed, bound, inject_fault } => {
            let cfg = FuzzConfig { bound, inject_fault, ..FuzzConfig::new(dims, instances, seed) };
            commands::cmd_fuzz(&cfg, &mut out, &mut err)
        }
    };
    ExitCode::from(code)
}
