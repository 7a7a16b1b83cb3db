use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use yangian_core::glrep::{Partition, SIZE_BOUND_ENV};
use yangian_core::report::{self, Params, Report, Suite};

#[derive(Parser)]
#[command(name = "yangian", version, about = "Exact checks for quantum minors and elementary Yangian modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an identity suite: sylvester, comatrix, minors, rtt, centralizer, transvector.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        flags: Flags,
    },
    /// Highest weight and Drinfeld polynomials of L(λ)^+_μ (no module is built).
    Drinfeld {
        #[command(flatten)]
        flags: Flags,
    },
    /// Skew-diagram data and ζ; with --full, the module-level checks.
    Elementary {
        #[command(flatten)]
        flags: Flags,
    },
    /// Eigenvalue of the quantum determinant on L(λ).
    Capelli {
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args)]
struct Flags {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long)]
    full: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Bound on ambient coordinates N^|λ| for module construction.
    #[arg(long, env = SIZE_BOUND_ENV)]
    max_size: Option<u128>,
}

impl From<Flags> for Params {
    fn from(f: Flags) -> Self {
        Params {
            m: f.m,
            n: f.n,
            s: f.s,
            lambda: f.lambda,
            mu: f.mu,
            full: f.full,
            seed: f.seed,
            max_size: f.max_size,
        }
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: yangian_core::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result) = match cli.command {
        Command::Verify { suite, flags } => (format!("verify {}", suite.name()), report::run_verify(suite, &flags.into())),
        Command::Drinfeld { flags } => ("drinfeld".to_string(), report::run_drinfeld(&flags.into())),
        Command::Elementary { flags } => ("elementary".to_string(), report::run_elementary(&flags.into())),
        Command::Capelli { flags } => ("capelli".to_string(), report::run_capelli(&flags.into())),
    };
    match result {
        Ok(r) => finish(&r),
        Err(e) => {
            let code = report::error_exit_code(&e);
            println!("{}", json!({ "command": name, "ok": false, "error": e.to_string() }));
            eprintln!("{name}: {e}");
            if matches!(e, yangian_core::Error::SizeGuard { .. }) {
                eprintln!("hint: drop --full or raise --max-size");
            }
            ExitCode::from(code as u8)
        }
    }
}

fn finish(r: &Report) -> ExitCode {
    println!("{}", r.to_json());
    eprintln!("{}", r.summary());
    ExitCode::from(r.exit_code() as u8)
}
