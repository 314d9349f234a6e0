//! `qacodes`: inspect, build, bound and search quasi-abelian codes.
//!
//! Exit status: 0 on success, 2 for bad usage or input, 3 when an
//! enumeration cap is exceeded, 4 when an internal invariant fails.

mod checks;
mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "qacodes",
    version,
    about = "Quasi-abelian codes via their concatenated structure"
)]
struct Cli {
    /// Machine-readable JSON on standard output
    #[arg(long, global = true)]
    json: bool,
    /// Run every kernel on one thread
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Field order q (a prime power)
    #[arg(long)]
    q: u64,
    /// Orders of the cyclic factors of H, e.g. 5,5
    #[arg(long, value_delimiter = ',', required = true)]
    group: Vec<u32>,
    /// Modulus of the splitting field over the prime field, lowest degree first
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the q-cyclotomic classes of H
    Classes(AlgebraArgs),
    /// Primitive idempotents and field data of F_q[H]
    Decompose(AlgebraArgs),
    /// Build a QA code from a constituent descriptor
    Construct {
        #[arg(long)]
        code: String,
        /// Write the flattened code descriptor here
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = qacodes::linear_codes::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Recover the constituents of a flattened code
    Constituents {
        /// Code descriptor over F_q
        #[arg(long)]
        code: String,
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u32>,
    },
    /// Concatenation lower bound on the minimum distance
    Bound {
        /// QA descriptor
        #[arg(long, conflicts_with = "predict", required_unless_present = "predict")]
        code: Option<String>,
        /// Claimed component parameters (see README)
        #[arg(long)]
        predict: Option<String>,
        #[arg(long, default_value_t = qacodes::linear_codes::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Exact minimum distance and weight distribution
    Distance {
        /// Code descriptor
        #[arg(long)]
        code: String,
        #[arg(long, default_value_t = qacodes::linear_codes::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Exhaustive search for QA codes of distance at least dmin
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        group: Vec<u32>,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        dmin: usize,
        /// Keep only codes of this dimension
        #[arg(long)]
        dim: Option<usize>,
        /// Keep only direct sums of this many outer codes
        #[arg(long)]
        outer_codes: Option<usize>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = qacodes::linear_codes::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
        #[arg(long, default_value_t = 50_000_000)]
        max_candidates: u64,
    },
    /// Family members E_i = F_q[C_p x C_p] e_0 □ F_i
    Family {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u32,
        /// JSON list of outer code descriptors over F_q; defaults to every
        /// LCD code up to --max-length
        #[arg(long)]
        outer: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        /// Require every outer code to be LCD
        #[arg(long)]
        lcd: bool,
        /// CSV report path; standard output if absent
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = qacodes::linear_codes::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Reproduce the reference codes and run the identity suites
    #[command(name = "verify-paper")]
    Reproduce {
        #[arg(long, default_value_t = checks::DEFAULT_SEED)]
        seed: u64,
        /// Random samples per identity check
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use qacodes::Error;
    if err.downcast_ref::<checks::Failed>().is_some() {
        return 4;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => 3,
        Some(Error::Invariant(_)) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
