//! `maxdicut`: generate instances, solve them exactly, run certified cut
//! constructors and the verification suites.

mod commands;
mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use maxdicut_core::Error;

/// Exit status for a failed verification or a violated certificate.
const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "maxdicut",
    version,
    about = "Exact and certified maximum directed cuts"
)]
struct Cli {
    /// Seed for every random choice of this invocation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated instance.
    Gen {
        /// tournament, two-tournament, staircase, staircase-m, appendix,
        /// transitive, random-dag, random-digraph or random-bounded-cycle.
        family: String,
        /// Family parameters as key=value (e.g. k=3 theta=1/5).
        params: Vec<String>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Maximum dicut by exhaustive search.
    Exact {
        path: PathBuf,
        #[arg(long, default_value_t = maxdicut_core::exact::DEFAULT_EXACT_CAP)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a certified cut constructor.
    Bound {
        /// rplus, theta, coloring, bipartite, matching, path-matching, dag-block, dag or scc.
        algorithm: String,
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also sample the underlying random scheme.
        #[arg(long)]
        randomized: bool,
        #[arg(long, default_value_t = 100, requires = "randomized")]
        trials: usize,
    },
    /// Value and optimal strategies of the covering game on the transitive DAG.
    Cnu {
        nu: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => commands::gen(&family, &params, cli.seed, out.as_deref()),
        Command::Exact { path, max_n, json } => commands::exact(&path, max_n, json),
        Command::Bound {
            algorithm,
            path,
            json,
            randomized,
            trials,
        } => commands::bound(
            &algorithm,
            &path,
            json,
            randomized.then_some(trials),
            cli.seed,
        ),
        Command::Cnu { nu, json } => commands::cnu(nu, json),
        Command::Verify { suite } => suites::run(suite, cli.seed),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFICATION),
        Err(err) => {
            eprintln!("error: {err:#}");
            let too_large = err
                .chain()
                .any(|cause| matches!(cause.downcast_ref::<Error>(), Some(Error::TooLarge { .. })));
            ExitCode::from(if too_large {
                EXIT_TOO_LARGE
            } else {
                EXIT_USAGE
            })
        }
    }
}
