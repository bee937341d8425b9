use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gpss_cli::commands::{self, Output, SolveArgs, EXIT_ERROR};
use gpss_cli::suite::{parse_rational, InputFormat, ScoreMode};
use gpss_core::Algorithm;

#[derive(Parser)]
#[command(name = "gpss", version, about = "General position subset selection toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Ind,
    Inc,
    IncMin,
    Dec,
    Exact,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Ind => Algorithm::Ind,
            AlgoArg::Inc => Algorithm::Inc,
            AlgoArg::IncMin => Algorithm::IncMin,
            AlgoArg::Dec => Algorithm::Dec,
            AlgoArg::Exact => Algorithm::Exact,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run one algorithm on an instance and print the result record
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "points")]
        format: InputFormat,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Shuffle the processing order of ind/inc with this seed
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=i64::MAX as u64))]
        order_seed: Option<u64>,
        /// Node budget for the exact search
        #[arg(long)]
        budget: Option<u64>,
        /// Also run the exact oracle and report the optimum
        #[arg(long)]
        oracle: bool,
        /// Score inc-min candidates by their static collinearity count
        #[arg(long)]
        static_score: bool,
        /// Write the members as a subset file
        #[arg(long)]
        subset_out: Option<PathBuf>,
    },
    /// Check that a subset is in general position and maximal
    Verify {
        input: PathBuf,
        subset: PathBuf,
        #[arg(long, value_enum, default_value = "points")]
        format: InputFormat,
    },
    /// Run a benchmark suite
    Bench {
        config: PathBuf,
        /// Where to write the structured report
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Integer grid, row by row
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random linear hypergraph
    Hypergraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Target average degree, integer or p/q
        #[arg(long)]
        d: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
        /// Hypergraph file; metadata goes to the same path plus `.meta`
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    match cli.command {
        Command::Gen { kind } => match kind {
            GenKind::Grid { rows, cols, out } => commands::gen_grid_cmd(rows, cols, out.as_deref()),
            GenKind::Hypergraph {
                n,
                m,
                d,
                seed,
                stream,
                out,
            } => commands::gen_hypergraph_cmd(n, m, parse_rational(&d)?, seed, stream, out.as_deref()),
        },
        Command::Solve {
            input,
            format,
            algo,
            order_seed,
            budget,
            oracle,
            static_score,
            subset_out,
        } => commands::solve(&SolveArgs {
            input,
            format,
            algorithm: algo.into(),
            order_seed,
            budget,
            oracle,
            inc_min_score: if static_score {
                ScoreMode::Static
            } else {
                ScoreMode::Dynamic
            },
            subset_out,
        }),
        Command::Verify {
            input,
            subset,
            format,
        } => commands::verify(&input, format, &subset),
        Command::Bench { config, out } => commands::bench(&config, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_ERROR);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
