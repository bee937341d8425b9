//! Subcommand implementations. Each returns what should go to standard output
//! together with the process exit status.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use gpss_core::algorithms::{self, verify_general_position, AlgoError, Verdict};
use gpss_core::generator::{gen_grid, gen_linear_hypergraph, GenParams};
use gpss_core::{io, Algorithm, Order, Rational};

use crate::bench::{render_table, run_suite, DEFAULT_EXACT_BUDGET};
use crate::record::{generator_metadata, ResultRecord};
use crate::suite::{load_instance, InputFormat, ScoreMode, SuiteConfig};

pub const EXIT_OK: u8 = 0;
/// `verify` found three members on one edge.
pub const EXIT_VIOLATION: u8 = 1;
/// Bad input, bad parameters or I/O failure.
pub const EXIT_ERROR: u8 = 2;
/// `verify` found a general-position set that is not maximal.
pub const EXIT_NOT_MAXIMAL: u8 = 3;

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

#[derive(Debug, Clone)]
pub struct SolveArgs {
    pub input: PathBuf,
    pub format: InputFormat,
    pub algorithm: Algorithm,
    pub order_seed: Option<u64>,
    pub budget: Option<u64>,
    /// Also run the exact oracle and report the optimum.
    pub oracle: bool,
    pub inc_min_score: ScoreMode,
    pub subset_out: Option<PathBuf>,
}

pub fn solve(args: &SolveArgs) -> Result<Output> {
    let h = load_instance(&args.input, args.format)?;
    let order = match args.order_seed {
        Some(seed) => Order::shuffled(h.n(), seed),
        None => Order::input(h.n()),
    };
    let budget = args.budget.unwrap_or(DEFAULT_EXACT_BUDGET);

    let mut independent_size = None;
    let mut exact_info = None;
    let subset = match args.algorithm {
        Algorithm::Ind => {
            let trace = algorithms::ind_traced(&h, &order)?;
            independent_size = Some(trace.independent.len());
            trace.result
        }
        Algorithm::Inc => algorithms::inc(&h, &order)?,
        Algorithm::IncMin => algorithms::inc_min_with(&h, args.inc_min_score.into()),
        Algorithm::Dec => algorithms::dec(&h),
        Algorithm::Exact => match algorithms::exact(&h, budget) {
            Ok(r) => {
                exact_info = Some((Some(r.optimum), r.nodes_explored));
                r.witness
            }
            Err(AlgoError::BudgetExhausted {
                incumbent,
                nodes_explored,
            }) => {
                exact_info = Some((None, nodes_explored));
                incumbent
            }
            Err(e) => return Err(e.into()),
        },
        Algorithm::Extend => anyhow::bail!("`extend` is not a standalone algorithm"),
    };

    let verdict = verify_general_position(&h, &subset.members)?;
    let mut record = ResultRecord::new(
        args.input.display().to_string(),
        args.format,
        &h,
        args.algorithm.label(),
        subset.members.clone(),
        &verdict,
    );
    record.order_seed = match args.algorithm {
        Algorithm::Ind | Algorithm::Inc => order.seed(),
        _ => None,
    };
    record.independent_size = independent_size;
    if let Some((optimum, nodes)) = exact_info {
        record.optimum = optimum;
        record.optimal = Some(optimum.is_some());
        record.budget_exhausted = Some(optimum.is_none());
        record.nodes_explored = Some(nodes);
    } else if args.oracle {
        match algorithms::exact(&h, budget) {
            Ok(r) => record.optimum = Some(r.optimum),
            Err(AlgoError::BudgetExhausted { .. }) => record.budget_exhausted = Some(true),
            Err(e) => return Err(e.into()),
        }
    }
    if let Some(path) = &args.subset_out {
        write_file(path, &io::write_subset(&subset.members))?;
    }
    Ok(Output::ok(record.to_toml()))
}

pub fn verify(input: &Path, format: InputFormat, subset: &Path) -> Result<Output> {
    let h = load_instance(input, format)?;
    let text = fs::read_to_string(subset).with_context(|| format!("reading {}", subset.display()))?;
    let members = io::parse_subset(&text).with_context(|| format!("in {}", subset.display()))?;
    let verdict = verify_general_position(&h, &members)?;
    let code = match verdict {
        Verdict::OkAndMaximal => EXIT_OK,
        Verdict::Ok => EXIT_NOT_MAXIMAL,
        Verdict::Violation { .. } => EXIT_VIOLATION,
    };
    Ok(Output {
        stdout: format!("{verdict}\n"),
        code,
    })
}

pub fn gen_grid_cmd(rows: usize, cols: usize, out: Option<&Path>) -> Result<Output> {
    let text = io::write_points(&gen_grid(rows, cols)?);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

/// Writes the hypergraph to `out` and its metadata to `out` with `.meta`
/// appended; without `out` the hypergraph goes to standard output and no
/// metadata is written.
pub fn gen_hypergraph_cmd(
    n: usize,
    m: usize,
    d: Rational,
    seed: u64,
    stream: u64,
    out: Option<&Path>,
) -> Result<Output> {
    let params = GenParams::new(n, m, d, seed).with_stream(stream);
    let outcome = gen_linear_hypergraph(&params)?;
    let text = io::write_hypergraph(&outcome.hypergraph);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            let mut meta = path.as_os_str().to_owned();
            meta.push(".meta");
            write_file(Path::new(&meta), &generator_metadata(&params, &outcome))?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(text)),
    }
}

/// Runs a suite, prints the table and writes the structured report to `out`
/// (or the config's `output`, resolved against the config's directory).
pub fn bench(config_path: &Path, out: Option<&Path>) -> Result<Output> {
    let config = SuiteConfig::load(config_path)?;
    let base = config_path.parent().unwrap_or(Path::new("."));
    let report = run_suite(&config, base)?;
    let target = out
        .map(Path::to_path_buf)
        .or_else(|| config.output.as_ref().map(|p| base.join(p)));
    if let Some(path) = target {
        write_file(&path, &report.to_toml()?)?;
    }
    Ok(Output::ok(render_table(&report)))
}
