//! Runs every algorithm of a suite on every instance and aggregates two
//! statistics per algorithm:
//!
//! * average ratio: mean over instances of `100 * size / reference`, where the
//!   reference is the largest set any algorithm found on that instance (or the
//!   oracle optimum, if configured);
//! * best count: percentage of instances on which the algorithm found a set of
//!   the largest size. Ties count for every algorithm attaining the maximum.
//!
//! Aggregates are exact rationals; the decimal columns are rounded to one
//! place.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Result};
use gpss_core::algorithms::{self, AlgoError, IncMinScore};
use gpss_core::generator::RNG_NAME;
use gpss_core::{Algorithm, GpSubset, LinearHypergraph, Order};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::suite::{Denominator, SuiteConfig};

pub const TIE_RULE: &str = "ties count as a win for every algorithm attaining the maximum";

/// Node budget for `exact` when it is listed as an algorithm and the suite sets
/// no budget.
pub const DEFAULT_EXACT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgoSummary {
    pub algorithm: String,
    /// Exact mean ratio in percent, `p/q`.
    pub avg_ratio: String,
    pub avg_ratio_percent: String,
    pub best_count: usize,
    /// Exact best-count share in percent, `p/q`.
    pub best_ratio: String,
    pub best_ratio_percent: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub id: String,
    pub n: usize,
    pub edges: usize,
    pub coll_total: usize,
    /// One entry per algorithm, in suite order.
    pub sizes: Vec<usize>,
    pub best: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimum: Option<usize>,
    #[serde(default)]
    pub oracle_exhausted: bool,
}

impl InstanceRow {
    fn reference(&self, denominator: Denominator) -> usize {
        match (denominator, self.optimum) {
            (Denominator::Oracle, Some(opt)) => opt,
            _ => self.best,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub suite: String,
    pub instance_count: usize,
    pub denominator: Denominator,
    pub tie_rule: String,
    pub rng: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_seed: Option<u64>,
    pub algorithms: Vec<String>,
    pub summary: Vec<AlgoSummary>,
    pub instances: Vec<InstanceRow>,
}

impl BenchReport {
    pub fn to_toml(&self) -> Result<String> {
        Ok(toml::to_string(self)?)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn summary_for(&self, algorithm: Algorithm) -> Option<&AlgoSummary> {
        self.summary.iter().find(|s| s.algorithm == algorithm.label())
    }
}

pub fn big_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Rounds half away from zero.
pub fn big_decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * BigRational::from_integer(scale.clone());
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let rounded = (magnitude + BigRational::new(1.into(), 2.into())).floor().to_integer();
    let int = &rounded / &scale;
    let frac = &rounded % &scale;
    let sign = if negative && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>width$}", frac = frac.to_string(), width = places as usize)
    }
}

/// Computes both statistics from the per-instance size matrix.
pub fn summarize(algorithms: &[String], rows: &[InstanceRow], denominator: Denominator) -> Vec<AlgoSummary> {
    let count = rows.len().max(1);
    algorithms
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let mut total = BigRational::zero();
            let mut best_count = 0;
            for row in rows {
                let reference = row.reference(denominator);
                total += if reference == 0 {
                    BigRational::from_integer(100.into())
                } else {
                    BigRational::new((100 * row.sizes[k]).into(), reference.into())
                };
                if row.sizes[k] == row.best {
                    best_count += 1;
                }
            }
            let avg = total / BigRational::from_integer(count.into());
            let best = BigRational::new((100 * best_count).into(), count.into());
            AlgoSummary {
                algorithm: name.clone(),
                avg_ratio: big_ratio(&avg),
                avg_ratio_percent: big_decimal(&avg, 1),
                best_count,
                best_ratio: big_ratio(&best),
                best_ratio_percent: big_decimal(&best, 1),
            }
        })
        .collect()
}

/// One algorithm on one instance. `exact` falls back to its incumbent when the
/// budget runs out.
pub fn run_algorithm(
    h: &LinearHypergraph,
    algorithm: Algorithm,
    order: &Order,
    score: IncMinScore,
    budget: u64,
) -> Result<GpSubset> {
    let out = match algorithm {
        Algorithm::Ind => algorithms::ind(h, order)?,
        Algorithm::Inc => algorithms::inc(h, order)?,
        Algorithm::IncMin => algorithms::inc_min_with(h, score),
        Algorithm::Dec => algorithms::dec(h),
        Algorithm::Exact => match algorithms::exact(h, budget) {
            Ok(r) => r.witness,
            Err(AlgoError::BudgetExhausted { incumbent, .. }) => incumbent,
            Err(e) => return Err(e.into()),
        },
        Algorithm::Extend => bail!("`extend` is not a standalone algorithm"),
    };
    Ok(out)
}

fn run_instance(
    config: &SuiteConfig,
    algorithms: &[Algorithm],
    id: String,
    h: &LinearHypergraph,
) -> Result<InstanceRow> {
    let order = match config.order_seed {
        Some(seed) => Order::shuffled(h.n(), seed),
        None => Order::input(h.n()),
    };
    let budget = config.node_budget.unwrap_or(DEFAULT_EXACT_BUDGET);
    let mut sizes = Vec::with_capacity(algorithms.len());
    for &a in algorithms {
        let out = run_algorithm(h, a, &order, config.inc_min_score.into(), budget)?;
        if !h.is_general_position(&out.members) {
            bail!("{a} returned a set that is not in general position on {id}");
        }
        sizes.push(out.size());
    }
    let (optimum, oracle_exhausted) = match config.node_budget {
        Some(budget) if h.n() <= config.oracle_max_n => match algorithms::exact(h, budget) {
            Ok(r) => (Some(r.optimum), false),
            Err(AlgoError::BudgetExhausted { .. }) => (None, true),
            Err(e) => return Err(e.into()),
        },
        _ => (None, false),
    };
    Ok(InstanceRow {
        id,
        n: h.n(),
        edges: h.edges().len(),
        coll_total: h.coll_stats().coll_total,
        best: sizes.iter().copied().max().unwrap_or(0),
        sizes,
        optimum,
        oracle_exhausted,
    })
}

/// Instances run in parallel; rows keep suite order.
pub fn run_suite(config: &SuiteConfig, base_dir: &Path) -> Result<BenchReport> {
    let algorithms = config.algorithm_list()?;
    let specs = config.expand();
    let rows = specs
        .par_iter()
        .map(|spec| {
            let h = spec.build(base_dir)?;
            run_instance(config, &algorithms, spec.id(), &h)
        })
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = algorithms.iter().map(|a| a.label().to_string()).collect();
    Ok(BenchReport {
        suite: config.name.clone(),
        instance_count: rows.len(),
        denominator: config.denominator,
        tie_rule: TIE_RULE.to_string(),
        rng: RNG_NAME.to_string(),
        order_seed: config.order_seed,
        summary: summarize(&names, &rows, config.denominator),
        algorithms: names,
        instances: rows,
    })
}

pub fn render_table(report: &BenchReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "suite {} ({} instances, ratios against {})",
        report.suite,
        report.instance_count,
        match report.denominator {
            Denominator::Best => "largest reported set",
            Denominator::Oracle => "oracle optimum where known",
        }
    )
    .unwrap();
    writeln!(out, "{:<10} {:>16} {:>16}", "algorithm", "avg ratio (%)", "best count (%)").unwrap();
    for s in &report.summary {
        writeln!(
            out,
            "{:<10} {:>16} {:>16}",
            s.algorithm, s.avg_ratio_percent, s.best_ratio_percent
        )
        .unwrap();
    }
    writeln!(out, "{}", report.tie_rule).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(sizes: Vec<usize>, optimum: Option<usize>) -> InstanceRow {
        InstanceRow {
            id: "x".into(),
            n: 0,
            edges: 0,
            coll_total: 0,
            best: *sizes.iter().max().unwrap(),
            sizes,
            optimum,
            oracle_exhausted: false,
        }
    }

    #[test]
    fn statistics() {
        let names = vec!["a".to_string(), "b".to_string()];
        let rows = vec![row(vec![2, 2], None), row(vec![3, 4], Some(5))];
        let s = summarize(&names, &rows, Denominator::Best);
        assert_eq!(s[0].avg_ratio, "175/2");
        assert_eq!(s[0].avg_ratio_percent, "87.5");
        assert_eq!(s[0].best_count, 1);
        assert_eq!(s[0].best_ratio_percent, "50.0");
        assert_eq!(s[1].avg_ratio, "100/1");
        assert_eq!(s[1].best_ratio_percent, "100.0");

        let o = summarize(&names, &rows, Denominator::Oracle);
        assert_eq!(o[0].avg_ratio, "80/1");
        assert_eq!(o[1].avg_ratio, "90/1");
        assert_eq!(o[1].best_count, 2);
    }

    #[test]
    fn decimals() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(big_decimal(&r(1933, 20), 1), "96.7");
        assert_eq!(big_decimal(&r(1, 3), 3), "0.333");
        assert_eq!(big_decimal(&r(-1, 20), 1), "-0.1");
        assert_eq!(big_decimal(&r(100, 1), 1), "100.0");
        assert_eq!(big_decimal(&r(1, 100), 1), "0.0");
    }
}
