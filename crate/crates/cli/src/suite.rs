//! Benchmark suite configuration.
//!
//! A suite is a TOML file listing instances explicitly (`[[instances]]`) or as
//! parameter sweeps (`[[sweeps]]`) that expand to the cartesian product of
//! their lists. Every instance is fully determined by the file: generated
//! hypergraphs carry a seed, and instance `k` of a hypergraph sweep uses the
//! sweep's `base_seed` with RNG stream `k`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use gpss_core::algorithms::IncMinScore;
use gpss_core::generator::{gen_grid, gen_linear_hypergraph, GenParams};
use gpss_core::{io, Algorithm, LinearHypergraph, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum InputFormat {
    Points,
    Hypergraph,
}

pub fn load_instance(path: &Path, format: InputFormat) -> Result<LinearHypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let h = match format {
        InputFormat::Points => LinearHypergraph::from_points(&io::parse_points(&text)?),
        InputFormat::Hypergraph => io::parse_hypergraph(&text)?,
    };
    Ok(h)
}

/// Which set size the per-instance ratios are taken against.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Denominator {
    /// Largest set found by any algorithm in the run.
    #[default]
    Best,
    /// Exact optimum where the oracle finished, otherwise `best`.
    Oracle,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScoreMode {
    #[default]
    Dynamic,
    Static,
}

impl From<ScoreMode> for IncMinScore {
    fn from(m: ScoreMode) -> Self {
        match m {
            ScoreMode::Dynamic => IncMinScore::Dynamic,
            ScoreMode::Static => IncMinScore::Static,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceSpec {
    Grid {
        rows: usize,
        cols: usize,
    },
    Hypergraph {
        n: usize,
        m: usize,
        /// Integer or `p/q`.
        d: String,
        seed: u64,
        #[serde(default)]
        stream: u64,
    },
    File {
        path: PathBuf,
        format: InputFormat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Sweep {
    Grid {
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    Hypergraph {
        n: Vec<usize>,
        m: Vec<usize>,
        d: Vec<String>,
        seeds: u64,
        base_seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub name: String,
    pub algorithms: Vec<String>,
    /// Node budget for the exact oracle; no oracle runs when absent.
    #[serde(default)]
    pub node_budget: Option<u64>,
    /// Oracle is skipped above this vertex count.
    #[serde(default = "default_oracle_max_n")]
    pub oracle_max_n: usize,
    #[serde(default)]
    pub denominator: Denominator,
    #[serde(default)]
    pub inc_min_score: ScoreMode,
    /// Shuffle seed for the order-sensitive algorithms; input order when absent.
    #[serde(default)]
    pub order_seed: Option<u64>,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub instances: Vec<InstanceSpec>,
    #[serde(default)]
    pub sweeps: Vec<Sweep>,
}

fn default_oracle_max_n() -> usize {
    30
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((a, b)) => {
            let den: i64 = b.trim().parse().with_context(|| format!("bad rational `{s}`"))?;
            if den == 0 {
                bail!("zero denominator in `{s}`");
            }
            Rational::new(a.trim().parse().with_context(|| format!("bad rational `{s}`"))?, den)
        }
        None => Rational::from_integer(s.parse().with_context(|| format!("bad rational `{s}`"))?),
    };
    Ok(r)
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).context("parsing suite config")?;
        config.algorithm_list()?;
        if config.algorithms.is_empty() {
            bail!("suite lists no algorithms");
        }
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_toml(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn algorithm_list(&self) -> Result<Vec<Algorithm>> {
        self.algorithms
            .iter()
            .map(|a| a.parse::<Algorithm>().map_err(anyhow::Error::msg))
            .collect()
    }

    /// Explicit instances first, then sweeps in file order.
    pub fn expand(&self) -> Vec<InstanceSpec> {
        let mut out = self.instances.clone();
        for sweep in &self.sweeps {
            match sweep {
                Sweep::Grid { rows, cols } => {
                    for &r in rows {
                        for &c in cols {
                            out.push(InstanceSpec::Grid { rows: r, cols: c });
                        }
                    }
                }
                Sweep::Hypergraph {
                    n,
                    m,
                    d,
                    seeds,
                    base_seed,
                } => {
                    let mut stream = 0;
                    for &n in n {
                        for &m in m {
                            for d in d {
                                for _ in 0..*seeds {
                                    out.push(InstanceSpec::Hypergraph {
                                        n,
                                        m,
                                        d: d.clone(),
                                        seed: *base_seed,
                                        stream,
                                    });
                                    stream += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl InstanceSpec {
    pub fn id(&self) -> String {
        match self {
            Self::Grid { rows, cols } => format!("grid-{rows}x{cols}"),
            Self::Hypergraph {
                n,
                m,
                d,
                seed,
                stream,
            } => format!("hg-n{n}-m{m}-d{d}-s{seed}.{stream}"),
            Self::File { path, .. } => format!("file:{}", path.display()),
        }
    }

    /// Relative file paths resolve against `base`.
    pub fn build(&self, base: &Path) -> Result<LinearHypergraph> {
        match self {
            Self::Grid { rows, cols } => Ok(LinearHypergraph::from_points(&gen_grid(*rows, *cols)?)),
            Self::Hypergraph {
                n,
                m,
                d,
                seed,
                stream,
            } => {
                let params = GenParams::new(*n, *m, parse_rational(d)?, *seed).with_stream(*stream);
                Ok(gen_linear_hypergraph(&params)?.hypergraph)
            }
            Self::File { path, format } => load_instance(&base.join(path), *format),
        }
    }
}
