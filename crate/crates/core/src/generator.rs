//! Test instance generators.
//!
//! [`gen_linear_hypergraph`] grows a random linear hypergraph one vertex
//! insertion at a time: `d * n` times, pick a vertex and an edge uniformly at
//! random and insert unless that would break linearity. [`gen_grid`] produces
//! integer grids, the classic source of heavily collinear point sets.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{Point, PointSet};
use crate::hypergraph::LinearHypergraph;
use crate::Rational;

/// Recorded in instance metadata so runs can be reproduced elsewhere.
///
/// Each instance gets its own generator,
/// `ChaCha8Rng::seed_from_u64(seed)` followed by `set_stream(stream)`; suites
/// hand out one stream per instance. Every attempt draws the vertex first and
/// then the edge, each with `gen_range`.
pub const RNG_NAME: &str = "chacha8/seed_from_u64+set_stream";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    /// Target average degree; `d * n` must be a non-negative integer.
    pub d: Rational,
    pub seed: u64,
    pub stream: u64,
}

impl GenParams {
    pub fn new(n: usize, m: usize, d: Rational, seed: u64) -> Self {
        Self {
            n,
            m,
            d,
            seed,
            stream: 0,
        }
    }

    pub fn with_stream(mut self, stream: u64) -> Self {
        self.stream = stream;
        self
    }

    /// Number of insertion attempts, `d * n`.
    pub fn attempts(&self) -> Result<u64, GenError> {
        if self.n == 0 || self.m == 0 {
            return Err(GenError::InvalidParams("n and m must be at least 1".into()));
        }
        if self.d < Rational::from_integer(0) {
            return Err(GenError::InvalidParams(format!("d = {} is negative", self.d)));
        }
        let total = self.d * Rational::from_integer(self.n as i64);
        if !total.is_integer() {
            return Err(GenError::InvalidParams(format!(
                "d * n = {total} is not an integer"
            )));
        }
        Ok(total.to_integer() as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenOutcome {
    /// Edges with at least three vertices.
    pub hypergraph: LinearHypergraph,
    /// All `m` edges in edge-index order, including undersized ones.
    pub raw_edges: Vec<Vec<usize>>,
    pub accepted: u64,
    pub rejections: u64,
    /// `accepted / n`.
    pub avg_degree_raw: Rational,
}

pub fn gen_linear_hypergraph(p: &GenParams) -> Result<GenOutcome, GenError> {
    let attempts = p.attempts()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(p.stream);

    let mut edges: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); p.m];
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); p.n];
    let mut accepted = 0u64;
    for _ in 0..attempts {
        let v = rng.gen_range(0..p.n);
        let e = rng.gen_range(0..p.m);
        // v already on e, or v on another edge that meets e: either way e and
        // that edge would share two vertices.
        let conflict = edges[e].contains(&v)
            || incidence[v].iter().any(|&other| {
                let (small, large) = if edges[other].len() <= edges[e].len() {
                    (&edges[other], &edges[e])
                } else {
                    (&edges[e], &edges[other])
                };
                small.iter().any(|u| large.contains(u))
            });
        if conflict {
            continue;
        }
        edges[e].insert(v);
        incidence[v].push(e);
        accepted += 1;
    }

    let raw_edges: Vec<Vec<usize>> = edges.into_iter().map(|e| e.into_iter().collect()).collect();
    let kept = raw_edges.iter().filter(|e| e.len() >= 3).cloned().collect();
    let hypergraph = LinearHypergraph::new(p.n, kept)
        .expect("insertion rule keeps the hypergraph linear");
    Ok(GenOutcome {
        hypergraph,
        raw_edges,
        accepted,
        rejections: attempts - accepted,
        avg_degree_raw: Rational::new(accepted as i64, p.n as i64),
    })
}

/// `d - 3 d^2 / (4 m)`, a lower bound on the expected average degree of
/// [`gen_linear_hypergraph`]'s output.
pub fn expected_degree_lower_bound(d: Rational, m: usize) -> Result<Rational, GenError> {
    if m == 0 {
        return Err(GenError::InvalidParams("m must be at least 1".into()));
    }
    Ok(d - Rational::from_integer(3) * d * d / Rational::from_integer(4 * m as i64))
}

/// All `(x, y)` with `0 <= x < cols` and `0 <= y < rows`, row by row.
pub fn gen_grid(rows: usize, cols: usize) -> Result<PointSet, GenError> {
    if rows == 0 || cols == 0 {
        return Err(GenError::InvalidParams("grid dimensions must be at least 1".into()));
    }
    let points = (0..rows as i64)
        .flat_map(|y| (0..cols as i64).map(move |x| Point::new(x, y)))
        .collect();
    Ok(PointSet::new(points).expect("grid points are distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lower_bound_arithmetic() {
        let r = |a, b| Rational::new(a, b);
        assert_eq!(expected_degree_lower_bound(r(4, 1), 40), Ok(r(37, 10)));
        assert_eq!(expected_degree_lower_bound(r(0, 1), 7), Ok(r(0, 1)));
        assert_eq!(expected_degree_lower_bound(r(2, 1), 3), Ok(r(1, 1)));
        assert!(expected_degree_lower_bound(r(2, 1), 0).is_err());
    }

    #[test]
    fn single_vertex_single_edge() {
        let out = gen_linear_hypergraph(&GenParams::new(1, 1, Rational::from_integer(1), 3)).unwrap();
        assert_eq!(out.raw_edges, vec![vec![0]]);
        assert_eq!(out.accepted, 1);
        assert_eq!(out.rejections, 0);
        assert!(out.hypergraph.edges().is_empty());
    }

    #[test]
    fn params_validation() {
        let bad = GenParams::new(3, 2, Rational::new(1, 2), 0);
        assert!(matches!(bad.attempts(), Err(GenError::InvalidParams(_))));
        let neg = GenParams::new(3, 2, Rational::from_integer(-1), 0);
        assert!(neg.attempts().is_err());
        assert!(GenParams::new(0, 2, Rational::from_integer(1), 0).attempts().is_err());
        assert_eq!(GenParams::new(4, 2, Rational::new(1, 2), 0).attempts(), Ok(2));
    }

    #[test]
    fn streams_differ() {
        let p = GenParams::new(50, 10, Rational::from_integer(3), 11);
        let a = gen_linear_hypergraph(&p).unwrap();
        let b = gen_linear_hypergraph(&p.clone().with_stream(1)).unwrap();
        assert_eq!(a, gen_linear_hypergraph(&p).unwrap());
        assert_ne!(a.raw_edges, b.raw_edges);
    }

    #[test]
    fn grids() {
        let g = gen_grid(3, 3).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.get(1), Some(Point::new(1, 0)));
        assert_eq!(LinearHypergraph::from_points(&g).edges().len(), 8);
        let line = gen_grid(1, 5).unwrap();
        assert_eq!(LinearHypergraph::from_points(&line).edges(), &[vec![0, 1, 2, 3, 4]]);
        assert!(LinearHypergraph::from_points(&gen_grid(2, 2).unwrap()).edges().is_empty());
        assert!(gen_grid(0, 3).is_err());
    }
}
