//! Linear hypergraphs of collinearity relations and the derived collinearity
//! graph.
//!
//! A vertex is a point and an edge is a maximal set of at least three
//! collinear points. Two distinct edges share at most one vertex, just as two
//! distinct lines meet in at most one point. Every solver in this crate takes a
//! [`LinearHypergraph`]; point sets are converted with
//! [`LinearHypergraph::from_points`].

use thiserror::Error;

use crate::geometry::{maximal_collinear_sets, GeometryError, PointSet};
use crate::graph::Graph;
use crate::Rational;

/// The collinearity graph: `p ~ q` iff some edge contains both.
pub type CollinearityGraph = Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("edges {0} and {1} share more than one vertex")]
    NonLinear(usize, usize),
    #[error("edge {0} has fewer than three vertices")]
    EdgeTooSmall(usize),
    #[error("edge {0} references a vertex outside the vertex range")]
    IndexOutOfRange(usize),
    #[error("edge {0} lists a vertex more than once")]
    DuplicateVertex(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Checks every structural invariant of a linear hypergraph on `n` vertices,
/// reporting the first problem in edge order.
///
/// Edges are checked one at a time: first for being well formed, then against
/// every earlier edge. A pair clash is reported as `NonLinear(earlier, later)`.
pub fn validate_linear(n: usize, edges: &[Vec<usize>]) -> Result<(), HypergraphError> {
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut shared = Vec::<usize>::new();
    let mut seen = vec![usize::MAX; n];
    for (i, edge) in edges.iter().enumerate() {
        if edge.len() < 3 {
            return Err(HypergraphError::EdgeTooSmall(i));
        }
        for &v in edge {
            if v >= n {
                return Err(HypergraphError::IndexOutOfRange(i));
            }
            if seen[v] == i {
                return Err(HypergraphError::DuplicateVertex(i));
            }
            seen[v] = i;
        }
        shared.clear();
        shared.resize(i, 0);
        let mut clash: Option<usize> = None;
        for &v in edge {
            for &j in &incidence[v] {
                shared[j] += 1;
                if shared[j] >= 2 {
                    clash = Some(clash.map_or(j, |c| c.min(j)));
                }
            }
        }
        if let Some(j) = clash {
            return Err(HypergraphError::NonLinear(j, i));
        }
        for &v in edge {
            incidence[v].push(i);
        }
    }
    Ok(())
}

/// A validated linear hypergraph in canonical form: indices ascending inside
/// every edge and edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl LinearHypergraph {
    /// Validates and canonicalises. Error indices refer to the caller's edge
    /// order.
    pub fn new(n: usize, mut edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        for edge in &mut edges {
            edge.sort_unstable();
        }
        validate_linear(n, &edges)?;
        edges.sort_unstable();
        Ok(Self::from_canonical(n, edges))
    }

    fn from_canonical(n: usize, edges: Vec<Vec<usize>>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(i);
            }
        }
        Self { n, edges, incidence }
    }

    /// Vertex `i` is point `i`; edges are the maximal collinear subsets.
    pub fn from_points(ps: &PointSet) -> Self {
        // Lines through distinct points meet at most once, and the sets come
        // back canonical, so no validation pass is needed.
        let edges = maximal_collinear_sets(ps);
        debug_assert!(validate_linear(ps.len(), &edges).is_ok());
        Self::from_canonical(ps.len(), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn edges_of(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn collinearity_graph(&self) -> CollinearityGraph {
        let mut adjacency: Vec<Vec<usize>> = (0..self.n)
            .map(|v| Vec::with_capacity(self.edges_of(v).iter().map(|&e| self.edges[e].len() - 1).sum()))
            .collect();
        for edge in &self.edges {
            for &u in edge {
                adjacency[u].extend(edge.iter().copied().filter(|&w| w != u));
            }
        }
        Graph::from_adjacency_unchecked(adjacency)
    }

    pub fn coll_stats(&self) -> CollStats {
        // Linearity makes the per-edge neighbourhoods of a vertex disjoint.
        let coll_per_vertex: Vec<usize> = (0..self.n)
            .map(|v| self.edges_of(v).iter().map(|&e| self.edges[e].len() - 1).sum())
            .collect();
        let coll_total: usize = coll_per_vertex.iter().sum();
        let coll_avg = if self.n == 0 {
            Rational::from_integer(0)
        } else {
            Rational::new(coll_total as i64, self.n as i64)
        };
        CollStats {
            coll_per_vertex,
            coll_total,
            coll_avg,
        }
    }

    /// Number of members of `set` on each edge. Indices must be in range.
    pub(crate) fn edge_loads(&self, set: &[usize]) -> Vec<usize> {
        let mut loads = vec![0; self.edges.len()];
        for &v in set {
            for &e in self.edges_of(v) {
                loads[e] += 1;
            }
        }
        loads
    }

    /// At most two members of `set` on every edge.
    pub fn is_general_position(&self, set: &[usize]) -> bool {
        self.edge_loads(set).iter().all(|&c| c <= 2)
    }

    /// At most one member of `set` on every edge.
    pub fn is_noncollinear(&self, set: &[usize]) -> bool {
        self.edge_loads(set).iter().all(|&c| c <= 1)
    }
}

/// Per-vertex collinearity counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollStats {
    pub coll_per_vertex: Vec<usize>,
    pub coll_total: usize,
    pub coll_avg: Rational,
}
