//! Simple undirected graphs with sorted adjacency lists.

use crate::Rational;

/// Undirected simple graph. Adjacency lists are sorted, symmetric and free of
/// self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops and repeated edges are
    /// dropped.
    ///
    /// Panics if an endpoint is out of range.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u != v {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        Self::from_adjacency_unchecked(adjacency)
    }

    /// Sorts and deduplicates each list. Symmetry is the caller's job.
    pub(crate) fn from_adjacency_unchecked(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Self {
            adjacency,
            edge_count: twice / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Average degree `2|E| / n`; zero for the empty graph.
    pub fn average_degree(&self) -> Rational {
        if self.n() == 0 {
            return Rational::from_integer(0);
        }
        Rational::new(2 * self.edge_count as i64, self.n() as i64)
    }

    /// Keeps only the edges for which `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Self {
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(u, list)| list.iter().copied().filter(|&v| keep(u, v)).collect())
            .collect();
        Self::from_adjacency_unchecked(adjacency)
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        set.iter().all(|&v| self.adjacency[v].iter().all(|&u| !inside[u]))
    }

    /// Independent, and every vertex outside has a neighbour inside.
    pub fn is_maximal_independent(&self, set: &[usize]) -> bool {
        if !self.is_independent(set) {
            return false;
        }
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        (0..self.n()).all(|v| inside[v] || self.adjacency[v].iter().any(|&u| inside[u]))
    }
}
