//! General position subset selection heuristics and the exact oracle.
//!
//! Four heuristics are provided, all returning maximal general-position sets:
//!
//! * [`ind`]: bipartition the collinearity graph, drop the cross edges, take a
//!   min-degree greedy independent set of what remains and extend it. The two
//!   halves of that independent set are each noncollinear, so their union has at
//!   most two points per line.
//! * [`inc`]: scan vertices in a fixed order, keeping each one that does not
//!   close a collinear triple.
//! * [`inc_min`]: like `inc`, but always process the unprocessed vertex with the
//!   fewest collinear partners among the unprocessed vertices.
//! * [`dec`]: start from everything and repeatedly drop the member with the
//!   most collinear partners among the members, then extend.
//!
//! [`exact`] is a branch-and-bound oracle for small instances.
//!
//! Ties are always broken towards the lowest vertex index.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::hypergraph::LinearHypergraph;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error("vertex order is not a permutation of 0..{expected}")]
    InvalidPermutation { expected: usize },
    #[error("vertex {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("starting set is not in general position (edge {edge})")]
    NotGeneralPosition { edge: usize },
    #[error("node budget exhausted after {nodes_explored} nodes; best found has {} members", incumbent.size())]
    BudgetExhausted {
        incumbent: GpSubset,
        nodes_explored: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Ind,
    Inc,
    IncMin,
    Dec,
    Exact,
    /// A caller-supplied set passed through [`extend_maximal`].
    Extend,
}

impl Algorithm {
    pub const HEURISTICS: [Algorithm; 4] = [Self::Ind, Self::Inc, Self::IncMin, Self::Dec];

    pub fn label(self) -> &'static str {
        match self {
            Self::Ind => "ind",
            Self::Inc => "inc",
            Self::IncMin => "inc-min",
            Self::Dec => "dec",
            Self::Exact => "exact",
            Self::Extend => "extend",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ind" => Ok(Self::Ind),
            "inc" => Ok(Self::Inc),
            "inc-min" => Ok(Self::IncMin),
            "dec" => Ok(Self::Dec),
            "exact" => Ok(Self::Exact),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// A processing order over the vertices, with the seed that produced it when
/// it is a shuffle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Order {
    perm: Vec<usize>,
    seed: Option<u64>,
}

impl Order {
    pub fn input(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            seed: None,
        }
    }

    /// Fisher-Yates shuffle driven by `ChaCha8Rng::seed_from_u64(seed)`.
    pub fn shuffled(n: usize, seed: u64) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self {
            perm,
            seed: Some(seed),
        }
    }

    pub fn from_permutation(perm: Vec<usize>) -> Result<Self, AlgoError> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(AlgoError::InvalidPermutation { expected: n });
            }
        }
        Ok(Self { perm, seed: None })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    fn check_len(&self, n: usize) -> Result<(), AlgoError> {
        if self.perm.len() == n {
            Ok(())
        } else {
            Err(AlgoError::InvalidPermutation { expected: n })
        }
    }
}

/// A subset of vertices in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpSubset {
    /// Sorted ascending.
    pub members: Vec<usize>,
    pub maximal: bool,
    pub algorithm: Algorithm,
    pub order_seed: Option<u64>,
}

impl GpSubset {
    pub fn empty(algorithm: Algorithm) -> Self {
        Self {
            members: Vec::new(),
            maximal: false,
            algorithm,
            order_seed: None,
        }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
    pub cross_edges: usize,
}

impl Bipartition {
    pub fn members(&self, side: Side) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v] == side).collect()
    }
}

/// Greedy max-cut style split. Vertices are placed in `order`; a vertex goes to
/// side one iff strictly fewer of its already placed neighbours are on side one
/// than on side two. Each placement cuts at least half of the edges back to
/// placed vertices, so at least half of all edges end up crossing.
pub fn bipartition(g: &Graph, order: &Order) -> Result<Bipartition, AlgoError> {
    order.check_len(g.n())?;
    let mut side: Vec<Option<Side>> = vec![None; g.n()];
    let mut cross_edges = 0;
    for &v in order.as_slice() {
        let (mut on_one, mut on_two) = (0, 0);
        for &u in g.neighbors(v) {
            match side[u] {
                Some(Side::One) => on_one += 1,
                Some(Side::Two) => on_two += 1,
                None => {}
            }
        }
        if on_one < on_two {
            side[v] = Some(Side::One);
            cross_edges += on_two;
        } else {
            side[v] = Some(Side::Two);
            cross_edges += on_one;
        }
    }
    Ok(Bipartition {
        side: side.into_iter().map(|s| s.expect("order covers every vertex")).collect(),
        cross_edges,
    })
}

/// Min-degree greedy maximal independent set on the residual graph: take the
/// live vertex of least live degree, delete it with its neighbours, repeat.
/// Returned sorted ascending.
pub fn greedy_mis(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();
    let mut chosen = Vec::new();
    while let Some((_, v)) = queue.pop_first() {
        chosen.push(v);
        alive[v] = false;
        for &u in g.neighbors(v) {
            if !alive[u] {
                continue;
            }
            alive[u] = false;
            queue.remove(&(degree[u], u));
            for &w in g.neighbors(u) {
                if alive[w] {
                    queue.remove(&(degree[w], w));
                    degree[w] -= 1;
                    queue.insert((degree[w], w));
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    OkAndMaximal,
    /// The lowest-index edge holding three or more members, and those members.
    Violation { edge: usize, members: Vec<usize> },
}

impl Verdict {
    pub fn is_general_position(&self) -> bool {
        !matches!(self, Self::Violation { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ok => f.write_str("ok"),
            Self::OkAndMaximal => f.write_str("ok_and_maximal"),
            Self::Violation { edge, members } => {
                write!(f, "violation edge {edge} members")?;
                for m in members {
                    write!(f, " {m}")?;
                }
                Ok(())
            }
        }
    }
}

fn normalise_set(h: &LinearHypergraph, s: &[usize]) -> Result<Vec<usize>, AlgoError> {
    if let Some(&v) = s.iter().find(|&&v| v >= h.n()) {
        return Err(AlgoError::IndexOutOfRange(v));
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

fn blocked(h: &LinearHypergraph, loads: &[usize], v: usize) -> bool {
    h.edges_of(v).iter().any(|&e| loads[e] >= 2)
}

pub fn verify_general_position(h: &LinearHypergraph, s: &[usize]) -> Result<Verdict, AlgoError> {
    let set = normalise_set(h, s)?;
    let loads = h.edge_loads(&set);
    if let Some(edge) = loads.iter().position(|&c| c >= 3) {
        let members = h.edges()[edge]
            .iter()
            .copied()
            .filter(|v| set.binary_search(v).is_ok())
            .collect();
        return Ok(Verdict::Violation { edge, members });
    }
    let maximal = (0..h.n()).all(|v| set.binary_search(&v).is_ok() || blocked(h, &loads, v));
    Ok(if maximal {
        Verdict::OkAndMaximal
    } else {
        Verdict::Ok
    })
}

/// Scans the non-members in `order` and adds each one that does not land on an
/// edge already holding two members.
pub fn extend_maximal(
    h: &LinearHypergraph,
    s: &GpSubset,
    order: &Order,
) -> Result<GpSubset, AlgoError> {
    order.check_len(h.n())?;
    let set = normalise_set(h, &s.members)?;
    let mut loads = h.edge_loads(&set);
    if let Some(edge) = loads.iter().position(|&c| c >= 3) {
        return Err(AlgoError::NotGeneralPosition { edge });
    }
    let mut inside = vec![false; h.n()];
    for &v in &set {
        inside[v] = true;
    }
    for &v in order.as_slice() {
        if inside[v] || blocked(h, &loads, v) {
            continue;
        }
        inside[v] = true;
        for &e in h.edges_of(v) {
            loads[e] += 1;
        }
    }
    Ok(GpSubset {
        members: (0..h.n()).filter(|&v| inside[v]).collect(),
        maximal: true,
        algorithm: s.algorithm,
        order_seed: order.seed().or(s.order_seed),
    })
}

/// Intermediate products of [`ind`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndTrace {
    pub bipartition: Bipartition,
    /// Greedy independent set of the graph with cross edges removed.
    pub independent: Vec<usize>,
    /// `independent` restricted to side one.
    pub side_one: Vec<usize>,
    /// `independent` restricted to side two.
    pub side_two: Vec<usize>,
    pub result: GpSubset,
}

pub fn ind_traced(h: &LinearHypergraph, order: &Order) -> Result<IndTrace, AlgoError> {
    let g = h.collinearity_graph();
    let bipartition = bipartition(&g, order)?;
    let within_sides = g.filter_edges(|u, v| bipartition.side[u] == bipartition.side[v]);
    let independent = greedy_mis(&within_sides);
    let (side_one, side_two): (Vec<usize>, Vec<usize>) = independent
        .iter()
        .partition(|&&v| bipartition.side[v] == Side::One);
    debug_assert!(g.is_independent(&side_one) && g.is_independent(&side_two));
    let start = GpSubset {
        members: independent.clone(),
        maximal: false,
        algorithm: Algorithm::Ind,
        order_seed: order.seed(),
    };
    let result = extend_maximal(h, &start, order)?;
    Ok(IndTrace {
        bipartition,
        independent,
        side_one,
        side_two,
        result,
    })
}

pub fn ind(h: &LinearHypergraph, order: &Order) -> Result<GpSubset, AlgoError> {
    ind_traced(h, order).map(|t| t.result)
}

pub fn inc(h: &LinearHypergraph, order: &Order) -> Result<GpSubset, AlgoError> {
    extend_maximal(h, &GpSubset::empty(Algorithm::Inc), order)
}

/// How [`inc_min_with`] scores candidates.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum IncMinScore {
    /// Collinear partners still in the unprocessed pool.
    #[default]
    Dynamic,
    /// `coll(p)` over the whole instance, fixed up front.
    Static,
}

pub fn inc_min(h: &LinearHypergraph) -> GpSubset {
    inc_min_with(h, IncMinScore::Dynamic)
}

pub fn inc_min_with(h: &LinearHypergraph, score: IncMinScore) -> GpSubset {
    let g = h.collinearity_graph();
    let n = h.n();
    let mut scores: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut pooled = vec![true; n];
    let mut pool: BTreeSet<(usize, usize)> = (0..n).map(|v| (scores[v], v)).collect();
    let mut loads = vec![0; h.edges().len()];
    let mut members = Vec::new();
    while let Some((_, v)) = pool.pop_first() {
        pooled[v] = false;
        if score == IncMinScore::Dynamic {
            for &u in g.neighbors(v) {
                if pooled[u] {
                    pool.remove(&(scores[u], u));
                    scores[u] -= 1;
                    pool.insert((scores[u], u));
                }
            }
        }
        if !blocked(h, &loads, v) {
            members.push(v);
            for &e in h.edges_of(v) {
                loads[e] += 1;
            }
        }
    }
    members.sort_unstable();
    GpSubset {
        members,
        maximal: true,
        algorithm: Algorithm::IncMin,
        order_seed: None,
    }
}

pub fn dec(h: &LinearHypergraph) -> GpSubset {
    let g = h.collinearity_graph();
    let n = h.n();
    let mut scores: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut inside = vec![true; n];
    let mut queue: BTreeSet<(Reverse<usize>, usize)> = (0..n).map(|v| (Reverse(scores[v]), v)).collect();
    let mut loads: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    let mut overloaded = loads.iter().filter(|&&c| c >= 3).count();
    while overloaded > 0 {
        let (_, p) = queue.pop_first().expect("an overloaded edge has members");
        inside[p] = false;
        for &u in g.neighbors(p) {
            if inside[u] {
                queue.remove(&(Reverse(scores[u]), u));
                scores[u] -= 1;
                queue.insert((Reverse(scores[u]), u));
            }
        }
        for &e in h.edges_of(p) {
            loads[e] -= 1;
            if loads[e] == 2 {
                overloaded -= 1;
            }
        }
    }
    let survivors = GpSubset {
        members: (0..n).filter(|&v| inside[v]).collect(),
        maximal: false,
        algorithm: Algorithm::Dec,
        order_seed: None,
    };
    extend_maximal(h, &survivors, &Order::input(n)).expect("survivors are in general position")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: GpSubset,
    pub nodes_explored: u64,
}

struct Search<'a> {
    h: &'a LinearHypergraph,
    budget: u64,
    nodes: u64,
    loads: Vec<usize>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    /// Returns false once the budget runs out.
    fn descend(&mut self, v: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let n = self.h.n();
        if self.current.len() + (n - v) <= self.best.len() {
            return true;
        }
        if v == n {
            self.best.clone_from(&self.current);
            return true;
        }
        if !blocked(self.h, &self.loads, v) {
            self.current.push(v);
            for &e in self.h.edges_of(v) {
                self.loads[e] += 1;
            }
            let finished = self.descend(v + 1);
            for &e in self.h.edges_of(v) {
                self.loads[e] -= 1;
            }
            self.current.pop();
            if !finished {
                return false;
            }
        }
        self.descend(v + 1)
    }
}

/// Exhaustive include/exclude search over vertices in index order, pruning a
/// branch when its members plus all undecided vertices cannot beat the best
/// set found so far.
pub fn exact(h: &LinearHypergraph, node_budget: u64) -> Result<ExactResult, AlgoError> {
    let mut search = Search {
        h,
        budget: node_budget,
        nodes: 0,
        loads: vec![0; h.edges().len()],
        current: Vec::with_capacity(h.n()),
        best: Vec::new(),
    };
    let finished = search.descend(0);
    let maximal = matches!(verify_general_position(h, &search.best), Ok(Verdict::OkAndMaximal));
    let witness = GpSubset {
        members: search.best,
        maximal,
        algorithm: Algorithm::Exact,
        order_seed: None,
    };
    if finished {
        Ok(ExactResult {
            optimum: witness.size(),
            witness,
            nodes_explored: search.nodes,
        })
    } else {
        Err(AlgoError::BudgetExhausted {
            incumbent: witness,
            nodes_explored: search.nodes.min(node_budget),
        })
    }
}

/// `2n^2 / (coll(P) + 2n)`, the guaranteed size of [`ind`]'s output.
pub fn size_lower_bound(h: &LinearHypergraph) -> Rational {
    let n = h.n() as i64;
    if n == 0 {
        return Rational::from_integer(0);
    }
    Rational::new(2 * n * n, h.coll_stats().coll_total as i64 + 2 * n)
}

/// `2n / (avg coll + 2)`, the guaranteed size of the independent set inside
/// [`ind`] before extension.
pub fn independent_lower_bound(h: &LinearHypergraph) -> Rational {
    let n = h.n() as i64;
    let avg = h.coll_stats().coll_avg;
    Rational::from_integer(2 * n) / (avg + 2)
}

/// `n / (avg degree + 1)`.
pub fn turan_bound(g: &Graph) -> Rational {
    Rational::from_integer(g.n() as i64) / (g.average_degree() + 1)
}

/// Every maximal general-position set satisfies `|S|^2 >= optimum`.
pub fn meets_sqrt_guarantee(size: usize, optimum: usize) -> bool {
    size.checked_mul(size).is_none_or(|sq| sq >= optimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Point, PointSet};

    fn grid3() -> LinearHypergraph {
        let pts = (0..3)
            .flat_map(|y| (0..3).map(move |x| Point::new(x, y)))
            .collect();
        LinearHypergraph::from_points(&PointSet::new(pts).unwrap())
    }

    fn triple() -> LinearHypergraph {
        LinearHypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn free(n: usize) -> LinearHypergraph {
        LinearHypergraph::new(n, vec![]).unwrap()
    }

    #[test]
    fn order_validation() {
        assert!(Order::from_permutation(vec![2, 0, 1]).is_ok());
        assert_eq!(
            Order::from_permutation(vec![0, 0, 1]),
            Err(AlgoError::InvalidPermutation { expected: 3 })
        );
        assert_eq!(
            inc(&triple(), &Order::input(4)),
            Err(AlgoError::InvalidPermutation { expected: 3 })
        );
        let shuffled = Order::shuffled(20, 9);
        assert_eq!(shuffled, Order::shuffled(20, 9));
        assert_ne!(shuffled.as_slice(), Order::input(20).as_slice());
    }

    #[test]
    fn bipartition_examples() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let b = bipartition(&tri, &Order::input(3)).unwrap();
        assert_eq!(b.side, vec![Side::Two, Side::One, Side::Two]);
        assert_eq!(b.cross_edges, 2);

        let edgeless = bipartition(&Graph::empty(5), &Order::input(5)).unwrap();
        assert!(edgeless.side.iter().all(|&s| s == Side::Two));
        assert_eq!(edgeless.cross_edges, 0);

        let single = Graph::from_edges(2, [(0, 1)]);
        let b = bipartition(&single, &Order::input(2)).unwrap();
        assert_eq!(b.side, vec![Side::Two, Side::One]);
        assert_eq!(b.cross_edges, 1);
    }

    #[test]
    fn greedy_mis_examples() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        assert_eq!(greedy_mis(&tri), vec![0]);
        assert_eq!(greedy_mis(&Graph::empty(7)), (0..7).collect::<Vec<_>>());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(greedy_mis(&path), vec![0, 2]);
        assert!(Rational::from_integer(2) >= turan_bound(&path));
        assert_eq!(turan_bound(&path), Rational::new(9, 7));
    }

    #[test]
    fn verify_examples() {
        let t = triple();
        assert_eq!(verify_general_position(&t, &[0, 1]), Ok(Verdict::OkAndMaximal));
        assert_eq!(
            verify_general_position(&t, &[0, 1, 2]),
            Ok(Verdict::Violation { edge: 0, members: vec![0, 1, 2] })
        );
        assert_eq!(verify_general_position(&t, &[0]), Ok(Verdict::Ok));
        assert_eq!(verify_general_position(&t, &[3]), Err(AlgoError::IndexOutOfRange(3)));
        assert_eq!(verify_general_position(&grid3(), &[0, 1, 3, 4]), Ok(Verdict::OkAndMaximal));
    }

    #[test]
    fn extend_examples() {
        let empty = GpSubset::empty(Algorithm::Extend);
        let out = extend_maximal(&free(6), &empty, &Order::input(6)).unwrap();
        assert_eq!(out.members, (0..6).collect::<Vec<_>>());
        let out = extend_maximal(&triple(), &empty, &Order::input(3)).unwrap();
        assert_eq!(out.members, vec![0, 1]);

        let g = grid3();
        let center = GpSubset { members: vec![4], ..empty.clone() };
        let out = extend_maximal(&g, &center, &Order::input(9)).unwrap();
        assert!(out.members.contains(&4));
        assert!(out.size() >= 3);
        assert_eq!(verify_general_position(&g, &out.members), Ok(Verdict::OkAndMaximal));

        let bad = GpSubset { members: vec![0, 1, 2], ..empty };
        assert_eq!(
            extend_maximal(&triple(), &bad, &Order::input(3)),
            Err(AlgoError::NotGeneralPosition { edge: 0 })
        );
    }

    #[test]
    fn ind_examples() {
        assert_eq!(ind(&free(5), &Order::input(5)).unwrap().size(), 5);

        let trace = ind_traced(&triple(), &Order::input(3)).unwrap();
        assert_eq!(trace.bipartition.members(Side::One), vec![1]);
        assert_eq!(trace.bipartition.members(Side::Two), vec![0, 2]);
        assert_eq!(trace.independent, vec![0, 1]);
        assert_eq!(trace.result.members, vec![0, 1]);
        assert_eq!(size_lower_bound(&triple()), Rational::new(3, 2));

        let g = grid3();
        assert_eq!(size_lower_bound(&g), Rational::new(27, 11));
        assert_eq!(independent_lower_bound(&g), Rational::new(27, 11));
        let out = ind(&g, &Order::input(9)).unwrap();
        assert!(out.size() >= 3);
        assert!(out.maximal);
    }

    #[test]
    fn inc_examples() {
        assert_eq!(inc(&triple(), &Order::input(3)).unwrap().members, vec![0, 1]);
        assert_eq!(inc(&grid3(), &Order::input(9)).unwrap().members, vec![0, 1, 3, 4]);
        assert_eq!(inc(&free(5), &Order::input(5)).unwrap().size(), 5);
    }

    #[test]
    fn inc_min_examples() {
        let h = LinearHypergraph::new(4, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(inc_min(&h).members, vec![0, 1, 3]);
        assert_eq!(inc_min(&free(4)).size(), 4);
        let out = inc_min(&grid3());
        assert_eq!(verify_general_position(&grid3(), &out.members), Ok(Verdict::OkAndMaximal));
        let stat = inc_min_with(&grid3(), IncMinScore::Static);
        assert_eq!(verify_general_position(&grid3(), &stat.members), Ok(Verdict::OkAndMaximal));
    }

    #[test]
    fn dec_examples() {
        assert_eq!(dec(&triple()).members, vec![1, 2]);
        assert_eq!(dec(&free(5)).size(), 5);
        let two = LinearHypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(dec(&two).members, vec![0, 1, 3, 4]);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact(&triple(), 1_000).unwrap().optimum, 2);
        assert_eq!(exact(&free(9), 1_000).unwrap().optimum, 9);
        let g = grid3();
        let r = exact(&g, 1_000_000).unwrap();
        assert_eq!(r.optimum, 6);
        assert!(g.is_general_position(&r.witness.members));
        // Hand-checked witness: (0,0) (1,0) (0,1) (2,1) (1,2) (2,2).
        assert!(g.is_general_position(&[0, 1, 3, 5, 7, 8]));
    }

    #[test]
    fn exact_budget() {
        match exact(&grid3(), 5) {
            Err(AlgoError::BudgetExhausted { incumbent, nodes_explored }) => {
                assert_eq!(nodes_explored, 5);
                assert!(grid3().is_general_position(&incumbent.members));
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_guarantee() {
        assert!(meets_sqrt_guarantee(2, 4));
        assert!(!meets_sqrt_guarantee(2, 5));
    }
}
