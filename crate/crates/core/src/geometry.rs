//! Exact planar primitives over 64-bit integer coordinates.
//!
//! Nothing in here touches floating point. Coordinate differences are taken
//! in `i128` and the two halves of the cross product are compared by sign and
//! `u128` magnitude, so the full `i64` range is supported without overflow.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("points {first} and {second} are identical")]
    DuplicatePoints { first: usize, second: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// An ordered list of distinct points. Index `i` is the `i`-th point of the
/// input, which is also the default processing order of the order-sensitive
/// heuristics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, GeometryError> {
        let mut sorted: Vec<(Point, usize)> =
            points.iter().copied().zip(0..).collect();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GeometryError::DuplicatePoints {
                    first: w[0].1,
                    second: w[1].1,
                });
            }
        }
        Ok(Self { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, index: usize) -> Option<Point> {
        self.points.get(index).copied()
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.points.iter().position(|&q| q == p)
    }
}

/// A signed 129-bit quantity represented as sign plus magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Wide {
    negative: bool,
    magnitude: u128,
}

impl Wide {
    fn product(a: i128, b: i128) -> Self {
        // |a|, |b| < 2^64 so the product fits in u128.
        let magnitude = a.unsigned_abs() * b.unsigned_abs();
        Self {
            negative: magnitude != 0 && ((a < 0) != (b < 0)),
            magnitude,
        }
    }
}

impl Ord for Wide {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.negative, other.negative) {
            (false, false) => self.magnitude.cmp(&other.magnitude),
            (true, true) => other.magnitude.cmp(&self.magnitude),
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
        }
    }
}

impl PartialOrd for Wide {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sign of the cross product `(q - p) x (r - p)`.
///
/// `Greater` means `p, q, r` turn counter-clockwise, `Less` clockwise and
/// `Equal` collinear.
pub fn orientation(p: Point, q: Point, r: Point) -> Ordering {
    let qx = q.x as i128 - p.x as i128;
    let qy = q.y as i128 - p.y as i128;
    let rx = r.x as i128 - p.x as i128;
    let ry = r.y as i128 - p.y as i128;
    Wide::product(qx, ry).cmp(&Wide::product(qy, rx))
}

pub fn collinear(p: Point, q: Point, r: Point) -> bool {
    orientation(p, q, r) == Ordering::Equal
}

/// Direction from `from` to `to`, reduced by the gcd and sign-normalised so
/// that `d` and `-d` map to the same key.
fn direction_key(from: Point, to: Point) -> (i128, i128) {
    let dx = to.x as i128 - from.x as i128;
    let dy = to.y as i128 - from.y as i128;
    let g = dx.gcd(&dy);
    debug_assert!(g != 0, "direction between identical points");
    let (dx, dy) = (dx / g, dy / g);
    if dx < 0 || (dx == 0 && dy < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

/// All maximal collinear subsets of size at least three.
///
/// For each anchor the remaining points are grouped by exact direction; a group
/// of two or more others is a full line through the anchor. A line is reported
/// only from its lowest-index member, so every line appears exactly once.
/// Output sets are sorted ascending and the list is sorted lexicographically.
pub fn maximal_collinear_sets(ps: &PointSet) -> Vec<Vec<usize>> {
    let pts = ps.points();
    let n = pts.len();
    let mut lines = Vec::new();
    let mut dirs: Vec<((i128, i128), usize)> = Vec::with_capacity(n);
    for anchor in 0..n {
        dirs.clear();
        dirs.extend(
            (0..n)
                .filter(|&j| j != anchor)
                .map(|j| (direction_key(pts[anchor], pts[j]), j)),
        );
        dirs.sort_unstable();
        for group in dirs.chunk_by(|a, b| a.0 == b.0) {
            if group.len() < 2 || group[0].1 < anchor {
                continue;
            }
            let mut line = Vec::with_capacity(group.len() + 1);
            line.push(anchor);
            line.extend(group.iter().map(|&(_, j)| j));
            lines.push(line);
        }
    }
    lines.sort_unstable();
    lines
}
