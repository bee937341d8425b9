//! Geometry checked against arbitrary-precision arithmetic and brute force.

use std::collections::BTreeSet;

use gpss_core::geometry::{collinear, maximal_collinear_sets, orientation, Point, PointSet};
use gpss_core::hypergraph::validate_linear;
use gpss_core::LinearHypergraph;
use num_bigint::BigInt;
use proptest::prelude::*;

fn big_cross(p: Point, q: Point, r: Point) -> BigInt {
    let b = |v: i64| BigInt::from(v);
    (b(q.x) - b(p.x)) * (b(r.y) - b(p.y)) - (b(q.y) - b(p.y)) * (b(r.x) - b(p.x))
}

#[test]
fn near_overflow_example() {
    let k = 3_037_000_499i64;
    let p = Point::new(k, 0);
    let q = Point::new(0, k);
    let r = Point::new(-k, 2 * k);
    let cross = big_cross(p, q, r);
    assert_eq!(collinear(p, q, r), cross == BigInt::from(0));
    // The three points sit on x + y = k.
    assert!(collinear(p, q, r));
    assert!(!collinear(p, q, Point::new(-k, 2 * k - 1)));
}

fn point_strategy() -> impl Strategy<Value = Point> {
    prop_oneof![
        (any::<i64>(), any::<i64>()).prop_map(|(x, y)| Point::new(x, y)),
        (-4i64..4, -4i64..4).prop_map(|(x, y)| Point::new(x, y)),
        (-4i64..4, -4i64..4).prop_map(|(x, y)| Point::new(x * (1 << 61), y * (1 << 61))),
    ]
}

proptest! {
    #[test]
    fn orientation_matches_bigint(p in point_strategy(), q in point_strategy(), r in point_strategy()) {
        let cross = big_cross(p, q, r);
        let zero = BigInt::from(0);
        prop_assert_eq!(orientation(p, q, r), cross.cmp(&zero));
        prop_assert_eq!(collinear(p, q, r), cross == zero);
    }

    #[test]
    fn collinear_sets_cover_exactly(coords in prop::collection::btree_set((-3i64..4, -3i64..4), 0..18)) {
        let ps = PointSet::new(coords.into_iter().map(|(x, y)| Point::new(x, y)).collect()).unwrap();
        let lines = maximal_collinear_sets(&ps);
        let n = ps.len();

        prop_assert!(validate_linear(n, &lines).is_ok());
        let mut sorted = lines.clone();
        sorted.sort();
        prop_assert_eq!(&sorted, &lines);
        for line in &lines {
            prop_assert!(line.windows(2).all(|w| w[0] < w[1]));
        }

        let pts = ps.points();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let hits = lines
                        .iter()
                        .filter(|l| [i, j, k].iter().all(|v| l.binary_search(v).is_ok()))
                        .count();
                    let expected = usize::from(collinear(pts[i], pts[j], pts[k]));
                    prop_assert_eq!(hits, expected, "triple {:?}", (i, j, k));
                }
            }
        }
        // Maximality: no outside point lies on a reported line.
        for line in &lines {
            let members: BTreeSet<usize> = line.iter().copied().collect();
            for v in (0..n).filter(|v| !members.contains(v)) {
                prop_assert!(!collinear(pts[line[0]], pts[line[1]], pts[v]));
            }
        }
    }

    #[test]
    fn degrees_match_direct_count(coords in prop::collection::btree_set((-3i64..4, -3i64..4), 0..18)) {
        let ps = PointSet::new(coords.into_iter().map(|(x, y)| Point::new(x, y)).collect()).unwrap();
        let h = LinearHypergraph::from_points(&ps);
        let g = h.collinearity_graph();
        let stats = h.coll_stats();
        let pts = ps.points();
        for p in 0..ps.len() {
            // N(p): points sharing a line of three or more with p.
            let direct = (0..ps.len())
                .filter(|&q| q != p)
                .filter(|&q| (0..ps.len()).any(|r| r != p && r != q && collinear(pts[p], pts[q], pts[r])))
                .count();
            prop_assert_eq!(g.degree(p), direct);
            prop_assert_eq!(stats.coll_per_vertex[p], direct);
            let formula: usize = h.edges_of(p).iter().map(|&e| h.edges()[e].len() - 1).sum();
            prop_assert_eq!(formula, direct);
        }
        prop_assert_eq!(stats.coll_total, 2 * g.edge_count());
    }

    #[test]
    fn enumeration_is_deterministic(coords in prop::collection::vec((-5i64..5, -5i64..5), 0..15)) {
        let mut unique = BTreeSet::new();
        let pts: Vec<Point> = coords
            .into_iter()
            .filter(|c| unique.insert(*c))
            .map(|(x, y)| Point::new(x, y))
            .collect();
        let ps = PointSet::new(pts).unwrap();
        prop_assert_eq!(maximal_collinear_sets(&ps), maximal_collinear_sets(&ps.clone()));
    }
}

/// Coordinates for the eight-point example: `p` lies on `{p, q, r}` and
/// `{a, b, c, p}`, and two further points stay off every line through `p`.
fn figure_points() -> Vec<Point> {
    vec![
        Point::new(0, 0),  // p
        Point::new(1, 1),  // q
        Point::new(2, 2),  // r
        Point::new(0, 1),  // a
        Point::new(0, 2),  // b
        Point::new(0, 3),  // c
        Point::new(5, 17), // extra
        Point::new(11, -7),
    ]
}

#[test]
fn figure_configuration() {
    let ps = PointSet::new(figure_points()).unwrap();
    let h = LinearHypergraph::from_points(&ps);
    let through_p: Vec<&Vec<usize>> = h.edges_of(0).iter().map(|&e| &h.edges()[e]).collect();
    assert_eq!(through_p, vec![&vec![0, 1, 2], &vec![0, 3, 4, 5]]);
    assert_eq!(h.coll_stats().coll_per_vertex[0], 5);
    assert_eq!(h.collinearity_graph().degree(0), 5);
}
