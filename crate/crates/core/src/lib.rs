//! General position subset selection.
//!
//! Given points in the plane, or directly the linear hypergraph of their
//! collinearity relations, find large subsets with no three members on a line.
//!
//! ```
//! use gpss_core::{algorithms, generator, LinearHypergraph};
//!
//! let grid = generator::gen_grid(3, 3).unwrap();
//! let h = LinearHypergraph::from_points(&grid);
//! let s = algorithms::inc_min(&h);
//! assert!(h.is_general_position(&s.members));
//! ```

pub mod algorithms;
pub mod generator;
pub mod geometry;
pub mod graph;
pub mod hypergraph;
pub mod io;

pub use algorithms::{Algorithm, GpSubset, Order, Verdict};
pub use geometry::{Point, PointSet};
pub use graph::Graph;
pub use hypergraph::{CollStats, CollinearityGraph, LinearHypergraph};

/// Exact rational used for every bound comparison.
pub type Rational = num_rational::Ratio<i64>;

/// Decimal rendering of `r` rounded half away from zero to `places` digits.
pub fn format_decimal(r: Rational, places: u32) -> String {
    let scale = 10i128.pow(places);
    let numer = *r.numer() as i128 * scale;
    let denom = *r.denom() as i128;
    let negative = (numer < 0) != (denom < 0) && numer != 0;
    let (numer, denom) = (numer.abs(), denom.abs());
    let scaled = (2 * numer + denom) / (2 * denom);
    let int = scaled / scale;
    let frac = scaled % scale;
    let sign = if negative && scaled != 0 { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0width$}", width = places as usize)
    }
}
