//! Text formats for point sets, hypergraphs and vertex subsets.
//!
//! All formats skip blank lines and lines starting with `#`.
//!
//! * Points: one `x y` pair per line. A point's index is its position among
//!   the data lines.
//! * Hypergraph: a header `n m`, then `m` lines `k i1 ... ik`.
//! * Subset: vertex indices separated by whitespace, any number per line.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::geometry::{GeometryError, Point, PointSet};
use crate::hypergraph::{HypergraphError, LinearHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{cause} (lines {first_line} and {second_line})")]
    Duplicate {
        cause: GeometryError,
        first_line: usize,
        second_line: usize,
    },
    #[error("{cause} ({context})")]
    Invalid {
        cause: HypergraphError,
        context: String,
    },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// `(1-based line number, trimmed content)` for every data line.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_field<T: FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, FormatError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse_points(text: &str) -> Result<PointSet, FormatError> {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for (line, content) in data_lines(text) {
        let mut toks = content.split_whitespace();
        let x = parse_field(line, toks.next(), "x coordinate")?;
        let y = parse_field(line, toks.next(), "y coordinate")?;
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token `{extra}`")));
        }
        points.push(Point::new(x, y));
        lines.push(line);
    }
    PointSet::new(points).map_err(|cause| match cause {
        GeometryError::DuplicatePoints { first, second } => FormatError::Duplicate {
            cause,
            first_line: lines[first],
            second_line: lines[second],
        },
    })
}

pub fn write_points(ps: &PointSet) -> String {
    let mut out = String::new();
    for p in ps.points() {
        writeln!(out, "{} {}", p.x, p.y).unwrap();
    }
    out
}

/// Edges may come in any order; the result is canonical.
pub fn parse_hypergraph(text: &str) -> Result<LinearHypergraph, FormatError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let mut toks = header.split_whitespace();
    let n: usize = parse_field(header_line, toks.next(), "vertex count")?;
    let m: usize = parse_field(header_line, toks.next(), "edge count")?;
    if let Some(extra) = toks.next() {
        return Err(parse_err(header_line, format!("unexpected token `{extra}`")));
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the {m} declared edges")));
        }
        let mut toks = content.split_whitespace();
        let k: usize = parse_field(line, toks.next(), "edge size")?;
        let edge = toks
            .map(|t| parse_field(line, Some(t), "vertex index"))
            .collect::<Result<Vec<usize>, _>>()?;
        if edge.len() != k {
            return Err(parse_err(
                line,
                format!("edge declares {k} vertices but lists {}", edge.len()),
            ));
        }
        edges.push(edge);
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges but {} follow", edges.len()),
        ));
    }

    LinearHypergraph::new(n, edges).map_err(|cause| {
        let context = match cause {
            HypergraphError::NonLinear(i, j) => {
                format!("lines {} and {}", edge_lines[i], edge_lines[j])
            }
            HypergraphError::EdgeTooSmall(i)
            | HypergraphError::IndexOutOfRange(i)
            | HypergraphError::DuplicateVertex(i) => format!("line {}", edge_lines[i]),
            HypergraphError::Geometry(_) => String::new(),
        };
        FormatError::Invalid { cause, context }
    })
}

pub fn write_hypergraph(h: &LinearHypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edges().len());
    for edge in h.edges() {
        write!(out, "{}", edge.len()).unwrap();
        for v in edge {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_subset(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut out = Vec::new();
    for (line, content) in data_lines(text) {
        for tok in content.split_whitespace() {
            out.push(parse_field(line, Some(tok), "vertex index")?);
        }
    }
    Ok(out)
}

pub fn write_subset(members: &[usize]) -> String {
    let mut out = String::new();
    for v in members {
        writeln!(out, "{v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let text = "# a comment\n0 0\n-5 7\n\n9223372036854775807 -9223372036854775808\n";
        let ps = parse_points(text).unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps.get(1), Some(Point::new(-5, 7)));
        assert_eq!(parse_points(&write_points(&ps)).unwrap(), ps);
    }

    #[test]
    fn points_errors() {
        assert_eq!(
            parse_points("0 0\n1 x\n"),
            Err(parse_err(2, "bad y coordinate `x`"))
        );
        assert_eq!(parse_points("0\n"), Err(parse_err(1, "missing y coordinate")));
        let dup = parse_points("0 0\n# c\n1 1\n0 0\n").unwrap_err();
        assert!(matches!(dup, FormatError::Duplicate { first_line: 1, second_line: 4, .. }));
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = parse_hypergraph("# demo\n6 2\n3 5 4 0\n3 2 1 0\n").unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![0, 4, 5]]);
        assert_eq!(write_hypergraph(&h), "6 2\n3 0 1 2\n3 0 4 5\n");
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn hypergraph_errors() {
        let err = parse_hypergraph("4 2\n3 0 1 2\n3 0 1 3\n").unwrap_err();
        assert_eq!(err.to_string(), "edges 0 and 1 share more than one vertex (lines 2 and 3)");
        assert!(parse_hypergraph("4 1\n2 0 1\n").is_err());
        assert!(parse_hypergraph("4 1\n3 0 1\n").is_err());
        assert!(parse_hypergraph("4 2\n3 0 1 2\n").is_err());
        assert!(parse_hypergraph("").is_err());
    }

    #[test]
    fn subsets() {
        assert_eq!(parse_subset("# s\n0 4\n7\n").unwrap(), vec![0, 4, 7]);
        assert_eq!(write_subset(&[1, 2]), "1\n2\n");
        assert!(parse_subset("1 -2").is_err());
    }
}
