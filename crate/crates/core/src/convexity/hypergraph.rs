//! 3-uniform hypergraphs, their text format, and the hull operator that turns
//! 2-coloring into half-space separation.

use serde::Serialize;

use super::HullOracle;
use crate::graph::VertexSet;
use crate::{check_cap, CapExceeded};

/// Largest vertex count accepted by the parser.
pub const MAX_HYPERGRAPH_ORDER: usize = 1 << 16;

/// Default vertex cap for [`two_colorable`].
pub const COLORING_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypergraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {id} out of range for {n} vertices")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: edge repeats vertex {vertex}")]
    RepeatedMember { line: usize, vertex: usize },
    #[error("line {line}: {n} vertices exceeds the limit of {MAX_HYPERGRAPH_ORDER}")]
    TooLarge { line: usize, n: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("hypergraph has no edges")]
    NoEdges,
}

/// A 3-uniform hypergraph with at least one edge. Edge members are stored
/// sorted; the edge list keeps input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self, HypergraphError> {
        let mut out = Vec::new();
        for (i, e) in edges.into_iter().enumerate() {
            out.push(check_edge(n, e, i + 1)?);
        }
        if out.is_empty() {
            return Err(HypergraphError::NoEdges);
        }
        Ok(Self { n, edges: out })
    }

    /// The Fano plane: 7 points, 7 lines, not 2-colorable.
    pub fn fano() -> Self {
        Self::new(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .expect("valid lines")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// Some edge lies inside `x`.
    pub fn includes_edge(&self, x: &VertexSet) -> bool {
        self.edges.iter().any(|e| e.iter().all(|&v| x.contains(v)))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for [u, v, w] in &self.edges {
            s.push_str(&format!("{u} {v} {w}\n"));
        }
        s
    }
}

fn check_edge(n: usize, mut e: [usize; 3], line: usize) -> Result<[usize; 3], HypergraphError> {
    if let Some(&id) = e.iter().find(|&&v| v >= n) {
        return Err(HypergraphError::OutOfRange { line, id, n });
    }
    e.sort_unstable();
    if e[0] == e[1] || e[1] == e[2] {
        return Err(HypergraphError::RepeatedMember { line, vertex: e[1] });
    }
    Ok(e)
}

/// Parses `n m` followed by `m` lines of three vertex ids. Blank lines are
/// skipped; errors carry 1-based line numbers.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3, HypergraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(HypergraphError::Malformed {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let nums = parse_numbers(header, hline)?;
    let [n, m] = nums[..] else {
        return Err(HypergraphError::Malformed {
            line: hline,
            message: format!("header needs 2 numbers, found {}", nums.len()),
        });
    };
    if n > MAX_HYPERGRAPH_ORDER {
        return Err(HypergraphError::TooLarge { line: hline, n });
    }
    let mut edges = Vec::with_capacity(m.min(1 << 16));
    for (line, body) in lines {
        if edges.len() == m {
            return Err(HypergraphError::Malformed {
                line,
                message: format!("more than the {m} announced edges"),
            });
        }
        let nums = parse_numbers(body, line)?;
        let [u, v, w] = nums[..] else {
            return Err(HypergraphError::Malformed {
                line,
                message: format!("edge needs 3 vertices, found {}", nums.len()),
            });
        };
        edges.push(check_edge(n, [u, v, w], line)?);
    }
    if edges.len() != m {
        return Err(HypergraphError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    if edges.is_empty() {
        return Err(HypergraphError::NoEdges);
    }
    Ok(Hypergraph3 { n, edges })
}

fn parse_numbers(body: &str, line: usize) -> Result<Vec<usize>, HypergraphError> {
    body.split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| HypergraphError::Malformed {
                line,
                message: format!("not a vertex id: {t:?}"),
            })
        })
        .collect()
}

/// The operator on `V ∪ {a, b}` (with `a = n`, `b = n + 1`) that adds `a` and
/// `b` to any set containing an edge and fixes every other set.
#[derive(Debug, Clone, Copy)]
pub struct HypergraphHull<'h> {
    pub hypergraph: &'h Hypergraph3,
}

impl HypergraphHull<'_> {
    pub fn a(&self) -> usize {
        self.hypergraph.order()
    }

    pub fn b(&self) -> usize {
        self.hypergraph.order() + 1
    }
}

impl HullOracle for HypergraphHull<'_> {
    fn ground_size(&self) -> usize {
        self.hypergraph.order() + 2
    }

    fn hull(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        if self.hypergraph.includes_edge(x) {
            out.insert(self.a());
            out.insert(self.b());
        }
        out
    }
}

pub fn hypergraph_hull(h3: &Hypergraph3) -> HypergraphHull<'_> {
    HypergraphHull { hypergraph: h3 }
}

/// Whether the vertices split into two sets with no monochromatic edge, by
/// exhaustive search. Vertex 0 is pinned to color 0.
pub fn two_colorable(h3: &Hypergraph3) -> Result<bool, CapExceeded> {
    check_cap(h3.order(), COLORING_CAP)?;
    let n = h3.order();
    let masks: Vec<u32> = h3
        .edges()
        .iter()
        .map(|e| e.iter().fold(0, |m, &v| m | 1 << v))
        .collect();
    let half = if n == 0 { 1 } else { 1u32 << (n - 1) };
    Ok((0..half).any(|c| {
        let coloring = c << 1;
        masks.iter().all(|&e| {
            let on = coloring & e;
            on != 0 && on != e
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reports_lines() {
        let h = parse_hypergraph("4 2\n0 1 2\n\n3 2 1\n").unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [1, 2, 3]]);
        assert_eq!(parse_hypergraph(&h.to_text()).unwrap(), h);

        let err = parse_hypergraph("3 1\n0 1").unwrap_err();
        assert!(matches!(err, HypergraphError::Malformed { line: 2, .. }));
        let err = parse_hypergraph("3 1\n0 1 3").unwrap_err();
        assert_eq!(err, HypergraphError::OutOfRange { line: 2, id: 3, n: 3 });
        let err = parse_hypergraph("3 1\n0 1 1").unwrap_err();
        assert_eq!(err, HypergraphError::RepeatedMember { line: 2, vertex: 1 });
        assert_eq!(parse_hypergraph("3 0").unwrap_err(), HypergraphError::NoEdges);
        assert!(matches!(
            parse_hypergraph("3 2\n0 1 2"),
            Err(HypergraphError::EdgeCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_hypergraph(""),
            Err(HypergraphError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            parse_hypergraph("3 x"),
            Err(HypergraphError::Malformed { .. })
        ));
    }

    #[test]
    fn hull_examples() {
        let h = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        let o = hypergraph_hull(&h);
        assert_eq!(o.ground_size(), 5);
        let set = |ids: &[usize]| VertexSet::from_ids(5, ids.iter().copied());
        assert_eq!(o.hull(&set(&[0, 1, 2])), set(&[0, 1, 2, 3, 4]));
        assert_eq!(o.hull(&set(&[0, 1])), set(&[0, 1]));
        assert!(o.hull(&set(&[])).is_empty());
    }

    #[test]
    fn colorability() {
        assert!(two_colorable(&Hypergraph3::new(3, [[0, 1, 2]]).unwrap()).unwrap());
        assert!(two_colorable(&Hypergraph3::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap()).unwrap());
        assert!(!two_colorable(&Hypergraph3::fano()).unwrap());
        let big = Hypergraph3::new(23, [[0, 1, 2]]).unwrap();
        assert!(two_colorable(&big).is_err());
    }

    #[test]
    fn fano_exhaustively_has_no_proper_coloring() {
        // independent of two_colorable: count colorings over all 2^7 masks
        let f = Hypergraph3::fano();
        let proper = (0u32..128)
            .filter(|c| {
                f.edges().iter().all(|e| {
                    let k = e.iter().filter(|&&v| c >> v & 1 == 1).count();
                    k == 1 || k == 2
                })
            })
            .count();
        assert_eq!(proper, 0);
    }
}
