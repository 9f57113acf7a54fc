use super::{EdgeError, Graph};

/// Largest vertex count the parser accepts. Adjacency is kept as one bit set
/// per vertex, so memory grows quadratically in `n`.
pub const MAX_ORDER: usize = 20_000;

/// Error raised while reading the edge-list format. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex id {id} out of range 0..{n}")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: {n} vertices exceeds the supported maximum of {max}", max = MAX_ORDER)]
    TooLarge { line: usize, n: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            Self::Malformed { line, .. }
            | Self::OutOfRange { line, .. }
            | Self::SelfLoop { line, .. }
            | Self::TooLarge { line, .. } => Some(*line),
            Self::EdgeCount { .. } => None,
        }
    }
}

/// Reads a graph from the edge-list format:
///
/// ```text
/// n m
/// u v      (m lines, 0 <= u, v < n)
/// ```
///
/// Blank lines are skipped. Duplicate edges are merged; self-loops are an
/// error.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;
    if n > MAX_ORDER {
        return Err(ParseError::TooLarge { line: header_line, n });
    }

    let mut edges = Vec::with_capacity(m.min(1 << 16));
    for (line, text) in lines {
        if edges.len() == m {
            return Err(ParseError::Malformed {
                line,
                message: format!("more than the {m} announced edges"),
            });
        }
        let [u, v] = parse_pair(line, text)?;
        for id in [u, v] {
            if id >= n {
                return Err(ParseError::OutOfRange { line, id, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, edges).map_err(|e| match e {
        // unreachable after the per-line checks
        EdgeError::SelfLoop(vertex) => ParseError::SelfLoop { line: 0, vertex },
        EdgeError::OutOfRange { u, n, .. } => ParseError::OutOfRange { line: 0, id: u, n },
    })
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = fields.next().ok_or_else(|| ParseError::Malformed {
            line,
            message: format!("expected two integers, found {text:?}"),
        })?;
        tok.parse().map_err(|_| ParseError::Malformed {
            line,
            message: format!("{tok:?} is not a non-negative integer"),
        })
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(ParseError::Malformed {
            line,
            message: format!("expected two integers, found {text:?}"),
        });
    }
    Ok(pair)
}
