//! Simple undirected graphs over dense vertex ids and the primitives the
//! convexity code is built on.

mod parse;
mod set;
mod traverse;

use std::fmt;

pub use parse::{parse_graph, ParseError, MAX_ORDER};
pub use set::{IdListError, VertexSet};
pub(crate) use traverse::bfs_path;
pub use traverse::{components, shortest_path_between_sets, two_color, NoPath, TwoColoring};

/// An immutable simple graph on vertices `0..n`.
///
/// Adjacency is stored both as sorted neighbor lists (for deterministic
/// traversal) and as bit sets (for set algebra).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    adj_sets: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {u}-{v} references a vertex outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, EdgeError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj_sets = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(EdgeError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(EdgeError::SelfLoop(u));
            }
            adj_sets[u].insert(v);
            adj_sets[v].insert(u);
        }
        let adj = adj_sets.iter().map(VertexSet::to_vec).collect();
        Ok(Self { adj, adj_sets })
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_edges(n, []).expect("no edges")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid clique")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor ids of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj_sets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj_sets[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, ids: I) -> VertexSet {
        VertexSet::from_ids(self.order(), ids)
    }

    /// Open neighborhood `N(X)`: vertices outside `x` adjacent to a member of `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in x.iter() {
            out.union_with(&self.adj_sets[v]);
        }
        out.difference_with(x);
        out
    }

    /// Closed neighborhood `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = x.clone();
        for v in x.iter() {
            out.union_with(&self.adj_sets[v]);
        }
        out
    }

    /// Inner frontier `F(A, B) = A ∩ N[B]`.
    pub fn frontier(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood(b);
        out.intersect_with(a);
        out
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        self.non_adjacent_pair(x).is_none()
    }

    /// Lexicographically smallest pair `(u, v)`, `u < v`, of non-adjacent
    /// members of `x`.
    pub fn non_adjacent_pair(&self, x: &VertexSet) -> Option<(usize, usize)> {
        for u in x.iter() {
            let mut missing = x.difference(&self.adj_sets[u]);
            missing.remove(u);
            let found = missing.iter().find(|&v| v > u);
            if let Some(v) = found {
                return Some((u, v));
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        components(self, &self.empty_set()).len() <= 1
    }

    /// The subgraph induced by `keep`, relabelled to `0..|keep|` in increasing
    /// id order, together with the local-to-global id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map = keep.to_vec();
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (local[u], local[v]));
        let sub = Graph::from_edges(map.len(), edges).expect("induced edges are valid");
        (sub, map)
    }

    /// Renders the graph in the edge-list text format accepted by
    /// [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::path(4)
    }

    fn c4() -> Graph {
        Graph::cycle(4)
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_edges(4, [(3, 0), (0, 1), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert_eq!(g.neighbors(3), &[0]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(EdgeError::SelfLoop(1)));
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(c4().neighborhood(&c4().set([0])).to_vec(), vec![1, 3]);
        assert!(p4().neighborhood(&p4().vertices()).is_empty());
        assert_eq!(p4().neighborhood(&p4().set([1])).to_vec(), vec![0, 2]);
        assert_eq!(p4().closed_neighborhood(&p4().set([1])).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn frontiers() {
        let g = p4();
        assert_eq!(g.frontier(&g.set([0, 1]), &g.set([2, 3])).to_vec(), vec![1]);
        assert_eq!(g.frontier(&g.set([0, 1]), &g.set([1])).to_vec(), vec![0, 1]);
        let g = c4();
        let x = g.set([0]);
        assert_eq!(g.frontier(&x.complement(), &x), g.neighborhood(&x));
        assert_eq!(g.frontier(&x.complement(), &x).to_vec(), vec![1, 3]);
    }

    #[test]
    fn cliques() {
        let g = c4();
        assert!(g.is_clique(&g.empty_set()));
        assert!(g.is_clique(&g.set([2])));
        assert!(g.is_clique(&g.set([0, 1])));
        assert!(!g.is_clique(&g.set([0, 2])));
        assert_eq!(g.non_adjacent_pair(&g.vertices()), Some((0, 2)));
        assert!(Graph::complete(5).is_clique(&VertexSet::full(5)));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::cycle(5);
        let (sub, map) = g.induced_subgraph(&g.set([1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5);
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }
}
