//! The equivalence `≡_AB` on the free vertices and the class graph `G_AB`.
//!
//! For every component `S` of `G - N[A ∪ B]`, all of `N[S]` must end up on
//! one side of any separation. Chaining components that share a neighbor
//! gives the classes; vertices of `N(A ∪ B)` touching no such component are
//! singleton classes.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::{ForbiddenSet, SeparationError};
use crate::graph::{components, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    /// Classes ordered by smallest member.
    pub classes: Vec<VertexSet>,
    /// Class index of every vertex; `None` on `A ∪ B`.
    #[serde(skip)]
    class_of: Vec<Option<usize>>,
}

impl ClassPartition {
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Union of the classes whose index satisfies `pick`.
    pub fn union_where(&self, n: usize, mut pick: impl FnMut(usize) -> bool) -> VertexSet {
        let mut out = VertexSet::empty(n);
        for (i, c) in self.classes.iter().enumerate() {
            if pick(i) {
                out.union_with(c);
            }
        }
        out
    }
}

/// Computes the classes of `≡_AB` on `V \ (A ∪ B)` with a union-find over
/// the closed neighborhoods of the components of `G - N[A ∪ B]`.
pub fn equivalence_classes(g: &Graph, a: &VertexSet, b: &VertexSet) -> ClassPartition {
    let n = g.order();
    let ab = a.union(b);
    let far = components(g, &g.closed_neighborhood(&ab));

    let mut uf = UnionFind::<usize>::new(n);
    for s in &far {
        let closed = g.closed_neighborhood(s);
        let root = closed.first().expect("components are non-empty");
        for v in closed.iter() {
            uf.union(root, v);
        }
    }

    let mut class_of = vec![None; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut index_of_root = vec![usize::MAX; n];
    // free vertices in increasing order, so classes come out sorted by
    // smallest member
    for v in ab.complement().iter() {
        let r = uf.find(v);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = classes.len();
            classes.push(VertexSet::empty(n));
        }
        let i = index_of_root[r];
        classes[i].insert(v);
        class_of[v] = Some(i);
    }
    ClassPartition { classes, class_of }
}

/// `G_AB`: one node per class, an edge between two distinct classes whenever
/// a forbidden pair has one end in each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGraph {
    pub graph: Graph,
}

impl ClassGraph {
    pub fn node_count(&self) -> usize {
        self.graph.order()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges().collect()
    }
}

/// Builds `G_AB`. Every forbidden set must be a pair, which holds on
/// saturated instances.
pub fn class_graph(partition: &ClassPartition, mfs: &[ForbiddenSet]) -> Result<ClassGraph, SeparationError> {
    let mut edges = Vec::new();
    for x in mfs {
        let (u, v) = x.as_pair().ok_or_else(|| {
            SeparationError::Precondition(format!(
                "forbidden set {} is not a pair; the instance is not saturated",
                x.members
            ))
        })?;
        let (cu, cv) = match (partition.class_of(u), partition.class_of(v)) {
            (Some(cu), Some(cv)) => (cu, cv),
            _ => {
                return Err(SeparationError::Precondition(format!(
                    "forbidden pair ({u}, {v}) is not made of free vertices"
                )))
            }
        };
        if cu != cv {
            edges.push((cu, cv));
        }
    }
    let graph = Graph::from_edges(partition.len(), edges).expect("class ids in range, no loops");
    Ok(ClassGraph { graph })
}
