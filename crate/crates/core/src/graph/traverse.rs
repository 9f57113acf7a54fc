use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// Connected components of `G - removed`, ordered by smallest member.
pub fn components(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let mut unseen = removed.complement();
    let mut out = Vec::new();
    while let Some(root) = unseen.first() {
        let mut comp = g.empty_set();
        comp.insert(root);
        unseen.remove(root);
        let mut layer = comp.clone();
        // grow by whole neighborhoods, one BFS layer at a time
        while !layer.is_empty() {
            let mut next = g.empty_set();
            for v in layer.iter() {
                next.union_with(g.neighbor_set(v));
            }
            next.intersect_with(&unseen);
            unseen.difference_with(&next);
            comp.union_with(&next);
            layer = next;
        }
        out.push(comp);
    }
    out
}

/// The two sets lie in different components of the (restricted) graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no path between the given vertex sets")]
pub struct NoPath;

/// Multi-source BFS from `sources` to the nearest member of `targets`,
/// moving only through `allowed` (sources and targets are always allowed).
///
/// Vertices are expanded in queue order and neighbors scanned in increasing
/// id, so the parent of every vertex is its smallest-id discoverer.
pub(crate) fn bfs_path(
    g: &Graph,
    sources: &VertexSet,
    targets: &VertexSet,
    allowed: Option<&VertexSet>,
) -> Result<Vec<usize>, NoPath> {
    const NONE: usize = usize::MAX;
    let n = g.order();
    let mut parent = vec![NONE; n];
    let mut seen = sources.clone();
    let mut queue: VecDeque<usize> = sources.iter().collect();
    if let Some(t) = sources.iter().find(|&s| targets.contains(s)) {
        return Ok(vec![t]);
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if seen.contains(w) {
                continue;
            }
            let is_target = targets.contains(w);
            if !is_target && allowed.is_some_and(|a| !a.contains(w)) {
                continue;
            }
            seen.insert(w);
            parent[w] = v;
            if is_target {
                let mut path = vec![w];
                let mut cur = w;
                while parent[cur] != NONE {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Ok(path);
            }
            queue.push_back(w);
        }
    }
    Err(NoPath)
}

/// A shortest path `a = v_1, ..., v_k = b` from some `a ∈ a_set` to some
/// `b ∈ b_set`.
///
/// Deterministic: BFS from all of `a_set` at once with smallest-id
/// tie-breaking. Shortest paths are chordless.
pub fn shortest_path_between_sets(g: &Graph, a_set: &VertexSet, b_set: &VertexSet) -> Result<Vec<usize>, NoPath> {
    let path = bfs_path(g, a_set, b_set, None)?;
    debug_assert!(is_chordless(g, &path));
    Ok(path)
}

pub(crate) fn is_chordless(g: &Graph, path: &[usize]) -> bool {
    path.iter().enumerate().all(|(i, &u)| {
        path[i + 1..]
            .iter()
            .enumerate()
            .all(|(off, &v)| (off == 0) == g.has_edge(u, v))
    })
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    /// A proper coloring, one entry (0 or 1) per vertex.
    Proper(Vec<u8>),
    /// A closed walk of odd length witnessing non-bipartiteness; consecutive
    /// entries (and the last with the first) are adjacent.
    OddCycle(Vec<usize>),
}

impl TwoColoring {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Self::Proper(_))
    }

    pub fn colors(&self) -> Option<&[u8]> {
        match self {
            Self::Proper(c) => Some(c),
            Self::OddCycle(_) => None,
        }
    }
}

/// BFS 2-coloring. Each component is rooted at its smallest vertex, which
/// gets color 0.
pub fn two_color(g: &Graph) -> TwoColoring {
    const NONE: usize = usize::MAX;
    let n = g.order();
    let mut color: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![NONE; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are colored");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - cv);
                        parent[w] = v;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return TwoColoring::OddCycle(odd_cycle(&parent, v, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    TwoColoring::Proper(color.into_iter().map(|c| c.expect("all colored")).collect())
}

/// Joins the tree paths of the same-colored endpoints `u`, `w` at their
/// lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let mut pu = to_root(u);
    let mut pw = to_root(w);
    // strip the shared suffix, keeping the common ancestor on pu
    let mut lca = *pu.last().expect("non-empty");
    while pu.len() > 1 && pw.len() > 1 && pu[pu.len() - 2] == pw[pw.len() - 2] {
        pu.pop();
        pw.pop();
        lca = *pu.last().expect("non-empty");
    }
    pw.pop();
    debug_assert_eq!(*pu.last().unwrap(), lca);
    pu.reverse();
    pu.extend(pw);
    pu
}
