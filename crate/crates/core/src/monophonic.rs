//! Monophonic intervals, convexity and the hull operator.
//!
//! `J[u, v]` is the set of vertices lying on some chordless `u`–`v` path. A set
//! `C` is convex when `J[u, v] ⊆ C` for all `u, v ∈ C`, and `cl(X)` is the
//! smallest convex set containing `X`.
//!
//! The polynomial routines here ([`is_convex`], [`hull`]) never compute `J`
//! directly. They rely on the frontier criterion: on a connected graph, `C` is
//! convex iff for every component `S` of `G - C` the vertices of `C` adjacent
//! to `S` form a clique. The exhaustive routines ([`interval_oracle`],
//! [`hull_oracle`], [`is_convex_oracle`]) enumerate chordless paths and exist
//! to cross-check the polynomial ones on small graphs.

use serde::Serialize;

use crate::graph::{bfs_path, components, Graph, VertexSet};
use crate::{check_cap, CapExceeded};

/// Default vertex cap for the path-enumerating oracles.
pub const ORACLE_CAP: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HullError {
    #[error("input set spans {0} connected components; reduce per component first")]
    SpansComponents(usize),
}

/// One repair step of [`hull`]: the component of `G - C` whose frontier was
/// not a clique, the non-adjacent frontier pair chosen, and the interior of
/// the chordless path through the component that was added to `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullStep {
    pub component: VertexSet,
    pub pair: (usize, usize),
    pub added: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HullTrace {
    pub steps: Vec<HullStep>,
}

/// All vertices on a chordless `u`–`v` path, by exhaustive enumeration.
/// Refuses graphs with more than [`ORACLE_CAP`] vertices.
pub fn interval_oracle(g: &Graph, u: usize, v: usize) -> Result<VertexSet, CapExceeded> {
    interval_oracle_with_cap(g, u, v, ORACLE_CAP)
}

pub fn interval_oracle_with_cap(g: &Graph, u: usize, v: usize, cap: usize) -> Result<VertexSet, CapExceeded> {
    check_cap(g.order(), cap)?;
    let mut found = g.empty_set();
    if u == v {
        found.insert(u);
        return Ok(found);
    }
    let mut path = vec![u];
    let mut on_path = g.set([u]);
    extend_induced(g, v, &mut path, &mut on_path, &g.empty_set(), &mut found);
    Ok(found)
}

/// Depth-first extension of the induced path `path` towards `target`.
/// `blocked` is the closed neighborhood of every path vertex except the last;
/// a vertex in it would create a chord.
fn extend_induced(
    g: &Graph,
    target: usize,
    path: &mut Vec<usize>,
    on_path: &mut VertexSet,
    blocked: &VertexSet,
    found: &mut VertexSet,
) {
    let last = *path.last().expect("path starts non-empty");
    if g.has_edge(last, target) {
        // any other continuation would leave the chord last–target
        found.union_with(on_path);
        found.insert(target);
        return;
    }
    let mut next_blocked = blocked.clone();
    next_blocked.union_with(g.neighbor_set(last));
    next_blocked.insert(last);
    for &w in g.neighbors(last) {
        if blocked.contains(w) || on_path.contains(w) {
            continue;
        }
        path.push(w);
        on_path.insert(w);
        extend_induced(g, target, path, on_path, &next_blocked, found);
        on_path.remove(w);
        path.pop();
    }
}

/// `J[X]`, the union of `J[u, v]` over all pairs of members.
pub fn interval_of_set(g: &Graph, x: &VertexSet, cap: usize) -> Result<VertexSet, CapExceeded> {
    check_cap(g.order(), cap)?;
    let members = x.to_vec();
    let mut out = x.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                out.union_with(&interval_oracle_with_cap(g, u, v, cap)?);
            }
        }
    }
    Ok(out)
}

/// Convexity by the frontier criterion: every component of `G - C` must see
/// a clique in `C`. The empty set and `V` are convex.
///
/// On a disconnected graph this checks convexity inside every component, which
/// matches the definition (no chordless path joins two components).
pub fn is_convex(g: &Graph, c: &VertexSet) -> bool {
    if c.is_empty() || c.len() == g.order() {
        return true;
    }
    components(g, c).iter().all(|s| g.is_clique(&g.neighborhood(s)))
}

/// Convexity by definition, `J[C] = C`, via path enumeration.
pub fn is_convex_oracle(g: &Graph, c: &VertexSet, cap: usize) -> Result<bool, CapExceeded> {
    Ok(interval_of_set(g, c, cap)? == *c)
}

/// The convex hull `cl(X)` together with the repair steps that produced it.
///
/// Starting from `C = X`, repeatedly take the first component `S` of `G - C`
/// (by smallest member) whose frontier in `C` is not a clique, take the
/// lexicographically smallest non-adjacent frontier pair `(u, v)`, and add the
/// interior of a shortest `u`–`v` path through `S`. That path is chordless in
/// `G`, so everything added lies in `cl(X)`; the loop stops once `C` is convex.
///
/// `X` must lie within one connected component of `g`.
pub fn hull(g: &Graph, x: &VertexSet) -> Result<(VertexSet, HullTrace), HullError> {
    let touched = components(g, &g.empty_set())
        .iter()
        .filter(|comp| comp.intersects(x))
        .count();
    if touched > 1 {
        return Err(HullError::SpansComponents(touched));
    }
    let mut trace = HullTrace::default();
    let c = repair_fixpoint(g, x, Some(&mut trace));
    Ok((c, trace))
}

/// [`hull`] without the connectivity check or trace. On a disconnected graph
/// the result is the union of the per-component hulls.
pub(crate) fn closure(g: &Graph, x: &VertexSet) -> VertexSet {
    repair_fixpoint(g, x, None)
}

fn repair_fixpoint(g: &Graph, x: &VertexSet, mut trace: Option<&mut HullTrace>) -> VertexSet {
    let mut c = x.clone();
    if c.is_empty() {
        return c;
    }
    'repair: loop {
        for s in components(g, &c) {
            let frontier = g.neighborhood(&s);
            let Some((u, v)) = g.non_adjacent_pair(&frontier) else {
                continue;
            };
            let path = bfs_path(g, &g.set([u]), &g.set([v]), Some(&s))
                .expect("frontier vertices of a component are joined through it");
            let interior = &path[1..path.len() - 1];
            debug_assert!(!interior.is_empty());
            for &w in interior {
                c.insert(w);
            }
            if let Some(t) = trace.as_deref_mut() {
                t.steps.push(HullStep {
                    component: s,
                    pair: (u, v),
                    added: interior.to_vec(),
                });
            }
            continue 'repair;
        }
        return c;
    }
}

/// `cl(X)` by iterating `X ← J[X]` to a fixpoint with path enumeration.
/// Refuses graphs with more than `cap` vertices.
pub fn hull_oracle(g: &Graph, x: &VertexSet, cap: usize) -> Result<VertexSet, CapExceeded> {
    check_cap(g.order(), cap)?;
    let mut cur = x.clone();
    loop {
        let next = interval_of_set(g, &cur, cap)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}
