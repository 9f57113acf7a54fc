//! Deciding whether two vertex sets are separated by monophonic half-spaces.
//!
//! The pipeline for one connected component:
//!
//! 1. Replace `A`, `B` by their hulls; they must stay disjoint.
//! 2. Take a shortest `A`–`B` path `v_1..v_k` and, for each split point `i`,
//!    the linked pair `cl(A ∪ v_1..v_i)`, `cl(B ∪ v_{i+1}..v_k)`. In every
//!    separation the path is cut exactly once, so `A`, `B` are separable iff
//!    one of these pairs is.
//! 3. Saturate the pair: repeatedly add to each side whatever the hull
//!    operator forces there (shadows and minimal forbidden sets).
//! 4. On the saturated pair, group the free vertices into classes that must
//!    move together and join two classes when a forbidden pair straddles
//!    them. The pair is separable iff no class holds a forbidden pair and the
//!    class graph is bipartite; a 2-coloring of the class graph gives the
//!    witness.
//!
//! Every witness is re-checked with [`verify_witness`] before it is returned.

mod classes;
mod saturation;

use serde::Serialize;

use crate::graph::{components, two_color, Graph, TwoColoring, VertexSet};
use crate::monophonic::is_convex;
use crate::{check_cap, CapExceeded};

pub use classes::{class_graph, equivalence_classes, ClassGraph, ClassPartition};
pub(crate) use saturation::Hulls;
pub use saturation::{
    linkage_candidates, minimal_forbidden_sets, presaturate, saturate, shadow, ForbiddenSet, Linkage, LinkageCandidate,
    Saturation,
};

/// Default vertex cap for [`separable_oracle`].
pub const SEPARATION_ORACLE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeparationError {
    #[error("set {0:?} must be non-empty")]
    EmptySet(Side),
    #[error("vertex set over {found} vertices used with a graph of {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A structural guarantee of saturated instances failed to hold. This is a
    /// bug, not an input problem.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Why a pair of sets (or one linkage candidate) cannot be separated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureReason {
    /// The input sets share vertices.
    Overlap { vertices: Vec<usize> },
    /// `cl(A)` and `cl(B)` share vertices.
    HullsIntersect { vertices: Vec<usize> },
    /// The two sides of this linkage candidate already share vertices.
    IntersectingLinkage,
    /// Saturation drove the two sides into each other.
    IntersectingSaturation,
    /// A forbidden pair lies inside one equivalence class.
    InClassForbiddenPair { pair: (usize, usize) },
    /// The class graph has an odd cycle, listed by each class's smallest
    /// vertex.
    OddCycle { cycle: Vec<usize> },
}

impl FailureReason {
    fn relabel(self, map: &[usize]) -> Self {
        let ids = |v: Vec<usize>| v.into_iter().map(|x| map[x]).collect();
        match self {
            Self::Overlap { vertices } => Self::Overlap {
                vertices: ids(vertices),
            },
            Self::HullsIntersect { vertices } => Self::HullsIntersect {
                vertices: ids(vertices),
            },
            Self::InClassForbiddenPair { pair } => Self::InClassForbiddenPair {
                pair: (map[pair.0], map[pair.1]),
            },
            Self::OddCycle { cycle } => Self::OddCycle { cycle: ids(cycle) },
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateTrace {
    /// Split position `i` on the linking path (1-based).
    pub index: usize,
    /// Saturation rounds run; 0 when the candidate failed before saturating.
    pub rounds: usize,
    /// `None` when this candidate produced the witness.
    pub failure: Option<FailureReason>,
}

/// Decision trace for one connected component that meets both `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTrace {
    pub vertices: Vec<usize>,
    /// The shortest path between the hulls of `A` and `B` used for linkage.
    pub path: Vec<usize>,
    /// Candidates in evaluation order (highest split index first).
    pub candidates: Vec<CandidateTrace>,
    /// Split index of the successful candidate.
    pub chosen: Option<usize>,
    /// Set when the component failed before linkage.
    pub failure: Option<FailureReason>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SeparationTrace {
    /// Set when the inputs themselves overlap.
    pub failure: Option<FailureReason>,
    pub components: Vec<ComponentTrace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationResult {
    pub separable: bool,
    /// The half-space `H ⊇ A`; its complement contains `B`.
    pub witness: Option<VertexSet>,
    pub trace: SeparationTrace,
}

impl SeparationResult {
    pub fn complement(&self) -> Option<VertexSet> {
        self.witness.as_ref().map(VertexSet::complement)
    }
}

/// `H` is a half-space separating `A` from `B`: `A ⊆ H`, `B ∩ H = ∅`, and both
/// `H` and `V \ H` are convex.
pub fn verify_witness(g: &Graph, a: &VertexSet, b: &VertexSet, h: &VertexSet) -> bool {
    h.universe() == g.order() && a.is_subset(h) && b.is_disjoint(h) && is_convex(g, h) && is_convex(g, &h.complement())
}

fn check_universe(g: &Graph, x: &VertexSet) -> Result<(), SeparationError> {
    if x.universe() != g.order() {
        return Err(SeparationError::UniverseMismatch {
            expected: g.order(),
            found: x.universe(),
        });
    }
    Ok(())
}

/// A validated problem instance: non-empty, disjoint `A` and `B` over the
/// vertices of `graph`.
#[derive(Debug, Clone)]
pub struct SeparationInstance<'g> {
    pub graph: &'g Graph,
    pub a: VertexSet,
    pub b: VertexSet,
}

impl<'g> SeparationInstance<'g> {
    pub fn new(graph: &'g Graph, a: VertexSet, b: VertexSet) -> Result<Self, SeparationError> {
        check_universe(graph, &a)?;
        check_universe(graph, &b)?;
        if a.is_empty() {
            return Err(SeparationError::EmptySet(Side::A));
        }
        if b.is_empty() {
            return Err(SeparationError::EmptySet(Side::B));
        }
        if a.intersects(&b) {
            return Err(SeparationError::Precondition(format!(
                "sets A and B share {}",
                a.intersection(&b)
            )));
        }
        Ok(Self { graph, a, b })
    }

    pub fn decide(&self) -> Result<SeparationResult, SeparationError> {
        decide(self.graph, &self.a, &self.b)
    }
}

/// Decides whether `A` and `B` are half-space separable and, if so, returns a
/// verified witness.
///
/// Works on disconnected graphs: components meeting both sets are decided
/// independently, components meeting only `B` go to the complement, and all
/// other components go to `H`. Overlapping inputs are reported as not
/// separable; empty inputs are an error.
pub fn decide(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<SeparationResult, SeparationError> {
    check_universe(g, a)?;
    check_universe(g, b)?;
    if a.is_empty() {
        return Err(SeparationError::EmptySet(Side::A));
    }
    if b.is_empty() {
        return Err(SeparationError::EmptySet(Side::B));
    }
    if a.intersects(b) {
        return Ok(SeparationResult {
            separable: false,
            witness: None,
            trace: SeparationTrace {
                failure: Some(FailureReason::Overlap {
                    vertices: a.intersection(b).to_vec(),
                }),
                components: Vec::new(),
            },
        });
    }

    let mut h = g.empty_set();
    let mut traces = Vec::new();
    let mut separable = true;
    let parts = components(g, &g.empty_set());
    let single = parts.len() == 1;
    for part in parts {
        let (pa, pb) = (part.intersection(a), part.intersection(b));
        if pb.is_empty() {
            h.union_with(&part);
            continue;
        }
        if pa.is_empty() {
            continue;
        }
        let (sub, map, la, lb) = if single {
            (g.clone(), (0..g.order()).collect(), pa, pb)
        } else {
            let (sub, map) = g.induced_subgraph(&part);
            let n = sub.order();
            let local = |x: &VertexSet| {
                VertexSet::from_ids(
                    n,
                    map.iter().enumerate().filter(|&(_, &v)| x.contains(v)).map(|(i, _)| i),
                )
            };
            let (la, lb) = (local(&pa), local(&pb));
            (sub, map, la, lb)
        };
        let (trace, witness) = decide_connected(&sub, &la, &lb)?;
        traces.push(trace.relabel(&map));
        match witness {
            Some(w) => h.union_with(&VertexSet::from_ids(g.order(), w.iter().map(|v| map[v]))),
            None => {
                separable = false;
                break;
            }
        }
    }

    let witness = if separable {
        if !verify_witness(g, a, b, &h) {
            return Err(SeparationError::Invariant(format!(
                "assembled witness {h} failed verification"
            )));
        }
        Some(h)
    } else {
        None
    };
    Ok(SeparationResult {
        separable,
        witness,
        trace: SeparationTrace {
            failure: None,
            components: traces,
        },
    })
}

impl ComponentTrace {
    fn relabel(self, map: &[usize]) -> Self {
        Self {
            vertices: map.to_vec(),
            path: self.path.into_iter().map(|v| map[v]).collect(),
            candidates: self
                .candidates
                .into_iter()
                .map(|c| CandidateTrace {
                    failure: c.failure.map(|f| f.relabel(map)),
                    ..c
                })
                .collect(),
            chosen: self.chosen,
            failure: self.failure.map(|f| f.relabel(map)),
        }
    }
}

/// Runs the pipeline on a connected graph with disjoint non-empty sets.
fn decide_connected(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<(ComponentTrace, Option<VertexSet>), SeparationError> {
    let mut hulls = Hulls::new(g);
    let mut trace = ComponentTrace {
        vertices: (0..g.order()).collect(),
        path: Vec::new(),
        candidates: Vec::new(),
        chosen: None,
        failure: None,
    };
    let (ha, hb) = (hulls.of(a), hulls.of(b));
    if ha.intersects(&hb) {
        trace.failure = Some(FailureReason::HullsIntersect {
            vertices: ha.intersection(&hb).to_vec(),
        });
        return Ok((trace, None));
    }
    let linkage = hulls
        .linkage_candidates(&ha, &hb)
        .map_err(|_| SeparationError::Precondition("graph is not connected".into()))?;
    trace.path = linkage.path.clone();

    for cand in linkage.candidates.iter().rev() {
        let mut record = CandidateTrace {
            index: cand.index,
            rounds: 0,
            failure: None,
        };
        if cand.intersecting {
            record.failure = Some(FailureReason::IntersectingLinkage);
            trace.candidates.push(record);
            continue;
        }
        let sat = hulls.saturate(&cand.a, &cand.b);
        record.rounds = sat.rounds;
        if sat.intersecting {
            record.failure = Some(FailureReason::IntersectingSaturation);
            trace.candidates.push(record);
            continue;
        }
        match decide_saturated_inner(&mut hulls, &sat.a, &sat.b)? {
            Ok(h) => {
                trace.candidates.push(record);
                trace.chosen = Some(cand.index);
                return Ok((trace, Some(h)));
            }
            Err(reason) => {
                record.failure = Some(reason);
                trace.candidates.push(record);
            }
        }
    }
    Ok((trace, None))
}

/// Decides a pair that is already disjoint, linked and saturated.
///
/// Checks the preconditions (including saturation, by running one more
/// pre-saturation round) and returns a result whose trace has a single
/// component with one candidate.
pub fn decide_saturated(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<SeparationResult, SeparationError> {
    check_universe(g, a)?;
    check_universe(g, b)?;
    if a.is_empty() || b.is_empty() {
        return Err(SeparationError::EmptySet(if a.is_empty() { Side::A } else { Side::B }));
    }
    if a.intersects(b) {
        return Err(SeparationError::Precondition("A and B intersect".into()));
    }
    if !g.is_connected() {
        return Err(SeparationError::Precondition("graph is not connected".into()));
    }
    let mut hulls = Hulls::new(g);
    let sat = hulls.saturate(a, b);
    if sat.intersecting || sat.a != *a || sat.b != *b {
        return Err(SeparationError::Precondition("A and B are not saturated".into()));
    }
    let outcome = decide_saturated_inner(&mut hulls, a, b)?;
    let (witness, failure) = match outcome {
        Ok(h) => (Some(h), None),
        Err(reason) => (None, Some(reason)),
    };
    Ok(SeparationResult {
        separable: witness.is_some(),
        witness,
        trace: SeparationTrace {
            failure: None,
            components: vec![ComponentTrace {
                vertices: (0..g.order()).collect(),
                path: Vec::new(),
                candidates: vec![CandidateTrace {
                    index: 1,
                    rounds: sat.rounds,
                    failure,
                }],
                chosen: None,
                failure: None,
            }],
        },
    })
}

/// Outer `Err` is a broken precondition or invariant; inner `Err` is a
/// regular "not separable" verdict.
fn decide_saturated_inner(
    hulls: &mut Hulls<'_>,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Result<VertexSet, FailureReason>, SeparationError> {
    let g = hulls.g;
    if g.frontier(a, b).is_empty() {
        return Err(SeparationError::Precondition("A and B are not linked".into()));
    }
    let ab = a.union(b);
    let near = g.neighborhood(&ab);
    check_saturated_structure(g, a, b, &near)?;

    let mfs = hulls.minimal_forbidden_sets(a, b);
    let mut pairs = Vec::with_capacity(mfs.len());
    for x in &mfs {
        let p = x
            .as_pair()
            .ok_or_else(|| SeparationError::Invariant(format!("saturated instance has forbidden set {}", x.members)))?;
        pairs.push(p);
    }
    // forbidden pairs are exactly the pairs whose hull sees a non-clique in N(A ∪ B)
    let free = ab.complement().to_vec();
    for (i, &u) in free.iter().enumerate() {
        for &v in &free[i + 1..] {
            let non_clique = !g.is_clique(&hulls.pair(u, v).intersection(&near));
            if non_clique != pairs.binary_search(&(u, v)).is_ok() {
                return Err(SeparationError::Invariant(format!(
                    "forbidden-pair characterization disagrees on ({u}, {v})"
                )));
            }
        }
    }

    let partition = equivalence_classes(g, a, b);
    if let Some(&pair) = pairs
        .iter()
        .find(|&&(u, v)| partition.class_of(u) == partition.class_of(v))
    {
        return Ok(Err(FailureReason::InClassForbiddenPair { pair }));
    }
    let cg = class_graph(&partition, &mfs)?;
    let colors = match two_color(&cg.graph) {
        TwoColoring::OddCycle(cycle) => {
            let cycle = cycle
                .into_iter()
                .map(|c| partition.classes[c].first().expect("classes are non-empty"))
                .collect();
            return Ok(Err(FailureReason::OddCycle { cycle }));
        }
        TwoColoring::Proper(colors) => colors,
    };

    let n = g.order();
    let free_set = ab.complement();
    let candidates: Vec<VertexSet> = if mfs.is_empty() {
        vec![a.clone(), a.union(&free_set), a.union(&near)]
    } else {
        vec![
            a.union(&partition.union_where(n, |c| colors[c] == 0)),
            a.union(&partition.union_where(n, |c| colors[c] == 1)),
        ]
    };
    candidates
        .into_iter()
        .find(|h| verify_witness(g, a, b, h))
        .map(Ok)
        .ok_or_else(|| SeparationError::Invariant("no witness candidate verified".into()))
}

/// Structural facts every linked, disjoint, saturated pair satisfies: each
/// vertex of `N(A ∪ B)` sees all of `F(A, B) ∪ F(B, A)`, and both `F(A, V \ A)`
/// and `F(B, V \ B)` are cliques.
fn check_saturated_structure(g: &Graph, a: &VertexSet, b: &VertexSet, near: &VertexSet) -> Result<(), SeparationError> {
    let core = g.frontier(a, b).union(&g.frontier(b, a));
    if let Some(v) = near.iter().find(|&v| !core.is_subset(g.neighbor_set(v))) {
        return Err(SeparationError::Invariant(format!(
            "vertex {v} of N(A ∪ B) misses part of the A–B frontier {core}"
        )));
    }
    for (side, name) in [(a, "A"), (b, "B")] {
        if !g.is_clique(&g.frontier(side, &side.complement())) {
            return Err(SeparationError::Invariant(format!(
                "outer frontier of {name} is not a clique"
            )));
        }
    }
    Ok(())
}

/// Brute-force ground truth: tries every assignment of the free vertices, in
/// binary counting order over the free vertices sorted by id (bit `j` set puts
/// the `j`-th free vertex into `H`), and returns the first verified `H`.
pub fn separable_oracle(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<VertexSet>, CapExceeded> {
    separable_oracle_with_cap(g, a, b, SEPARATION_ORACLE_CAP)
}

pub fn separable_oracle_with_cap(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    cap: usize,
) -> Result<Option<VertexSet>, CapExceeded> {
    check_cap(g.order(), cap)?;
    if a.intersects(b) {
        return Ok(None);
    }
    let free = a.union(b).complement().to_vec();
    for mask in 0u64..(1u64 << free.len()) {
        let mut h = a.clone();
        for (j, &v) in free.iter().enumerate() {
            if mask >> j & 1 == 1 {
                h.insert(v);
            }
        }
        if verify_witness(g, a, b, &h) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Splits `V` into two non-empty convex sets, if possible.
///
/// Any 2-partition puts vertex 0 on one side and some `v` on the other, so it
/// suffices to try `decide({0}, {v})` for every `v`.
pub fn two_partition(g: &Graph) -> Result<Option<(VertexSet, VertexSet)>, SeparationError> {
    let u = g.set([0usize].into_iter().filter(|_| g.order() > 0));
    if u.is_empty() {
        return Ok(None);
    }
    for v in 1..g.order() {
        let result = decide(g, &u, &g.set([v]))?;
        if let Some(h) = result.witness {
            let rest = h.complement();
            return Ok(Some((h, rest)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_join_3() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn k4_minus_plus_tail() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn saturated_decisions() {
        let g = k4_minus_plus_tail();
        let r = decide_saturated(&g, &g.set([0]), &g.set([1])).unwrap();
        assert!(r.separable);
        assert_eq!(r.witness.unwrap().to_vec(), vec![0]);

        let g = k2_join_3();
        let r = decide_saturated(&g, &g.set([0]), &g.set([1])).unwrap();
        assert!(!r.separable);
        let failure = r.trace.components[0].candidates[0].failure.clone();
        assert_eq!(failure, Some(FailureReason::OddCycle { cycle: vec![2, 3, 4] }));

        let k2 = Graph::path(2);
        let r = decide_saturated(&k2, &k2.set([0]), &k2.set([1])).unwrap();
        assert_eq!(r.witness.unwrap().to_vec(), vec![0]);
    }

    #[test]
    fn decide_saturated_checks_preconditions() {
        let p4 = Graph::path(4);
        // not linked
        assert!(matches!(
            decide_saturated(&p4, &p4.set([0]), &p4.set([3])),
            Err(SeparationError::Precondition(_))
        ));
        // linked but not saturated: σ({0},{1}) pulls 2, 3 to B
        assert!(matches!(
            decide_saturated(&p4, &p4.set([0]), &p4.set([1])),
            Err(SeparationError::Precondition(_))
        ));
    }

    #[test]
    fn named_decisions() {
        let p4 = Graph::path(4);
        let r = decide(&p4, &p4.set([0]), &p4.set([3])).unwrap();
        assert!(r.separable);
        assert!(verify_witness(
            &p4,
            &p4.set([0]),
            &p4.set([3]),
            r.witness.as_ref().unwrap()
        ));

        let c5 = Graph::cycle(5);
        let r = decide(&c5, &c5.set([0]), &c5.set([1])).unwrap();
        assert!(!r.separable);
        assert!(r.witness.is_none());
        assert!(r.trace.components[0].candidates.iter().all(|c| c.failure.is_some()));

        let c4 = Graph::cycle(4);
        let r = decide(&c4, &c4.set([0]), &c4.set([2])).unwrap();
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 1]);
        assert_eq!(r.trace.components[0].chosen, Some(2));
    }

    #[test]
    fn decide_rejects_empty_and_reports_overlap() {
        let p4 = Graph::path(4);
        assert_eq!(
            decide(&p4, &p4.empty_set(), &p4.set([1])),
            Err(SeparationError::EmptySet(Side::A))
        );
        assert_eq!(
            decide(&p4, &p4.set([1]), &p4.empty_set()),
            Err(SeparationError::EmptySet(Side::B))
        );
        let r = decide(&p4, &p4.set([1, 2]), &p4.set([2])).unwrap();
        assert!(!r.separable);
        assert_eq!(r.trace.failure, Some(FailureReason::Overlap { vertices: vec![2] }));
        assert!(matches!(
            decide(&p4, &VertexSet::from_ids(3, [0]), &p4.set([1])),
            Err(SeparationError::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn hulls_that_meet_are_not_separable() {
        let p4 = Graph::path(4);
        let r = decide(&p4, &p4.set([0, 2]), &p4.set([1])).unwrap();
        assert!(!r.separable);
        assert_eq!(
            r.trace.components[0].failure,
            Some(FailureReason::HullsIntersect { vertices: vec![1] })
        );
    }

    #[test]
    fn disconnected_graphs_reduce_per_component() {
        // P3 on {0,1,2}, C5 on {3..7}, isolated 8, edge 9-10
        let mut edges = vec![(0, 1), (1, 2), (9, 10)];
        edges.extend((0..5).map(|i| (3 + i, 3 + (i + 1) % 5)));
        let g = Graph::from_edges(11, edges).unwrap();

        let r = decide(&g, &g.set([0, 9]), &g.set([2, 10])).unwrap();
        assert!(r.separable);
        let h = r.witness.unwrap();
        assert!(verify_witness(&g, &g.set([0, 9]), &g.set([2, 10]), &h));
        // untouched components go to H
        assert!(g.set([3, 4, 5, 6, 7, 8]).is_subset(&h));
        assert_eq!(r.trace.components.len(), 2);
        assert_eq!(r.trace.components[1].vertices, vec![9, 10]);
        assert_eq!(r.trace.components[1].path, vec![9, 10]);

        let r = decide(&g, &g.set([0, 3]), &g.set([2, 4])).unwrap();
        assert!(!r.separable);
    }

    #[test]
    fn verify_witness_examples() {
        let p4 = Graph::path(4);
        let (a, b) = (p4.set([0]), p4.set([3]));
        assert!(verify_witness(&p4, &a, &b, &p4.set([0, 1])));
        assert!(!verify_witness(&p4, &a, &b, &p4.set([0, 2])));
        assert!(!verify_witness(&p4, &a, &b, &p4.vertices()));
    }

    #[test]
    fn oracle_examples() {
        let p4 = Graph::path(4);
        let h = separable_oracle(&p4, &p4.set([0]), &p4.set([3])).unwrap().unwrap();
        assert_eq!(h.to_vec(), vec![0]);
        let c5 = Graph::cycle(5);
        assert_eq!(separable_oracle(&c5, &c5.set([0]), &c5.set([1])).unwrap(), None);
        let k2 = Graph::path(2);
        assert_eq!(
            separable_oracle(&k2, &k2.set([0]), &k2.set([1]))
                .unwrap()
                .unwrap()
                .to_vec(),
            vec![0]
        );
        let big = Graph::path(21);
        assert!(separable_oracle(&big, &big.set([0]), &big.set([1])).is_err());
    }

    #[test]
    fn two_partitions() {
        let p4 = Graph::path(4);
        let (h, rest) = two_partition(&p4).unwrap().unwrap();
        assert!(!h.is_empty() && !rest.is_empty());
        assert!(is_convex(&p4, &h) && is_convex(&p4, &rest));
        assert_eq!(two_partition(&Graph::cycle(5)).unwrap(), None);
        let (h, rest) = two_partition(&Graph::complete(3)).unwrap().unwrap();
        assert_eq!((h.to_vec(), rest.to_vec()), (vec![0], vec![1, 2]));
        assert_eq!(two_partition(&Graph::edgeless(1)).unwrap(), None);
        assert_eq!(two_partition(&Graph::edgeless(0)).unwrap(), None);
    }

    #[test]
    fn instance_validation() {
        let p4 = Graph::path(4);
        assert!(SeparationInstance::new(&p4, p4.set([0]), p4.set([0])).is_err());
        let inst = SeparationInstance::new(&p4, p4.set([0]), p4.set([3])).unwrap();
        assert!(inst.decide().unwrap().separable);
    }

    #[test]
    fn result_serializes_to_json() {
        let c4 = Graph::cycle(4);
        let r = decide(&c4, &c4.set([0]), &c4.set([2])).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["separable"], true);
        assert_eq!(json["witness"], serde_json::json!([0, 1]));
        assert_eq!(json["trace"]["components"][0]["chosen"], 2);
        let c5 = Graph::cycle(5);
        let r = decide(&c5, &c5.set([0]), &c5.set([1])).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["witness"], serde_json::Value::Null);
        assert_eq!(
            json["trace"]["components"][0]["candidates"][0]["failure"]["kind"],
            "intersecting_saturation"
        );
    }
}
