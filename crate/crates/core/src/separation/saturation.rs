//! Linkage along a shortest path, shadows, minimal forbidden sets and the
//! saturation fixpoint.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::graph::{shortest_path_between_sets, Graph, NoPath, VertexSet};
use crate::monophonic::closure;

/// Hull evaluations shared by every step of one decision. Pair hulls depend
/// only on the graph, so they are cached across saturation rounds and
/// linkage candidates.
pub(crate) struct Hulls<'g> {
    pub(crate) g: &'g Graph,
    pairs: HashMap<(usize, usize), VertexSet>,
}

impl<'g> Hulls<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Self {
            g,
            pairs: HashMap::new(),
        }
    }

    pub(crate) fn of(&self, x: &VertexSet) -> VertexSet {
        closure(self.g, x)
    }

    fn of_with(&self, x: &VertexSet, v: usize) -> VertexSet {
        let mut y = x.clone();
        y.insert(v);
        closure(self.g, &y)
    }

    /// `cl({u, v})`.
    pub(crate) fn pair(&mut self, u: usize, v: usize) -> &VertexSet {
        let key = (u.min(v), u.max(v));
        let g = self.g;
        self.pairs
            .entry(key)
            .or_insert_with(|| closure(g, &g.set([key.0, key.1])))
    }

    /// `A/B = {v : cl(B ∪ v) ∩ A ≠ ∅}`; all of `V` when `A ∩ B ≠ ∅`.
    pub(crate) fn shadow(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        if a.intersects(b) {
            return self.g.vertices();
        }
        let mut out = a.clone();
        let base = self.of(b);
        let b_hits = base.intersects(a);
        for v in a.complement().iter() {
            let hits = if b.contains(v) {
                b_hits
            } else {
                self.of_with(b, v).intersects(a)
            };
            if hits {
                out.insert(v);
            }
        }
        out
    }

    /// Inclusion-minimal `X ⊆ V \ (A ∪ B)` whose hull meets both `A` and `B`.
    ///
    /// Every such `X` is either a pair whose hull meets both sides, or the
    /// union of a pair whose hull meets only `A` with a pair whose hull meets
    /// only `B` (a 3- or 4-set). Sorted by size, then lexicographically.
    pub(crate) fn minimal_forbidden_sets(&mut self, a: &VertexSet, b: &VertexSet) -> Vec<ForbiddenSet> {
        let g = self.g;
        let free = a.union(b).complement().to_vec();
        let mut both = Vec::new();
        let mut a_only = Vec::new();
        let mut b_only = Vec::new();
        for (i, &u) in free.iter().enumerate() {
            for &v in &free[i + 1..] {
                if g.has_edge(u, v) {
                    // cl(uv) = {u, v} stays outside A ∪ B
                    continue;
                }
                let h = self.pair(u, v);
                match (h.intersects(a), h.intersects(b)) {
                    (true, true) => both.push((u, v)),
                    (true, false) => a_only.push((u, v)),
                    (false, true) => b_only.push((u, v)),
                    (false, false) => {}
                }
            }
        }

        let forbidden_pairs: HashSet<(usize, usize)> = both.iter().copied().collect();
        let contains_forbidden_pair = |x: &VertexSet| {
            let m = x.to_vec();
            m.iter()
                .enumerate()
                .any(|(i, &u)| m[i + 1..].iter().any(|&v| forbidden_pairs.contains(&(u, v))))
        };

        let mut unions: HashSet<VertexSet> = HashSet::new();
        for &(u1, v1) in &a_only {
            for &(u2, v2) in &b_only {
                let x = g.set([u1, v1, u2, v2]);
                if !contains_forbidden_pair(&x) {
                    unions.insert(x);
                }
            }
        }
        let minimal_unions = unions.iter().filter(|x| {
            x.len() == 3
                || x.iter().all(|drop| {
                    let mut sub = (*x).clone();
                    sub.remove(drop);
                    !unions.contains(&sub)
                })
        });

        let mut out: Vec<ForbiddenSet> = both
            .iter()
            .map(|&(u, v)| g.set([u, v]))
            .chain(minimal_unions.cloned())
            .map(|members| ForbiddenSet { members })
            .collect();
        out.sort_by(|x, y| {
            x.members
                .len()
                .cmp(&y.members.len())
                .then_with(|| x.members.cmp(&y.members))
        });
        out
    }

    /// `σ(A, B)` from precomputed ingredients: the hull of the shadow together
    /// with `⋂_{x ∈ X} cl(A ∪ x)` for every minimal forbidden set `X`.
    fn presaturate_from(&self, a: &VertexSet, shadow: &VertexSet, mfs: &[ForbiddenSet]) -> VertexSet {
        let mut acc = shadow.clone();
        let mut with_a: HashMap<usize, VertexSet> = HashMap::new();
        for x in mfs {
            let mut forced: Option<VertexSet> = None;
            for v in x.members.iter() {
                let h = with_a.entry(v).or_insert_with(|| self.of_with(a, v));
                match forced.as_mut() {
                    Some(f) => f.intersect_with(h),
                    None => forced = Some(h.clone()),
                }
            }
            if let Some(f) = forced {
                acc.union_with(&f);
            }
        }
        self.of(&acc)
    }

    pub(crate) fn presaturate(&mut self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        if a.intersects(b) {
            return self.g.vertices();
        }
        let shadow = self.shadow(a, b);
        let mfs = self.minimal_forbidden_sets(a, b);
        self.presaturate_from(a, &shadow, &mfs)
    }

    pub(crate) fn saturate(&mut self, a: &VertexSet, b: &VertexSet) -> Saturation {
        let all = self.g.vertices();
        let collapsed = |rounds| Saturation {
            a: all.clone(),
            b: all.clone(),
            rounds,
            intersecting: true,
        };
        let (mut cur_a, mut cur_b) = (a.clone(), b.clone());
        let mut rounds = 0;
        loop {
            rounds += 1;
            if cur_a.intersects(&cur_b) {
                return collapsed(rounds);
            }
            let shadow_a = self.shadow(&cur_a, &cur_b);
            let shadow_b = self.shadow(&cur_b, &cur_a);
            // σ contains the hull of the shadow, so overlapping shadow hulls
            // already decide the round
            let hull_a = self.of(&shadow_a);
            let hull_b = self.of(&shadow_b);
            if hull_a.intersects(&hull_b) {
                return collapsed(rounds);
            }
            // the family of minimal forbidden sets is symmetric in A, B
            let mfs = self.minimal_forbidden_sets(&cur_a, &cur_b);
            let next_a = self.presaturate_from(&cur_a, &hull_a, &mfs);
            let next_b = self.presaturate_from(&cur_b, &hull_b, &mfs);
            if next_a.intersects(&next_b) {
                return collapsed(rounds);
            }
            if next_a == cur_a && next_b == cur_b {
                return Saturation {
                    a: cur_a,
                    b: cur_b,
                    rounds,
                    intersecting: false,
                };
            }
            cur_a = next_a;
            cur_b = next_b;
        }
    }

    pub(crate) fn linkage_candidates(&self, a: &VertexSet, b: &VertexSet) -> Result<Linkage, NoPath> {
        let path = shortest_path_between_sets(self.g, a, b)?;
        let candidates = (1..path.len())
            .map(|i| {
                let side_a = self.of(&a.union(&self.g.set(path[..i].iter().copied())));
                let side_b = self.of(&b.union(&self.g.set(path[i..].iter().copied())));
                LinkageCandidate {
                    index: i,
                    intersecting: side_a.intersects(&side_b),
                    a: side_a,
                    b: side_b,
                }
            })
            .collect();
        Ok(Linkage { path, candidates })
    }
}

/// A minimal forbidden set: outside `A ∪ B`, its hull meets both sides, and
/// no proper subset's hull does. Has 2 to 4 members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ForbiddenSet {
    pub members: VertexSet,
}

impl ForbiddenSet {
    /// The two members, when this is a forbidden pair.
    pub fn as_pair(&self) -> Option<(usize, usize)> {
        let mut it = self.members.iter();
        match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => Some((u, v)),
            _ => None,
        }
    }
}

/// Result of the saturation fixpoint. When the two sides ever meet, both are
/// reported as `V` and `intersecting` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Saturation {
    pub a: VertexSet,
    pub b: VertexSet,
    pub rounds: usize,
    pub intersecting: bool,
}

/// One way of splitting the linking path: `a = cl(A ∪ {v_1..v_i})`,
/// `b = cl(B ∪ {v_{i+1}..v_k})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkageCandidate {
    /// `i`, 1-based.
    pub index: usize,
    pub a: VertexSet,
    pub b: VertexSet,
    pub intersecting: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Linkage {
    /// The shortest path `v_1 ∈ A, ..., v_k ∈ B`.
    pub path: Vec<usize>,
    pub candidates: Vec<LinkageCandidate>,
}

/// The shadow `A/B`: vertices `v` with `cl(B ∪ v) ∩ A ≠ ∅`. Contains `A`; all
/// of `V` when `A` and `B` meet.
pub fn shadow(g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    Hulls::new(g).shadow(a, b)
}

/// The inclusion-minimal forbidden sets of `A`, `B`. Expects `A`, `B`
/// disjoint and convex.
pub fn minimal_forbidden_sets(g: &Graph, a: &VertexSet, b: &VertexSet) -> Vec<ForbiddenSet> {
    Hulls::new(g).minimal_forbidden_sets(a, b)
}

/// The pre-saturation `σ(A, B)`: the hull of `A/B` together with the vertices
/// forced onto `A`'s side by each minimal forbidden set.
pub fn presaturate(g: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    Hulls::new(g).presaturate(a, b)
}

/// Alternates `A ← σ(A, B)`, `B ← σ(B, A)` until neither changes. The round
/// count includes the final round that confirmed the fixpoint.
pub fn saturate(g: &Graph, a: &VertexSet, b: &VertexSet) -> Saturation {
    Hulls::new(g).saturate(a, b)
}

/// Splits a shortest `A`–`B` path at every position. `A`, `B` separable iff
/// some candidate pair is.
pub fn linkage_candidates(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Linkage, NoPath> {
    Hulls::new(g).linkage_candidates(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_join_3() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn shadows() {
        let p4 = Graph::path(4);
        assert_eq!(shadow(&p4, &p4.set([0]), &p4.set([3])).to_vec(), vec![0]);
        let c4 = Graph::cycle(4);
        assert_eq!(shadow(&c4, &c4.set([2]), &c4.set([0, 1])).to_vec(), vec![2, 3]);
        assert_eq!(shadow(&c4, &c4.set([0, 1]), &c4.set([1, 2])), c4.vertices());
    }

    #[test]
    fn forbidden_sets() {
        let g = k2_join_3();
        let mfs = minimal_forbidden_sets(&g, &g.set([0]), &g.set([1]));
        assert_eq!(
            mfs.iter().map(|x| x.as_pair().unwrap()).collect::<Vec<_>>(),
            vec![(2, 3), (2, 4), (3, 4)]
        );
        let p4 = Graph::path(4);
        assert!(minimal_forbidden_sets(&p4, &p4.set([0]), &p4.set([3])).is_empty());
        let c4 = Graph::cycle(4);
        assert!(minimal_forbidden_sets(&c4, &c4.set([0, 1]), &c4.set([2])).is_empty());
    }

    #[test]
    fn presaturations() {
        let c4 = Graph::cycle(4);
        assert_eq!(presaturate(&c4, &c4.set([2]), &c4.set([0, 1])).to_vec(), vec![2, 3]);
        let g = k2_join_3();
        assert_eq!(presaturate(&g, &g.set([0]), &g.set([1])).to_vec(), vec![0]);
        let p4 = Graph::path(4);
        assert_eq!(presaturate(&p4, &p4.set([0, 1]), &p4.set([2, 3])).to_vec(), vec![0, 1]);
        assert_eq!(presaturate(&p4, &p4.set([0, 1]), &p4.set([1])), p4.vertices());
    }

    #[test]
    fn saturations() {
        let c4 = Graph::cycle(4);
        let s = saturate(&c4, &c4.set([0, 1]), &c4.set([2]));
        assert_eq!((s.a.to_vec(), s.b.to_vec(), s.rounds), (vec![0, 1], vec![2, 3], 2));
        assert!(!s.intersecting);

        let c5 = Graph::cycle(5);
        let s = saturate(&c5, &c5.set([0]), &c5.set([1]));
        assert!(s.intersecting);
        assert_eq!(s.a, c5.vertices());
        assert!(shadow(&c5, &c5.set([0]), &c5.set([1])).contains(3));
        assert!(shadow(&c5, &c5.set([1]), &c5.set([0])).contains(3));

        let p4 = Graph::path(4);
        let s = saturate(&p4, &p4.set([0, 1]), &p4.set([2, 3]));
        assert_eq!((s.a.to_vec(), s.b.to_vec(), s.rounds), (vec![0, 1], vec![2, 3], 1));
    }

    #[test]
    fn linkage() {
        let c4 = Graph::cycle(4);
        let l = linkage_candidates(&c4, &c4.set([0]), &c4.set([2])).unwrap();
        assert_eq!(l.path, vec![0, 1, 2]);
        let sides: Vec<_> = l.candidates.iter().map(|c| (c.a.to_vec(), c.b.to_vec())).collect();
        assert_eq!(sides, vec![(vec![0], vec![1, 2]), (vec![0, 1], vec![2])]);

        let p4 = Graph::path(4);
        let l = linkage_candidates(&p4, &p4.set([0]), &p4.set([3])).unwrap();
        let sides: Vec<_> = l.candidates.iter().map(|c| (c.a.to_vec(), c.b.to_vec())).collect();
        assert_eq!(
            sides,
            vec![
                (vec![0], vec![1, 2, 3]),
                (vec![0, 1], vec![2, 3]),
                (vec![0, 1, 2], vec![3])
            ]
        );
        assert!(l.candidates.iter().all(|c| !c.intersecting));

        let l = linkage_candidates(&p4, &p4.set([0, 1]), &p4.set([2, 3])).unwrap();
        assert_eq!(l.candidates.len(), 1);
        assert_eq!(l.candidates[0].a.to_vec(), vec![0, 1]);
        assert_eq!(l.candidates[0].b.to_vec(), vec![2, 3]);
    }
}
