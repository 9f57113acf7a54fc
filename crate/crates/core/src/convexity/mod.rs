//! Convexity spaces presented by a hull operator.
//!
//! Everything here is exhaustive and capped: these routines check hull laws,
//! search for half-space separations by brute force and compute Carathéodory
//! numbers on small ground sets.

mod hypergraph;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::monophonic::closure;
use crate::{check_cap, CapExceeded};

pub use hypergraph::{
    hypergraph_hull, parse_hypergraph, two_colorable, Hypergraph3, HypergraphError, HypergraphHull, COLORING_CAP,
    MAX_HYPERGRAPH_ORDER,
};

/// Ground sets up to this size are validated exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 20;
/// Default cap for [`generic_separable`].
pub const SEPARATION_CAP: usize = 22;
/// Default cap for [`caratheodory_number`].
pub const CARATHEODORY_CAP: usize = 12;

/// A hull operator on the ground set `0..ground_size()`.
///
/// Implementations must be callable from several threads at once.
pub trait HullOracle: Sync {
    fn ground_size(&self) -> usize;
    fn hull(&self, x: &VertexSet) -> VertexSet;
}

/// The monophonic hull of a graph.
#[derive(Debug, Clone, Copy)]
pub struct MonophonicHull<'g> {
    pub graph: &'g Graph,
}

impl HullOracle for MonophonicHull<'_> {
    fn ground_size(&self) -> usize {
        self.graph.order()
    }

    fn hull(&self, x: &VertexSet) -> VertexSet {
        closure(self.graph, x)
    }
}

/// `h(X) = X`: every set is convex.
#[derive(Debug, Clone, Copy)]
pub struct Discrete(pub usize);

impl HullOracle for Discrete {
    fn ground_size(&self) -> usize {
        self.0
    }

    fn hull(&self, x: &VertexSet) -> VertexSet {
        x.clone()
    }
}

/// An operator given by a closure, which need not satisfy the hull laws.
pub struct FnOracle<F> {
    pub n: usize,
    pub f: F,
}

impl<F: Fn(&VertexSet) -> VertexSet + Sync> HullOracle for FnOracle<F> {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn hull(&self, x: &VertexSet) -> VertexSet {
        (self.f)(x)
    }
}

/// First hull law found broken by [`validate_oracle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "law", rename_all = "snake_case")]
pub enum OracleViolation {
    #[error("hull of {set} is over a ground set of the wrong size")]
    Universe { set: VertexSet },
    #[error("not extensive: {set} is not inside its hull {hull}")]
    Extensivity { set: VertexSet, hull: VertexSet },
    #[error("not monotone: {smaller} ⊆ {larger} but their hulls are not nested")]
    Monotonicity { smaller: VertexSet, larger: VertexSet },
    #[error("not idempotent on {set}")]
    Idempotence { set: VertexSet },
    #[error("the empty set is not convex")]
    EmptyNotFixed,
    #[error("the ground set is not convex")]
    FullNotFixed,
}

/// Checks that `o` is extensive, monotone and idempotent with `h(∅) = ∅` and
/// `h(V) = V`.
///
/// Ground sets of at most [`EXHAUSTIVE_LIMIT`] elements are checked on every
/// subset, with monotonicity on every pair `X ⊂ X ∪ {v}` (which implies it for
/// all nested pairs). Larger ground sets are checked on `sample_budget`
/// pairs `X ⊆ Y` drawn from a fixed-seed generator. Sets are visited in
/// increasing binary order, so the reported violation is deterministic.
pub fn validate_oracle<O: HullOracle + ?Sized>(o: &O, sample_budget: usize) -> Result<(), OracleViolation> {
    if o.ground_size() <= EXHAUSTIVE_LIMIT {
        validate_exhaustive(o)
    } else {
        validate_sampled(o, sample_budget)
    }
}

fn to_mask(x: &VertexSet) -> u32 {
    x.iter().fold(0, |m, v| m | 1 << v)
}

fn from_mask(n: usize, m: u32) -> VertexSet {
    VertexSet::from_ids(n, (0..n).filter(|&v| m >> v & 1 == 1))
}

fn checked_hull<O: HullOracle + ?Sized>(o: &O, x: &VertexSet) -> Result<VertexSet, OracleViolation> {
    let h = o.hull(x);
    if h.universe() != o.ground_size() {
        return Err(OracleViolation::Universe { set: x.clone() });
    }
    Ok(h)
}

fn validate_exhaustive<O: HullOracle + ?Sized>(o: &O) -> Result<(), OracleViolation> {
    let n = o.ground_size();
    let total = 1usize << n;
    let mut hulls = vec![0u32; total];
    for m in 0..total as u32 {
        let x = from_mask(n, m);
        let h = checked_hull(o, &x)?;
        if m == 0 && !h.is_empty() {
            return Err(OracleViolation::EmptyNotFixed);
        }
        // extensivity on the last mask is h(V) = V
        if !x.is_subset(&h) {
            return Err(OracleViolation::Extensivity { set: x, hull: h });
        }
        if checked_hull(o, &h)? != h {
            return Err(OracleViolation::Idempotence { set: x });
        }
        hulls[m as usize] = to_mask(&h);
    }
    for m in 0..total as u32 {
        for v in 0..n {
            let bigger = m | 1 << v;
            if bigger != m && hulls[m as usize] & !hulls[bigger as usize] != 0 {
                return Err(OracleViolation::Monotonicity {
                    smaller: from_mask(n, m),
                    larger: from_mask(n, bigger),
                });
            }
        }
    }
    Ok(())
}

fn validate_sampled<O: HullOracle + ?Sized>(o: &O, budget: usize) -> Result<(), OracleViolation> {
    let n = o.ground_size();
    if !checked_hull(o, &VertexSet::empty(n))?.is_empty() {
        return Err(OracleViolation::EmptyNotFixed);
    }
    let full = VertexSet::full(n);
    if checked_hull(o, &full)? != full {
        return Err(OracleViolation::FullNotFixed);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..budget {
        let x = VertexSet::from_ids(n, (0..n).filter(|_| rng.gen_bool(0.3)));
        let mut y = x.clone();
        for v in 0..n {
            if rng.gen_bool(0.3) {
                y.insert(v);
            }
        }
        for s in [&x, &y] {
            let h = checked_hull(o, s)?;
            if !s.is_subset(&h) {
                return Err(OracleViolation::Extensivity {
                    set: s.clone(),
                    hull: h,
                });
            }
            if checked_hull(o, &h)? != h {
                return Err(OracleViolation::Idempotence { set: s.clone() });
            }
        }
        if !o.hull(&x).is_subset(&o.hull(&y)) {
            return Err(OracleViolation::Monotonicity { smaller: x, larger: y });
        }
    }
    Ok(())
}

/// `H` and its complement are both fixed by `o`.
pub fn is_half_space<O: HullOracle + ?Sized>(o: &O, h: &VertexSet) -> bool {
    o.hull(h) == *h && {
        let rest = h.complement();
        o.hull(&rest) == rest
    }
}

/// Brute-force half-space separation: the first `H` with `A ⊆ H`,
/// `B ∩ H = ∅` such that `H` and its complement are convex. Free elements are
/// sorted by id and assignments visited in binary counting order (bit `j` puts
/// the `j`-th free element into `H`).
pub fn generic_separable<O: HullOracle + ?Sized>(
    o: &O,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Option<VertexSet>, CapExceeded> {
    check_cap(o.ground_size(), SEPARATION_CAP)?;
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
        if is_half_space(o, &h) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// The least `d` such that whenever `v ∈ h(X)`, some `Y ⊆ X` with `|Y| ≤ d`
/// already has `v ∈ h(Y)`.
///
/// For each `v`, a pass over all subsets in increasing order computes the
/// smallest such `Y` inside every `X` from the values of `X`'s maximal proper
/// subsets.
pub fn caratheodory_number<O: HullOracle + ?Sized>(o: &O) -> Result<usize, CapExceeded> {
    let n = o.ground_size();
    check_cap(n, CARATHEODORY_CAP)?;
    let total = 1usize << n;
    let hulls: Vec<u32> = (0..total as u32).map(|m| to_mask(&o.hull(&from_mask(n, m)))).collect();
    const NONE: u8 = u8::MAX;
    let mut best = vec![NONE; total];
    let mut d = 0;
    for v in 0..n {
        for m in 0..total {
            let mut b = NONE;
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                b = b.min(best[m ^ bit]);
                rest ^= bit;
            }
            if b == NONE && hulls[m] >> v & 1 == 1 {
                // no proper subset works, so X itself is the smallest witness
                b = m.count_ones() as u8;
            }
            best[m] = b;
            if b != NONE {
                d = d.max(b as usize);
            }
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lawful_oracles_validate() {
        for g in [Graph::path(5), Graph::cycle(6), Graph::complete(4)] {
            assert_eq!(validate_oracle(&MonophonicHull { graph: &g }, 0), Ok(()));
        }
        assert_eq!(validate_oracle(&Discrete(6), 0), Ok(()));
        let h = Hypergraph3::fano();
        assert_eq!(validate_oracle(&hypergraph_hull(&h), 0), Ok(()));
    }

    #[test]
    fn broken_operator_fails_extensivity_on_zero() {
        let broken = FnOracle {
            n: 4,
            f: |x: &VertexSet| {
                let mut y = x.clone();
                y.remove(0);
                y
            },
        };
        let err = validate_oracle(&broken, 0).unwrap_err();
        assert_eq!(
            err,
            OracleViolation::Extensivity {
                set: VertexSet::from_ids(4, [0]),
                hull: VertexSet::empty(4)
            }
        );
    }

    #[test]
    fn non_monotone_and_non_idempotent_operators() {
        // {0} ↦ {0,1} but {0,2} ↦ {0,2}
        let non_monotone = FnOracle {
            n: 3,
            f: |x: &VertexSet| {
                let mut y = x.clone();
                if x.to_vec() == [0] {
                    y.insert(1);
                }
                y
            },
        };
        assert!(matches!(
            validate_oracle(&non_monotone, 0),
            Err(OracleViolation::Monotonicity { .. })
        ));
        // adds the successor of the largest member
        let creeping = FnOracle {
            n: 3,
            f: |x: &VertexSet| {
                let mut y = x.clone();
                if let Some(top) = x.iter().last() {
                    if top + 1 < 3 {
                        y.insert(top + 1);
                    }
                }
                y
            },
        };
        assert!(matches!(
            validate_oracle(&creeping, 0),
            Err(OracleViolation::Idempotence { .. })
        ));
    }

    #[test]
    fn sampled_validation_on_large_ground_sets() {
        let g = Graph::path(24);
        assert_eq!(validate_oracle(&MonophonicHull { graph: &g }, 50), Ok(()));
        let broken = FnOracle {
            n: 24,
            f: |x: &VertexSet| {
                let mut y = x.clone();
                if y.len() > 1 && y.len() < 24 {
                    y.remove(y.first().unwrap());
                }
                y
            },
        };
        assert!(matches!(
            validate_oracle(&broken, 50),
            Err(OracleViolation::Extensivity { .. })
        ));
        let shrinking = FnOracle {
            n: 24,
            f: |x: &VertexSet| x.difference(&VertexSet::from_ids(24, [0])),
        };
        assert_eq!(validate_oracle(&shrinking, 50), Err(OracleViolation::FullNotFixed));
        let constant = FnOracle {
            n: 2,
            f: |_: &VertexSet| VertexSet::full(2),
        };
        assert_eq!(validate_oracle(&constant, 0), Err(OracleViolation::EmptyNotFixed));
    }

    #[test]
    fn generic_separation_examples() {
        let single = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        let o = hypergraph_hull(&single);
        let (a, b) = (VertexSet::from_ids(5, [o.a()]), VertexSet::from_ids(5, [o.b()]));
        let h = generic_separable(&o, &a, &b).unwrap().unwrap();
        assert_eq!(h.to_vec(), vec![0, 3]);
        assert!(is_half_space(&o, &h));

        let fano = Hypergraph3::fano();
        let o = hypergraph_hull(&fano);
        let (a, b) = (VertexSet::from_ids(9, [o.a()]), VertexSet::from_ids(9, [o.b()]));
        assert_eq!(generic_separable(&o, &a, &b).unwrap(), None);
        assert_eq!(generic_separable(&o, &a, &a).unwrap(), None);

        assert!(generic_separable(&Discrete(23), &VertexSet::empty(23), &VertexSet::empty(23)).is_err());
    }

    #[test]
    fn caratheodory_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(caratheodory_number(&MonophonicHull { graph: &k4 }).unwrap(), 1);
        let c4 = Graph::cycle(4);
        assert_eq!(caratheodory_number(&MonophonicHull { graph: &c4 }).unwrap(), 2);
        let h = Hypergraph3::new(4, [[0, 1, 2]]).unwrap();
        assert_eq!(caratheodory_number(&hypergraph_hull(&h)).unwrap(), 3);
        assert_eq!(caratheodory_number(&Discrete(5)).unwrap(), 1);
        assert_eq!(caratheodory_number(&Discrete(0)).unwrap(), 0);
        assert!(caratheodory_number(&Discrete(13)).is_err());
    }
}
