//! Seeded random instances and the cross-check driver that compares the
//! polynomial pipeline with the brute-force oracles.
//!
//! Instance `i` of a run draws from its own ChaCha8 stream `(seed, i)`, so a
//! run is reproducible instance by instance and independent of evaluation
//! order.

use std::fmt;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convexity::Hypergraph3;
use crate::graph::{Graph, VertexSet};
use crate::monophonic::{hull, hull_oracle, is_convex_oracle};
use crate::separation::{decide, separable_oracle_with_cap, verify_witness, Hulls};

/// Hard ceiling on `oracle_cap`; the separation oracle is exponential in the
/// number of free vertices.
pub const MAX_ORACLE_CAP: usize = 24;
/// Hard ceiling on `hull_cap`; the hull oracle enumerates chordless paths.
pub const MAX_HULL_CAP: usize = 15;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    /// Vertex counts are drawn uniformly from this range.
    pub n_range: RangeInclusive<usize>,
    /// Edge probabilities; one is picked uniformly per instance.
    pub p_values: Vec<f64>,
    /// Sizes of `A` and `B` are drawn from this range.
    pub set_size: RangeInclusive<usize>,
    /// Largest graph handed to the separation oracle.
    pub oracle_cap: usize,
    /// Largest graph on which hulls and witnesses are re-checked by path
    /// enumeration.
    pub hull_cap: usize,
    /// Random seed sets per instance for the hull comparison.
    pub hull_samples: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            count: 100,
            n_range: 4..=10,
            p_values: vec![0.2, 0.35, 0.5],
            set_size: 1..=2,
            oracle_cap: 20,
            hull_cap: 9,
            hull_samples: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("vertex range {lo}..{hi} is empty or below 2")]
    BadRange { lo: usize, hi: usize },
    #[error("graphs of up to {n} vertices exceed the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("oracle cap {cap} exceeds the hard limit of {limit}")]
    CapTooLarge { cap: usize, limit: usize },
    #[error("edge probability {0} is not in (0, 1]")]
    BadProbability(f64),
    #[error("no edge probabilities given")]
    NoProbabilities,
    #[error("set sizes {lo}..{hi} must be non-empty and at least 1")]
    BadSetSize { lo: usize, hi: usize },
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let (lo, hi) = (*self.n_range.start(), *self.n_range.end());
        if lo < 2 || lo > hi {
            return Err(ConfigError::BadRange { lo, hi });
        }
        if self.oracle_cap > MAX_ORACLE_CAP {
            return Err(ConfigError::CapTooLarge {
                cap: self.oracle_cap,
                limit: MAX_ORACLE_CAP,
            });
        }
        if self.hull_cap > MAX_HULL_CAP {
            return Err(ConfigError::CapTooLarge {
                cap: self.hull_cap,
                limit: MAX_HULL_CAP,
            });
        }
        if hi > self.oracle_cap {
            return Err(ConfigError::CapExceeded {
                n: hi,
                cap: self.oracle_cap,
            });
        }
        if self.p_values.is_empty() {
            return Err(ConfigError::NoProbabilities);
        }
        if let Some(&p) = self.p_values.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
            return Err(ConfigError::BadProbability(p));
        }
        let (slo, shi) = (*self.set_size.start(), *self.set_size.end());
        if slo == 0 || slo > shi {
            return Err(ConfigError::BadSetSize { lo: slo, hi: shi });
        }
        Ok(())
    }
}

/// The generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `G(n, p)` conditioned on connectivity by rejection. `p` must be positive.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    assert!(p > 0.0, "edge probability must be positive");
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p.min(1.0)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("generated edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}

/// Disjoint non-empty `A`, `B` with sizes drawn from `sizes`, shrunk if `n`
/// is too small. Needs `n ≥ 2`.
pub fn random_disjoint_sets<R: Rng>(rng: &mut R, n: usize, sizes: RangeInclusive<usize>) -> (VertexSet, VertexSet) {
    assert!(n >= 2, "need two vertices for two disjoint non-empty sets");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let ka = rng.gen_range(sizes.clone()).clamp(1, n - 1);
    let kb = rng.gen_range(sizes).clamp(1, n - ka);
    let a = VertexSet::from_ids(n, order[..ka].iter().copied());
    let b = VertexSet::from_ids(n, order[ka..ka + kb].iter().copied());
    (a, b)
}

/// A 3-uniform hypergraph with `n ≥ 3` vertices and `1..=max_edges` edges,
/// drawn without repeats.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, max_edges: usize) -> Hypergraph3 {
    assert!(n >= 3 && max_edges >= 1);
    let mut all = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                all.push([u, v, w]);
            }
        }
    }
    all.shuffle(rng);
    let m = rng.gen_range(1..=max_edges.min(all.len()));
    all.truncate(m);
    Hypergraph3::new(n, all).expect("triples of distinct in-range vertices")
}

/// The cross-checks run on every instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `decide` and the brute-force oracle give the same answer.
    Decision,
    /// A returned witness passes `verify_witness`, and on small graphs also
    /// the path-enumeration convexity test.
    Witness,
    /// The witness meets the linking path in a prefix.
    Prefix,
    /// `hull` equals the path-enumeration hull.
    Hull,
    /// Saturating a linkage candidate does not change its separability.
    Saturation,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Decision,
        Check::Witness,
        Check::Prefix,
        Check::Hull,
        Check::Saturation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Decision => "decision",
            Check::Witness => "witness",
            Check::Prefix => "prefix",
            Check::Hull => "hull",
            Check::Saturation => "saturation",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub seed: u64,
    pub check: Check,
    pub detail: String,
    /// The graph in edge-list format.
    pub graph: String,
    pub a: VertexSet,
    pub b: VertexSet,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "first counterexample: instance {} (seed {}), {} check: {}",
            self.index,
            self.seed,
            self.check.name(),
            self.detail
        )?;
        writeln!(f, "A = {}  B = {}", self.a, self.b)?;
        write!(f, "{}", self.graph)
    }
}

/// Outcome of one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    pub separable: bool,
    pub tallies: Vec<(Check, Tally)>,
    pub failure: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub total: usize,
    /// Instances on which every check passed.
    pub agree: usize,
    pub separable: usize,
    pub tallies: Vec<(Check, Tally)>,
    pub first_failure: Option<Counterexample>,
}

impl FuzzReport {
    pub fn all_agree(&self) -> bool {
        self.agree == self.total
    }

    pub fn tally(&self, check: Check) -> Tally {
        self.tallies
            .iter()
            .find(|(c, _)| *c == check)
            .map(|&(_, t)| t)
            .unwrap_or_default()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}/{} agree", self.agree, self.total)?;
        writeln!(
            f,
            "seed {}, n in {}..={}, {} separable",
            self.config.seed,
            self.config.n_range.start(),
            self.config.n_range.end(),
            self.separable
        )?;
        for (check, t) in &self.tallies {
            writeln!(
                f,
                "  {:<10} {}/{} passed",
                check.name(),
                t.checked - t.failed,
                t.checked
            )?;
        }
        if let Some(c) = &self.first_failure {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

struct Recorder {
    tallies: Vec<(Check, Tally)>,
    failure: Option<(Check, String)>,
}

impl Recorder {
    fn new() -> Self {
        Self {
            tallies: Check::ALL.iter().map(|&c| (c, Tally::default())).collect(),
            failure: None,
        }
    }

    fn record(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        let t = &mut self
            .tallies
            .iter_mut()
            .find(|(c, _)| *c == check)
            .expect("known check")
            .1;
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if self.failure.is_none() {
                self.failure = Some((check, detail()));
            }
        }
    }
}

/// Generates and checks instance `index` of the run described by `config`.
pub fn run_instance(config: &FuzzConfig, index: usize) -> InstanceReport {
    let mut rng = instance_rng(config.seed, index as u64);
    let n = rng.gen_range(config.n_range.clone());
    let p = *config.p_values.choose(&mut rng).expect("validated non-empty");
    let g = random_connected_graph(&mut rng, n, p);
    let (a, b) = random_disjoint_sets(&mut rng, n, config.set_size.clone());
    let seeds: Vec<VertexSet> = (0..config.hull_samples)
        .map(|_| {
            let k = rng.gen_range(1..=n.min(3));
            let mut ids: Vec<usize> = (0..n).collect();
            ids.shuffle(&mut rng);
            VertexSet::from_ids(n, ids[..k].iter().copied())
        })
        .collect();

    let mut rec = Recorder::new();
    let oracle = |x: &VertexSet, y: &VertexSet| {
        separable_oracle_with_cap(&g, x, y, config.oracle_cap).expect("config keeps n within the oracle cap")
    };

    let separable = match decide(&g, &a, &b) {
        Err(e) => {
            rec.record(Check::Decision, false, || format!("decide failed: {e}"));
            false
        }
        Ok(result) => {
            let truth = oracle(&a, &b);
            rec.record(Check::Decision, result.separable == truth.is_some(), || {
                format!("decide says {}, oracle says {}", result.separable, truth.is_some())
            });
            if let Some(h) = &result.witness {
                let mut ok = verify_witness(&g, &a, &b, h);
                if ok && n <= config.hull_cap {
                    ok = is_convex_oracle(&g, h, config.hull_cap).unwrap_or(false)
                        && is_convex_oracle(&g, &h.complement(), config.hull_cap).unwrap_or(false);
                }
                rec.record(Check::Witness, ok, || {
                    format!("witness {h} is not a separating half-space")
                });
                for comp in &result.trace.components {
                    let inside: Vec<bool> = comp.path.iter().map(|&v| h.contains(v)).collect();
                    let cut = inside.iter().position(|&x| !x).unwrap_or(inside.len());
                    let prefix = cut > 0 && inside[cut..].iter().all(|&x| !x);
                    rec.record(Check::Prefix, prefix, || {
                        format!("witness {h} meets path {:?} in {inside:?}", comp.path)
                    });
                }
            }
            result.separable
        }
    };

    if n <= config.hull_cap {
        for x in &seeds {
            let fast = hull(&g, x).map(|(c, _)| c);
            let slow = hull_oracle(&g, x, config.hull_cap).expect("n within hull cap");
            rec.record(Check::Hull, fast.as_ref() == Ok(&slow), || {
                format!("hull of {x}: {fast:?} vs oracle {slow}")
            });
        }
    }

    let mut hulls = Hulls::new(&g);
    let (ha, hb) = (hulls.of(&a), hulls.of(&b));
    if !ha.intersects(&hb) {
        if let Ok(linkage) = hulls.linkage_candidates(&ha, &hb) {
            for cand in linkage.candidates.iter().filter(|c| !c.intersecting) {
                let sat = hulls.saturate(&cand.a, &cand.b);
                let before = oracle(&cand.a, &cand.b).is_some();
                let after = !sat.intersecting && oracle(&sat.a, &sat.b).is_some();
                rec.record(Check::Saturation, before == after, || {
                    format!(
                        "candidate {} ({} | {}) separable={before}, saturated ({} | {}) separable={after}",
                        cand.index, cand.a, cand.b, sat.a, sat.b
                    )
                });
            }
        }
    }

    let failure = rec.failure.map(|(check, detail)| Counterexample {
        index,
        seed: config.seed,
        check,
        detail,
        graph: g.to_edge_list(),
        a: a.clone(),
        b: b.clone(),
    });
    InstanceReport {
        index,
        n,
        edges: g.edge_count(),
        separable,
        tallies: rec.tallies,
        failure,
    }
}

/// Runs `config.count` instances and aggregates the tallies. Instances are
/// evaluated sequentially; aggregation follows instance order.
pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzReport, ConfigError> {
    config.validate()?;
    let mut report = FuzzReport {
        config: config.clone(),
        total: 0,
        agree: 0,
        separable: 0,
        tallies: Check::ALL.iter().map(|&c| (c, Tally::default())).collect(),
        first_failure: None,
    };
    for index in 0..config.count {
        let inst = run_instance(config, index);
        report.total += 1;
        report.separable += usize::from(inst.separable);
        if inst.failure.is_none() {
            report.agree += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = inst.failure;
        }
        for ((_, total), (_, t)) in report.tallies.iter_mut().zip(&inst.tallies) {
            total.checked += t.checked;
            total.failed += t.failed;
        }
    }
    Ok(report)
}
