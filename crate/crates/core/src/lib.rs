//! Half-space separation in the monophonic convexity of graphs.
//!
//! A vertex set `C` of a graph is *monophonically convex* when every vertex on
//! a chordless path between two members of `C` is itself in `C`. Two vertex
//! sets `A`, `B` are *half-space separable* when the vertices can be split into
//! complementary convex sets `H ⊇ A` and `V \ H ⊇ B`.
//!
//! The crate decides separability in polynomial time and returns a verified
//! witness:
//!
//! ```
//! use monosep::graph::Graph;
//! use monosep::separation::{decide, verify_witness};
//!
//! let g = Graph::path(4);
//! let (a, b) = (g.set([0]), g.set([3]));
//! let result = decide(&g, &a, &b).unwrap();
//! assert!(result.separable);
//! assert!(verify_witness(&g, &a, &b, result.witness.as_ref().unwrap()));
//! ```
//!
//! Modules:
//! - [`graph`]: graphs, vertex sets, traversal primitives and the edge-list format.
//! - [`monophonic`]: intervals, convexity test and the hull operator.
//! - [`separation`]: the separability decision, its building blocks and brute-force oracles.
//! - [`convexity`]: convexity spaces given by an arbitrary hull operator.
//! - [`harness`]: seeded random instances and the oracle cross-check driver.

pub mod convexity;
pub mod graph;
pub mod harness;
pub mod monophonic;
pub mod separation;

/// A brute-force routine refused to run because its input is too large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("input size {size} exceeds the brute-force cap of {cap}")]
pub struct CapExceeded {
    pub size: usize,
    pub cap: usize,
}

pub(crate) fn check_cap(size: usize, cap: usize) -> Result<(), CapExceeded> {
    if size > cap {
        Err(CapExceeded { size, cap })
    } else {
        Ok(())
    }
}
