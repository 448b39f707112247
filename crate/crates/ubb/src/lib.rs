//! Uncoverings-by-bases: families of spanning trees that tolerate edge
//! failures.
//!
//! A *t-uncovering-by-bases* (UBB) for a connected graph `G` is a family of
//! spanning trees such that every t-subset of edges is disjoint from at
//! least one tree — so after any `t` edge failures some tree survives
//! intact and can carry a broadcast. This crate builds such families for
//! several graph classes (complete, complete bipartite, wheels, and any
//! graph with a Hamiltonian decomposition or a suitable 1-factorisation),
//! verifies and minimizes them, searches for small families by set cover,
//! and simulates the resulting failure-tolerant broadcast.
//!
//! Start with the [`construct`] module or the `examples/` directory; each
//! example exercises one capability end to end.

pub mod connectivity;
pub mod construct;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod spanning;
mod subsets;
pub mod search;
pub mod verify;

pub use connectivity::{edge_connectivity, min_edge_cut};
pub use construct::Uncovering;
pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSubset, Graph, SpanningTree, WheelLabels};
pub use verify::{Verdict, VerdictStatus, VerifyMode};
