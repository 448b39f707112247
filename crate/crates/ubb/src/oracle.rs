//! Brute-force reference implementations, kept deliberately independent of
//! the production code paths so the test suite can cross-check results.
//! Only usable at small scales.

use num_bigint::BigUint;

use crate::graph::{EdgeSubset, Graph};
use crate::subsets::SubsetIter;

/// Minimum crossing-edge count over all 2^{n-1} - 1 vertex bipartitions.
/// Returns 0 for disconnected graphs or graphs with fewer than 2 vertices.
pub fn edge_connectivity_bipartitions(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    assert!(n <= 24, "bipartition oracle is exponential in n");
    let mut best = usize::MAX;
    // vertex n-1 stays on side 0, so each bipartition is counted once
    for mask in 1u32..(1 << (n - 1)) {
        let crossing = (0..g.edge_count())
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                (mask >> u) & 1 != (mask >> v) & 1
            })
            .count();
        best = best.min(crossing);
    }
    if best == 0 {
        0 // some bipartition has no crossing edges: disconnected
    } else {
        best
    }
}

/// Counts spanning trees by enumerating all (n-1)-subsets of edges.
pub fn count_spanning_trees_exhaustive(g: &Graph) -> BigUint {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return BigUint::from(0u32);
    }
    if n == 1 {
        return BigUint::from(1u32);
    }
    if m < n - 1 {
        return BigUint::from(0u32);
    }
    let mut count = 0u64;
    let mut iter = SubsetIter::new(m, n - 1);
    while let Some(ids) = iter.next() {
        let s = EdgeSubset::from_ids(m, ids.iter().copied());
        if crate::graph::is_spanning_tree(g, &s) {
            count += 1;
        }
    }
    BigUint::from(count)
}

/// Minimum size of a t-uncovering-by-bases, by exhaustive set cover over
/// all spanning trees. Returns `None` if no family of trees works (only
/// possible when t >= λ).
pub fn exact_min_ubb_exhaustive(g: &Graph, t: usize) -> Option<usize> {
    let m = g.edge_count();
    let trees: Vec<EdgeSubset> = {
        let mut out = Vec::new();
        let n = g.vertex_count();
        let mut iter = SubsetIter::new(m, n - 1);
        while let Some(ids) = iter.next() {
            let s = EdgeSubset::from_ids(m, ids.iter().copied());
            if crate::graph::is_spanning_tree(g, &s) {
                out.push(s);
            }
        }
        out
    };
    let subsets: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        let mut iter = SubsetIter::new(m, t);
        while let Some(ids) = iter.next() {
            out.push(ids.to_vec());
        }
        out
    };
    let covers = |chosen: &[usize]| {
        subsets.iter().all(|s| {
            chosen
                .iter()
                .any(|&ti| trees[ti].is_disjoint_from_ids(s))
        })
    };
    for k in 1..=trees.len() {
        let mut iter = SubsetIter::new(trees.len(), k);
        while let Some(ids) = iter.next() {
            if covers(ids) {
                return Some(k);
            }
        }
    }
    None
}
