//! Edge connectivity and global minimum edge cuts.
//!
//! Unit-capacity max-flow from a fixed source to every other vertex; the
//! smallest of those cuts is a global minimum cut. Matches the brute-force
//! bipartition oracle on every small graph in the test suite.

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSubset, Graph};

/// The edge connectivity λ(g): the least number of edges whose removal
/// disconnects `g`. Disconnected graphs and graphs with fewer than two
/// vertices report 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.vertex_count() < 2 || !is_connected(g, &g.empty_edge_set()) {
        return 0;
    }
    min_cut_flow(g).0
}

/// A minimum edge cut: an edge set of size [`edge_connectivity`] whose
/// removal disconnects `g`. Errors on disconnected input.
pub fn min_edge_cut(g: &Graph) -> Result<EdgeSubset> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter(
            "minimum cut needs at least two vertices".into(),
        ));
    }
    if !is_connected(g, &g.empty_edge_set()) {
        return Err(Error::Disconnected);
    }
    Ok(min_cut_flow(g).1)
}

/// Runs unit-capacity max-flow from vertex 0 to each other vertex and keeps
/// the smallest cut found. Every global minimum cut separates vertex 0 from
/// some vertex, so the minimum over sinks is the global minimum.
fn min_cut_flow(g: &Graph) -> (usize, EdgeSubset) {
    let n = g.vertex_count();
    let mut best: Option<(usize, EdgeSubset)> = None;
    for sink in 1..n {
        let (value, side) = max_flow(g, 0, sink, best.as_ref().map(|b| b.0));
        let Some(side) = side else { continue };
        if best.as_ref().is_none_or(|b| value < b.0) {
            let mut cut = g.empty_edge_set();
            for e in 0..g.edge_count() {
                let (u, v) = g.endpoints(e);
                if side[u] != side[v] {
                    cut.insert(e);
                }
            }
            debug_assert_eq!(cut.len(), value);
            best = Some((value, cut));
        }
    }
    best.expect("connected graph with >= 2 vertices has a cut")
}

/// Edmonds-Karp on the unit-capacity digraph (each undirected edge becomes
/// two opposing arcs). Returns the flow value and the source side of the
/// residual graph, or `(bound, None)` once the flow reaches `bound` (the
/// cut can no longer improve on the best already found).
fn max_flow(g: &Graph, source: usize, sink: usize, bound: Option<usize>) -> (usize, Option<Vec<bool>>) {
    let n = g.vertex_count();
    // residual capacity per (edge, direction): [u->v, v->u]
    let mut cap = vec![[1u8, 1u8]; g.edge_count()];
    let mut flow = 0usize;
    loop {
        if bound.is_some_and(|b| flow >= b) {
            return (flow, None);
        }
        // BFS for an augmenting path
        let mut prev: Vec<Option<(usize, usize, usize)>> = vec![None; n]; // (vertex, edge, dir)
        let mut queue = std::collections::VecDeque::from([source]);
        let mut seen = vec![false; n];
        seen[source] = true;
        while let Some(v) = queue.pop_front() {
            if v == sink {
                break;
            }
            for &(w, e) in g.neighbors(v) {
                let (u0, _) = g.endpoints(e);
                let dir = if v == u0 { 0 } else { 1 };
                if cap[e][dir] > 0 && !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e, dir));
                    queue.push_back(w);
                }
            }
        }
        if !seen[sink] {
            // residual source side
            let mut side = vec![false; n];
            let mut stack = vec![source];
            side[source] = true;
            while let Some(v) = stack.pop() {
                for &(w, e) in g.neighbors(v) {
                    let (u0, _) = g.endpoints(e);
                    let dir = if v == u0 { 0 } else { 1 };
                    if cap[e][dir] > 0 && !side[w] {
                        side[w] = true;
                        stack.push(w);
                    }
                }
            }
            return (flow, Some(side));
        }
        // augment by one unit
        let mut v = sink;
        while v != source {
            let (u, e, dir) = prev[v].unwrap();
            cap[e][dir] -= 1;
            cap[e][1 - dir] += 1;
            v = u;
        }
        flow += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_complete, build_complete_bipartite, build_wheel};
    use crate::oracle;

    #[test]
    fn paper_connectivity_values() {
        assert_eq!(edge_connectivity(&build_complete_bipartite(3, 4).unwrap()), 3);
        let (w9, _) = build_wheel(9).unwrap();
        assert_eq!(edge_connectivity(&w9), 3);
        assert_eq!(edge_connectivity(&build_circulant(7, &[1, 2]).unwrap()), 4);
    }

    #[test]
    fn disconnected_reports_zero() {
        let g = build_circulant(6, &[3]).unwrap();
        assert_eq!(edge_connectivity(&g), 0);
        assert!(min_edge_cut(&g).is_err());
    }

    #[test]
    fn cuts_disconnect_and_are_minimum() {
        for g in [
            build_complete(4).unwrap(),
            build_complete(5).unwrap(),
            build_wheel(4).unwrap().0,
            build_wheel(7).unwrap().0,
            build_circulant(7, &[1, 2]).unwrap(),
            build_circulant(4, &[1]).unwrap(),
            build_complete_bipartite(2, 5).unwrap(),
        ] {
            let lambda = edge_connectivity(&g);
            assert_eq!(lambda, oracle::edge_connectivity_bipartitions(&g));
            let cut = min_edge_cut(&g).unwrap();
            assert_eq!(cut.len(), lambda);
            assert!(!is_connected(&g, &cut));
            // no proper subset of the cut disconnects (checked for |cut| <= 4)
            if lambda <= 4 {
                let ids = cut.to_vec();
                for skip in 0..ids.len() {
                    let mut smaller = g.empty_edge_set();
                    for (i, &e) in ids.iter().enumerate() {
                        if i != skip {
                            smaller.insert(e);
                        }
                    }
                    assert!(is_connected(&g, &smaller));
                }
            }
        }
    }

    #[test]
    fn cycle_cut_has_two_edges() {
        let c4 = build_circulant(4, &[1]).unwrap();
        assert_eq!(edge_connectivity(&c4), 2);
        let cut = min_edge_cut(&c4).unwrap();
        assert_eq!(cut.len(), 2);
        assert!(!is_connected(&c4, &cut));
    }
}
