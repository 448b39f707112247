//! Simple undirected graphs with stable integer edge identifiers, the
//! named-family builders, and the basic structural predicates everything
//! else is built on.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index into a graph's edge list. Edge ids are assigned at construction
/// time and never change; every [`EdgeSubset`] refers to this numbering.
pub type EdgeId = usize;

/// A simple undirected graph: no loops, no parallel edges.
///
/// Edges are stored as normalized pairs `(u, v)` with `u < v`, in the order
/// they were supplied at construction. That order is the `EdgeId` space.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    edge_index: HashMap<(usize, usize), EdgeId>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.vertex_count, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Edge ids follow the order
    /// of `edges` after normalizing each pair to `(min, max)`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut edge_index = HashMap::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a},{b}) has an endpoint >= vertex count {vertex_count}"
                )));
            }
            let e = (a.min(b), a.max(b));
            if edge_index.insert(e, id).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
            adjacency[e.0].push((e.1, id));
            adjacency[e.1].push((e.0, id));
            normalized.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
            edge_index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The endpoints of an edge, normalized with `u < v`.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` as `(other endpoint, edge id)` pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adjacency[v]
    }

    /// Looks up the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// An [`EdgeSubset`] containing every edge of this graph.
    pub fn full_edge_set(&self) -> EdgeSubset {
        let mut s = EdgeSubset::empty(self.edge_count());
        for e in 0..self.edge_count() {
            s.insert(e);
        }
        s
    }

    /// An empty [`EdgeSubset`] over this graph's edge id space.
    pub fn empty_edge_set(&self) -> EdgeSubset {
        EdgeSubset::empty(self.edge_count())
    }
}

/// A set of edge ids over one graph's edge id space, stored as a bitmask.
///
/// Set operations are exact. A subset is only meaningful against the graph
/// whose edge ids it was built from; operations on subsets with different
/// universe sizes panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    universe: usize,
    blocks: Vec<u64>,
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSubset{:?}", self.iter().collect::<Vec<_>>())
    }
}

impl EdgeSubset {
    pub fn empty(universe: usize) -> Self {
        EdgeSubset {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(universe: usize, ids: I) -> Self {
        let mut s = Self::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    /// Number of edge ids the owning graph has (not the cardinality).
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: EdgeId) {
        assert!(e < self.universe, "edge id {e} out of range {}", self.universe);
        self.blocks[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: EdgeId) {
        assert!(e < self.universe, "edge id {e} out of range {}", self.universe);
        self.blocks[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.universe && self.blocks[e / 64] & (1 << (e % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "edge subsets belong to different graphs"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a | b)
            .collect();
        EdgeSubset {
            universe: self.universe,
            blocks,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        EdgeSubset {
            universe: self.universe,
            blocks,
        }
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & !b)
            .collect();
        EdgeSubset {
            universe: self.universe,
            blocks,
        }
    }

    /// Complement within the edge id universe.
    pub fn complement(&self) -> Self {
        let mut blocks: Vec<u64> = self.blocks.iter().map(|b| !b).collect();
        let tail = self.universe % 64;
        if tail != 0 {
            if let Some(last) = blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        EdgeSubset {
            universe: self.universe,
            blocks,
        }
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    /// True iff none of the given edge ids is in the set.
    pub fn is_disjoint_from_ids(&self, ids: &[EdgeId]) -> bool {
        ids.iter().all(|&e| !self.contains(e))
    }

    /// Edge ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let bit = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

/// A spanning tree of a specific graph, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: EdgeSubset,
}

impl SpanningTree {
    /// Checks that `edges` has exactly `n - 1` members and connects every
    /// vertex of `g` (which together imply acyclicity).
    pub fn new(g: &Graph, edges: EdgeSubset) -> Result<Self> {
        if !is_spanning_tree(g, &edges) {
            return Err(Error::NotSpanningTree(format!(
                "{} edges on {} vertices, edge ids {:?}",
                edges.len(),
                g.vertex_count(),
                edges.to_vec()
            )));
        }
        Ok(SpanningTree { edges })
    }

    pub fn edges(&self) -> &EdgeSubset {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Edge labels for a wheel graph: rim edge `r_i` joins `v_i` to
/// `v_{i+1 mod n}`, spoke `s_i` joins `v_i` to the hub. The hub is vertex
/// `n`, the rim vertices are `0..n`.
#[derive(Clone, Debug)]
pub struct WheelLabels {
    pub rim: Vec<EdgeId>,
    pub spokes: Vec<EdgeId>,
    pub hub: usize,
}

/// Complete graph `K_n` with edges in lexicographic order:
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn build_complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("K_n needs n >= 2, got {n}")));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Complete bipartite graph `K_{m,n}` with parts `X = 0..m`, `Y = m..m+n`
/// and edges in lexicographic order (all edges at `x_0`, then `x_1`, ...).
pub fn build_complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || m > n {
        return Err(Error::InvalidParameter(format!(
            "K_{{m,n}} needs 2 <= m <= n, got ({m},{n})"
        )));
    }
    let mut edges = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in m..m + n {
            edges.push((u, v));
        }
    }
    Graph::new(m + n, edges)
}

/// Wheel `W_n`: an `n`-cycle (rim vertices `0..n`) plus a hub (vertex `n`)
/// joined to every rim vertex. Edge ids are `r_0..r_{n-1}` then
/// `s_0..s_{n-1}`.
pub fn build_wheel(n: usize) -> Result<(Graph, WheelLabels)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("W_n needs n >= 3, got {n}")));
    }
    let hub = n;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 0..n {
        edges.push((i, hub));
    }
    let g = Graph::new(n + 1, edges)?;
    let labels = WheelLabels {
        rim: (0..n).collect(),
        spokes: (n..2 * n).collect(),
        hub,
    };
    Ok((g, labels))
}

/// Circulant graph on `Z_n` with the given connection steps: vertex `i` is
/// adjacent to `i ± s (mod n)` for each step `s`. Edge ids are step-major:
/// all edges of the first step in vertex order, then the second step, etc.
pub fn build_circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "circulant needs n >= 2, got {n}"
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &s in steps {
        if s < 1 || 2 * s > n {
            return Err(Error::InvalidParameter(format!(
                "circulant step {s} out of range 1..={}",
                n / 2
            )));
        }
        if !seen.insert(s) {
            return Err(Error::InvalidParameter(format!("repeated step {s}")));
        }
    }
    let mut edges = Vec::new();
    for &s in steps {
        for i in 0..n {
            let j = (i + s) % n;
            // for s = n/2 each chord appears from both ends; keep one
            if 2 * s == n && i >= j {
                continue;
            }
            edges.push((i, j));
        }
    }
    Graph::new(n, edges)
}

/// Edge ids of one step-cycle of a circulant graph, in builder order.
pub fn circulant_step_edges(g: &Graph, n: usize, step: usize) -> EdgeSubset {
    let mut s = g.empty_edge_set();
    for i in 0..n {
        let j = (i + step) % n;
        if let Some(e) = g.edge_between(i, j) {
            s.insert(e);
        }
    }
    s
}

/// True iff `g` minus the `removed` edges is connected. Graphs with fewer
/// than two vertices count as connected.
pub fn is_connected(g: &Graph, removed: &EdgeSubset) -> bool {
    connected_with(g, |e| !removed.contains(e))
}

/// Connectivity over the subgraph of edges passing `keep`.
fn connected_with(g: &Graph, keep: impl Fn(EdgeId) -> bool) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut visited = vec![false; n];
    let mut stack = vec![0usize];
    visited[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(w, e) in g.neighbors(v) {
            if keep(e) && !visited[w] {
                visited[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// True iff `s` has exactly `n - 1` edges and connects every vertex of `g`.
pub fn is_spanning_tree(g: &Graph, s: &EdgeSubset) -> bool {
    let n = g.vertex_count();
    if s.universe() != g.edge_count() {
        return false;
    }
    if n == 0 {
        return s.is_empty();
    }
    if s.len() != n - 1 {
        return false;
    }
    connected_with(g, |e| s.contains(e))
}

/// True iff `s` is a connected, 2-regular, spanning subgraph of `g`.
pub fn is_hamilton_cycle(g: &Graph, s: &EdgeSubset) -> bool {
    let n = g.vertex_count();
    if s.universe() != g.edge_count() || n < 3 || s.len() != n {
        return false;
    }
    let mut degree = vec![0usize; n];
    for e in s.iter() {
        let (u, v) = g.endpoints(e);
        degree[u] += 1;
        degree[v] += 1;
    }
    if degree.iter().any(|&d| d != 2) {
        return false;
    }
    connected_with(g, |e| s.contains(e))
}
