//! Minimum-uncovering search by set cover over the full spanning tree
//! pool (greedy and exact branch-and-bound), and the conjecture scanner
//! that checks small graphs for uncoverings no larger than their edge
//! count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::edge_connectivity;
use crate::construct::{ubb_complete, ubb_hamdec, ubb_wheel, Uncovering};
use crate::decompose::HamiltonianDecomposition;
use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSubset, Graph, SpanningTree};
use crate::spanning::enumerate_spanning_trees;
use crate::subsets::{binomial, SubsetIter};
use crate::verify::{schonheim_bound, verify_ubb, VerifyMode};

/// Default cap on the spanning tree pool.
pub const DEFAULT_TREE_CAP: usize = 100_000;
/// Default cap on the t-subset universe.
pub const DEFAULT_SUBSET_CAP: u128 = 10_000_000;
/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// Set-cover view of the problem: `universe[r]` is the r-th t-subset in
/// colex order; tree j "covers" subset r when they are disjoint.
struct CoverInstance {
    trees: Vec<SpanningTree>,
    /// covers[j] = bitset over subset ranks covered by tree j
    covers: Vec<Vec<u64>>,
    subset_count: usize,
    blocks: usize,
}

impl CoverInstance {
    fn build(g: &Graph, t: usize, tree_cap: usize, subset_cap: u128) -> Result<Self> {
        let lambda = edge_connectivity(g);
        if t + 1 > lambda {
            return Err(Error::UncoveringParameters { t, lambda });
        }
        let m = g.edge_count();
        let count = binomial(m, t).filter(|&c| c <= subset_cap).ok_or_else(|| {
            Error::ResourceCeiling(format!("C({m},{t}) exceeds the subset cap {subset_cap}"))
        })?;
        let subset_count = count as usize;
        let trees = enumerate_spanning_trees(g, tree_cap)?;
        let blocks = subset_count.div_ceil(64);
        let mut covers = vec![vec![0u64; blocks]; trees.len()];
        let mut iter = SubsetIter::new(m, t);
        let mut rank = 0usize;
        while let Some(ids) = iter.next() {
            for (j, tree) in trees.iter().enumerate() {
                if tree.edges().is_disjoint_from_ids(ids) {
                    covers[j][rank / 64] |= 1 << (rank % 64);
                }
            }
            rank += 1;
        }
        Ok(CoverInstance {
            trees,
            covers,
            subset_count,
            blocks,
        })
    }

    fn full_mask(&self) -> Vec<u64> {
        let mut mask = vec![u64::MAX; self.blocks];
        let tail = self.subset_count % 64;
        if tail != 0 {
            if let Some(last) = mask.last_mut() {
                *last = (1u64 << tail) - 1;
            }
        }
        mask
    }

    /// Number of still-uncovered subsets tree j would cover.
    fn gain(&self, j: usize, uncovered: &[u64]) -> usize {
        self.covers[j]
            .iter()
            .zip(uncovered)
            .map(|(c, u)| (c & u).count_ones() as usize)
            .sum()
    }

    fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.full_mask();
        let mut remaining = self.subset_count;
        let mut chosen = Vec::new();
        while remaining > 0 {
            let (best, gain) = (0..self.trees.len())
                .map(|j| (j, self.gain(j, &uncovered)))
                .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
                .expect("nonempty tree pool");
            debug_assert!(gain > 0, "t < λ guarantees progress");
            for (u, c) in uncovered.iter_mut().zip(&self.covers[best]) {
                *u &= !c;
            }
            remaining -= gain;
            chosen.push(best);
        }
        chosen
    }

    fn to_uncovering(&self, g: &Graph, t: usize, chosen: &[usize], provenance: &str) -> Result<Uncovering> {
        let trees = chosen.iter().map(|&j| self.trees[j].clone()).collect();
        Uncovering::new(g.clone(), t, trees, provenance)
    }
}

/// Greedy set-cover uncovering: repeatedly takes the tree disjoint from the
/// most still-uncovered t-subsets (ties broken toward the lower tree index
/// in enumeration order). The result always passes verification but need
/// not be minimum.
pub fn greedy_min_ubb(g: &Graph, t: usize, tree_cap: usize) -> Result<Uncovering> {
    let inst = CoverInstance::build(g, t, tree_cap, DEFAULT_SUBSET_CAP)?;
    let chosen = inst.greedy();
    inst.to_uncovering(g, t, &chosen, "greedy")
}

/// Result of the exact search. `optimal` is false when the node budget ran
/// out before the search space was exhausted; the uncovering is then the
/// best incumbent, not a proven minimum.
#[derive(Clone, Debug)]
pub struct ExactResult {
    pub size: usize,
    pub uncovering: Uncovering,
    pub optimal: bool,
    pub nodes: u64,
}

/// Provably minimum uncovering by branch-and-bound set cover, seeded with
/// the greedy incumbent, bounded below by the Schönheim bound, branching
/// on the uncovered subset with the fewest disjoint trees.
pub fn exact_min_ubb(g: &Graph, t: usize, node_budget: u64) -> Result<ExactResult> {
    let inst = CoverInstance::build(g, t, DEFAULT_TREE_CAP, DEFAULT_SUBSET_CAP)?;
    let greedy = inst.greedy();
    let n = g.vertex_count();
    let lower = schonheim_bound(g.edge_count() as u64, (n - 1) as u64, t as u64)? as usize;

    let mut search = BranchAndBound {
        inst: &inst,
        best: greedy.clone(),
        lower,
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    if search.best.len() > lower {
        let mut uncovered = inst.full_mask();
        let mut forbidden = vec![false; inst.trees.len()];
        search.run(&mut Vec::new(), &mut uncovered, inst.subset_count, &mut forbidden);
    }
    let optimal = !search.exhausted || search.best.len() == lower;
    let size = search.best.len();
    let uncovering = inst.to_uncovering(g, t, &search.best, "exact")?;
    Ok(ExactResult {
        size,
        uncovering,
        optimal,
        nodes: search.nodes,
    })
}

struct BranchAndBound<'a> {
    inst: &'a CoverInstance,
    best: Vec<usize>,
    lower: usize,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl BranchAndBound<'_> {
    fn run(
        &mut self,
        chosen: &mut Vec<usize>,
        uncovered: &mut Vec<u64>,
        remaining: usize,
        forbidden: &mut Vec<bool>,
    ) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if remaining == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if self.best.len() <= self.lower || chosen.len() + 1 >= self.best.len() {
            return;
        }
        // pick the uncovered subset with the fewest available covering trees
        let k = self.inst.trees.len();
        let mut branch_rank = None;
        let mut branch_trees: Vec<usize> = Vec::new();
        for block in 0..self.inst.blocks {
            let mut bits = uncovered[block];
            while bits != 0 {
                let bit = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let rank = block * 64 + bit;
                let covering: Vec<usize> = (0..k)
                    .filter(|&j| {
                        !forbidden[j] && self.inst.covers[j][block] & (1 << bit) != 0
                    })
                    .collect();
                if branch_rank.is_none() || covering.len() < branch_trees.len() {
                    branch_rank = Some(rank);
                    branch_trees = covering;
                    if branch_trees.is_empty() {
                        return; // dead branch: some subset has no tree left
                    }
                    if branch_trees.len() == 1 {
                        break;
                    }
                }
            }
            if branch_trees.len() == 1 && branch_rank.is_some() {
                break;
            }
        }
        // include each candidate in turn; trees tried earlier become
        // forbidden for later alternatives so covers are enumerated once
        let mut newly_forbidden = Vec::new();
        for &j in &branch_trees {
            if self.exhausted {
                break;
            }
            let mut delta = 0usize;
            let mut touched = Vec::new();
            for b in 0..self.inst.blocks {
                let newly = self.inst.covers[j][b] & uncovered[b];
                if newly != 0 {
                    delta += newly.count_ones() as usize;
                    touched.push((b, newly));
                    uncovered[b] &= !newly;
                }
            }
            chosen.push(j);
            self.run(chosen, uncovered, remaining - delta, forbidden);
            chosen.pop();
            for (b, bits) in touched {
                uncovered[b] |= bits;
            }
            forbidden[j] = true;
            newly_forbidden.push(j);
        }
        for j in newly_forbidden {
            forbidden[j] = false;
        }
    }
}

/// Per-graph budgets for the conjecture scan.
#[derive(Clone, Debug)]
pub struct ScanBudget {
    pub tree_cap: usize,
    pub subset_cap: u128,
    /// Branch-and-bound node budget; 0 disables the exact search.
    pub exact_nodes: u64,
    /// Exact search is skipped when the tree pool exceeds this.
    pub exact_tree_cap: usize,
    /// Exact search is skipped when the subset universe exceeds this.
    pub exact_subset_cap: u128,
}

impl Default for ScanBudget {
    fn default() -> Self {
        ScanBudget {
            tree_cap: DEFAULT_TREE_CAP,
            subset_cap: DEFAULT_SUBSET_CAP,
            exact_nodes: DEFAULT_NODE_BUDGET,
            exact_tree_cap: 2_000,
            exact_subset_cap: 100_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanStatus {
    /// A verified uncovering of size <= |E| was found.
    Ok,
    /// λ < 2: no positive t to uncover.
    SkippedLowConnectivity,
    SkippedDisconnected,
    /// Caps or budgets prevented a verdict either way.
    Inconclusive,
    /// The exact search proved the minimum exceeds |E|.
    CounterexampleCandidate,
}

/// One report line of the conjecture scan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub graph_id: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub lambda: usize,
    pub t: Option<usize>,
    pub ubb_size: Option<usize>,
    pub ubb_source: Option<String>,
    pub exact_size: Option<usize>,
    pub exact_optimal: Option<bool>,
    pub conjecture_holds: Option<bool>,
    pub status: ScanStatus,
}

/// Checks each connected graph with λ >= 2 for a verified uncovering of
/// size at most its edge count. Recognized families (complete graphs,
/// cycles, wheels) use their dedicated construction; everything else falls
/// back to greedy set cover. The exact minimum is also computed when it
/// fits the budget. Rows come back in input order.
pub fn conjecture_scan(graphs: &[Graph], budget: &ScanBudget) -> Vec<ScanRow> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(id, g)| scan_one(id, g, budget))
        .collect()
}

fn scan_one(graph_id: usize, g: &Graph, budget: &ScanBudget) -> ScanRow {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut row = ScanRow {
        graph_id,
        vertex_count: n,
        edge_count: m,
        lambda: 0,
        t: None,
        ubb_size: None,
        ubb_source: None,
        exact_size: None,
        exact_optimal: None,
        conjecture_holds: None,
        status: ScanStatus::Ok,
    };
    if !is_connected(g, &g.empty_edge_set()) {
        row.status = ScanStatus::SkippedDisconnected;
        return row;
    }
    let lambda = edge_connectivity(g);
    row.lambda = lambda;
    if lambda < 2 {
        row.status = ScanStatus::SkippedLowConnectivity;
        return row;
    }
    let t = lambda - 1;
    row.t = Some(t);

    let constructed = construct_for_family(g);
    let (ubb, source) = match constructed {
        Some((u, source)) => (Some(u), source),
        None => match greedy_min_ubb(g, t, budget.tree_cap) {
            Ok(u) => (Some(u), "greedy"),
            Err(_) => (None, "none"),
        },
    };
    let verified_size = ubb.as_ref().and_then(|u| {
        let mode = VerifyMode::Exhaustive {
            max_subsets: budget.subset_cap.min(u64::MAX as u128) as u64,
        };
        match verify_ubb(u, mode) {
            Ok(v) if v.is_valid() => Some(u.len()),
            _ => None,
        }
    });
    row.ubb_size = verified_size;
    row.ubb_source = Some(source.to_string());

    let tree_count_ok = crate::spanning::count_spanning_trees(g)
        <= num_bigint::BigUint::from(budget.exact_tree_cap);
    let subset_ok =
        binomial(m, t).is_some_and(|c| c <= budget.exact_subset_cap);
    if budget.exact_nodes > 0 && tree_count_ok && subset_ok {
        if let Ok(exact) = exact_min_ubb(g, t, budget.exact_nodes) {
            row.exact_size = Some(exact.size);
            row.exact_optimal = Some(exact.optimal);
        }
    }

    // the conjecture asks for SOME uncovering of size <= |E|
    let sizes = [row.ubb_size, row.exact_size];
    let best = sizes.iter().flatten().min().copied();
    match best {
        Some(size) if size <= m => {
            row.conjecture_holds = Some(true);
            row.status = ScanStatus::Ok;
        }
        _ => {
            if row.exact_optimal == Some(true) {
                // proven minimum above |E|: a genuine counterexample
                row.conjecture_holds = Some(false);
                row.status = ScanStatus::CounterexampleCandidate;
            } else {
                row.conjecture_holds = None;
                row.status = ScanStatus::Inconclusive;
            }
        }
    }
    row
}

/// Dedicated constructions for recognizable families, remapped onto the
/// input graph's edge ids.
fn construct_for_family(g: &Graph) -> Option<(Uncovering, &'static str)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    // complete graph
    if n >= 3 && m == n * (n - 1) / 2 {
        let u = ubb_complete(n).ok()?;
        let remapped = remap_uncovering(&u, g, &(0..n).collect::<Vec<_>>()).ok()?;
        return Some((remapped, "complete"));
    }
    // cycle: connected and 2-regular, so the whole edge set is one
    // Hamilton cycle
    if (0..n).all(|v| g.degree(v) == 2) {
        let d = HamiltonianDecomposition::new(g, vec![g.full_edge_set()]).ok()?;
        let u = ubb_hamdec(g, &d).ok()?;
        return Some((u, "cycle"));
    }
    // wheel: one hub of degree n-1 >= 4, all other vertices of degree 3,
    // rim forming a single cycle
    if let Some(sigma) = wheel_vertex_map(g) {
        let u = ubb_wheel(n - 1).ok()?;
        let remapped = remap_uncovering(&u, g, &sigma).ok()?;
        return Some((remapped, "wheel"));
    }
    None
}

/// For a wheel, maps canonical labels (rim 0..k, hub k) to the input's
/// vertices; `None` if the graph is not a wheel.
fn wheel_vertex_map(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 5 || g.edge_count() != 2 * (n - 1) {
        return None; // W_3 = K_4 is handled as a complete graph
    }
    let k = n - 1;
    let hub = (0..n).find(|&v| g.degree(v) == k)?;
    if (0..n).any(|v| v != hub && g.degree(v) != 3) {
        return None;
    }
    // walk the rim from the smallest rim vertex, lowest-numbered direction
    let start = (0..n).find(|&v| v != hub)?;
    let mut rim = vec![start];
    let mut prev = hub; // so the first step ignores the spoke
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w != hub && w != prev)
            .min()?;
        if next == start {
            break;
        }
        if rim.contains(&next) {
            return None; // rim revisits a vertex without closing: not a cycle
        }
        prev = cur;
        cur = next;
        rim.push(cur);
    }
    if rim.len() != k {
        return None;
    }
    let mut sigma = rim;
    sigma.push(hub);
    Some(sigma)
}

/// Carries an uncovering over to an isomorphic graph: `sigma[v]` is the
/// target vertex for source vertex `v`. Every source edge must exist in
/// the target under the map.
pub fn remap_uncovering(u: &Uncovering, target: &Graph, sigma: &[usize]) -> Result<Uncovering> {
    let src = u.graph();
    if sigma.len() != src.vertex_count() || target.vertex_count() != src.vertex_count() {
        return Err(Error::InvalidParameter(
            "vertex map does not match the graphs".into(),
        ));
    }
    let mut trees = Vec::with_capacity(u.len());
    for tree in u.trees() {
        let mut s = target.empty_edge_set();
        for e in tree.edges().iter() {
            let (a, b) = src.endpoints(e);
            let mapped = target.edge_between(sigma[a], sigma[b]).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "edge ({},{}) missing in the target graph",
                    sigma[a], sigma[b]
                ))
            })?;
            s.insert(mapped);
        }
        trees.push(SpanningTree::new(target, s)?);
    }
    Uncovering::new(target.clone(), u.t(), trees, u.provenance())
}
