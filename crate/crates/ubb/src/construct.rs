//! Constructions of uncoverings-by-bases for the supported graph families:
//! double stars for complete bipartite graphs, cycle-minus-edge paths for
//! Hamilton-decomposable graphs, factor-successor paths for 1-factorisable
//! regular graphs, the six-tree wheel family, and the pigeonhole family of
//! pairwise disjoint trees.

use crate::connectivity::edge_connectivity;
use crate::decompose::{
    gk_factorisation, hkl_successor_for_k2m, walecki, HamiltonianDecomposition, OneFactorisation,
    SuccessorMap,
};
use crate::error::{Error, Result};
use crate::graph::{
    build_complete_bipartite, build_wheel, is_spanning_tree, EdgeSubset, Graph, SpanningTree,
};

/// An ordered family of spanning trees claimed to uncover every t-subset
/// of edges: each t-subset of `E(G)` should be disjoint from at least one
/// tree. Construction checks every member is a spanning tree and that
/// `t < λ(G)` (otherwise no uncovering can exist); the uncovering claim
/// itself is the verifier's job.
#[derive(Clone, Debug)]
pub struct Uncovering {
    graph: Graph,
    t: usize,
    trees: Vec<SpanningTree>,
    provenance: String,
}

impl Uncovering {
    pub fn new(
        graph: Graph,
        t: usize,
        trees: Vec<SpanningTree>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::InvalidParameter("no trees supplied".into()));
        }
        for tree in &trees {
            if !is_spanning_tree(&graph, tree.edges()) {
                return Err(Error::NotSpanningTree(
                    "uncovering member is not a spanning tree of this graph".into(),
                ));
            }
        }
        let lambda = edge_connectivity(&graph);
        if t + 1 > lambda {
            return Err(Error::UncoveringParameters { t, lambda });
        }
        Ok(Uncovering {
            graph,
            t,
            trees,
            provenance: provenance.into(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Same family with tree `index` removed (for minimality probing).
    pub fn without_tree(&self, index: usize) -> Uncovering {
        let mut trees = self.trees.clone();
        trees.remove(index);
        Uncovering {
            graph: self.graph.clone(),
            t: self.t,
            trees,
            provenance: format!("{}-minus-{index}", self.provenance),
        }
    }
}

/// The double-star family for `K_{m,n}` (parts `X`, `Y`, `2 <= m <= n`):
/// fix `S` = the first `m` vertices of `Y`; for each `u ∈ X`, `v ∈ S` the
/// tree `T_uv` is the edge `uv` plus every other edge at `u` and at `v`.
/// Gives `m²` trees with `t = m - 1`, ordered by `(u, v)`.
pub fn ubb_complete_bipartite(m: usize, n: usize) -> Result<Uncovering> {
    let g = build_complete_bipartite(m, n)?;
    let mut trees = Vec::with_capacity(m * m);
    for u in 0..m {
        for v in m..2 * m {
            let mut s = g.empty_edge_set();
            s.insert(g.edge_between(u, v).expect("complete bipartite"));
            for y in m..m + n {
                if y != v {
                    s.insert(g.edge_between(u, y).expect("complete bipartite"));
                }
            }
            for x in 0..m {
                if x != u {
                    s.insert(g.edge_between(x, v).expect("complete bipartite"));
                }
            }
            trees.push(SpanningTree::new(&g, s)?);
        }
    }
    Uncovering::new(g, m - 1, trees, "bipartite-double-stars")
}

/// One spanning path per (cycle, edge) pair of a Hamiltonian
/// decomposition: for each cycle `C` and each `e ∈ C`, the path `C \ e`.
/// Gives `|E(G)|` trees with `t = 2c - 1` where `c` is the cycle count.
pub fn ubb_hamdec(g: &Graph, d: &HamiltonianDecomposition) -> Result<Uncovering> {
    // revalidate against this graph: the decomposition may have been built
    // elsewhere
    let revalidated = HamiltonianDecomposition::new(g, d.cycles().to_vec())?;
    let t = 2 * revalidated.len() - 1;
    let mut trees = Vec::with_capacity(g.edge_count());
    for cycle in revalidated.cycles() {
        for e in cycle.iter() {
            let mut path = cycle.clone();
            path.remove(e);
            trees.push(SpanningTree::new(g, path)?);
        }
    }
    Uncovering::new(g.clone(), t, trees, "hamiltonian-paths")
}

/// One spanning path per edge of a `k`-regular graph with a 1-factorisation
/// and a directed 2-factor `h` of its auxiliary digraph: for `e ∈ F`, the
/// path `(F ∪ h(F)) \ e`. Gives `|E(G)|` trees with `t = k - 1`, ordered by
/// (factor, edge id).
pub fn ubb_2factor(g: &Graph, f: &OneFactorisation, h: &SuccessorMap) -> Result<Uncovering> {
    let revalidated = OneFactorisation::new(g, f.factors().to_vec())?;
    h.validate_arcs(g, &revalidated)?;
    let k = revalidated.len();
    let mut trees = Vec::with_capacity(g.edge_count());
    for (i, factor) in revalidated.factors().iter().enumerate() {
        let cycle = factor.union(&revalidated.factors()[h.successor(i)]);
        for e in factor.iter() {
            let mut path = cycle.clone();
            path.remove(e);
            trees.push(SpanningTree::new(g, path)?);
        }
    }
    Uncovering::new(g.clone(), k - 1, trees, "factor-successor-paths")
}

/// The six-tree 2-uncovering for the wheel `W_n`, built verbatim from the
/// rim/spoke partition recipes (different for even and odd `n`). Every
/// emitted set must pass the spanning tree check; if the recipe degenerates
/// for some `n` the construction reports unsupported rather than patching.
pub fn ubb_wheel(n: usize) -> Result<Uncovering> {
    let (g, labels) = build_wheel(n)?;
    let subset = |ids: Vec<usize>| EdgeSubset::from_ids(g.edge_count(), ids);
    let sets: Vec<EdgeSubset> = if n % 2 == 0 {
        // A, B, C, D each of size n/2
        let a = subset((1..n).step_by(2).map(|i| labels.spokes[i]).collect());
        let b = subset(
            (2..n - 1)
                .step_by(2)
                .map(|i| labels.spokes[i])
                .chain([labels.rim[0]])
                .collect(),
        );
        let c = subset((1..n).step_by(2).map(|i| labels.rim[i]).collect());
        let d = subset(
            (2..n - 1)
                .step_by(2)
                .map(|i| labels.rim[i])
                .chain([labels.spokes[0]])
                .collect(),
        );
        vec![
            a.union(&b),
            a.union(&c),
            a.union(&d),
            b.union(&c),
            b.union(&d),
            c.union(&d),
        ]
    } else {
        let a = subset((1..n - 1).step_by(2).map(|i| labels.spokes[i]).collect());
        let b = subset((2..n).step_by(2).map(|i| labels.spokes[i]).collect());
        let c = subset((1..n - 1).step_by(2).map(|i| labels.rim[i]).collect());
        let d = subset((2..n.saturating_sub(2)).step_by(2).map(|i| labels.rim[i]).collect());
        let r0 = subset(vec![labels.rim[0]]);
        let rl = subset(vec![labels.rim[n - 1]]);
        let s0 = subset(vec![labels.spokes[0]]);
        vec![
            a.union(&b).union(&r0),
            a.union(&c).union(&rl),
            a.union(&d).union(&rl).union(&s0),
            b.union(&c).union(&s0),
            b.union(&d).union(&rl).union(&r0),
            c.union(&d).union(&r0).union(&s0),
        ]
    };
    let mut trees = Vec::with_capacity(6);
    for (i, s) in sets.into_iter().enumerate() {
        match SpanningTree::new(&g, s) {
            Ok(t) => trees.push(t),
            Err(_) => {
                return Err(Error::ConstructionUnsupported(format!(
                    "wheel recipe set {i} is not a spanning tree for n = {n}"
                )))
            }
        }
    }
    Uncovering::new(g, 2, trees, "wheel-six-trees")
}

/// Uncovering for the complete graph `K_n`, `n >= 3`: Walecki paths for odd
/// `n`, starter-factorisation successor paths for even `n`. Either way the
/// family has `C(n,2)` trees and `t = n - 2`.
pub fn ubb_complete(n: usize) -> Result<Uncovering> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "complete-graph uncovering needs n >= 3, got {n}"
        )));
    }
    if n % 2 == 1 {
        let (g, d) = walecki(n)?;
        let mut u = ubb_hamdec(&g, &d)?;
        u.provenance = "complete-walecki".into();
        Ok(u)
    } else {
        let (g, f) = gk_factorisation(n)?;
        let h = hkl_successor_for_k2m(&g, &f)?;
        let mut u = ubb_2factor(&g, &f, &h)?;
        u.provenance = "complete-starter-successor".into();
        Ok(u)
    }
}

/// Wraps `t + 1` or more pairwise edge-disjoint spanning trees as a t-UBB:
/// any `t` failures miss at least one tree by pigeonhole.
pub fn ubb_from_disjoint_trees(
    g: &Graph,
    trees: Vec<SpanningTree>,
    t: usize,
) -> Result<Uncovering> {
    if trees.len() < t + 1 {
        return Err(Error::InvalidParameter(format!(
            "need at least t + 1 = {} disjoint trees, got {}",
            t + 1,
            trees.len()
        )));
    }
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            if !trees[i].edges().is_disjoint(trees[j].edges()) {
                return Err(Error::InvalidParameter(format!(
                    "trees {i} and {j} share an edge"
                )));
            }
        }
    }
    Uncovering::new(g.clone(), t, trees, "disjoint-trees")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_circulant, build_complete, circulant_step_edges};

    #[test]
    fn bipartite_sizes() {
        let u = ubb_complete_bipartite(3, 3).unwrap();
        assert_eq!(u.len(), 9);
        assert_eq!(u.t(), 2);
        let u = ubb_complete_bipartite(2, 5).unwrap();
        assert_eq!(u.len(), 4);
        assert_eq!(u.t(), 1);
        // size is m^2 regardless of n
        let u = ubb_complete_bipartite(3, 4).unwrap();
        assert_eq!(u.len(), 9);
        assert_eq!(u.t(), 2);
        assert!(ubb_complete_bipartite(1, 3).is_err());
    }

    #[test]
    fn bipartite_trees_are_double_stars() {
        let u = ubb_complete_bipartite(3, 4).unwrap();
        let g = u.graph();
        for tree in u.trees() {
            // double star: two centers of high degree, everything else leaf
            let mut deg = vec![0usize; g.vertex_count()];
            for e in tree.edges().iter() {
                let (a, b) = g.endpoints(e);
                deg[a] += 1;
                deg[b] += 1;
            }
            let mut sorted = deg.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(sorted[0] + sorted[1], g.vertex_count());
            assert!(sorted[2] == 1);
        }
    }

    #[test]
    fn hamdec_paths_on_circulant() {
        let g = build_circulant(7, &[1, 2]).unwrap();
        let d = HamiltonianDecomposition::new(
            &g,
            vec![
                circulant_step_edges(&g, 7, 1),
                circulant_step_edges(&g, 7, 2),
            ],
        )
        .unwrap();
        let u = ubb_hamdec(&g, &d).unwrap();
        assert_eq!(u.len(), 14);
        assert_eq!(u.t(), 3);
        // every tree is a Hamilton path
        for tree in u.trees() {
            let mut deg = vec![0usize; 7];
            for e in tree.edges().iter() {
                let (a, b) = g.endpoints(e);
                deg[a] += 1;
                deg[b] += 1;
            }
            assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 2);
            assert!(deg.iter().all(|&d| d <= 2));
        }
    }

    #[test]
    fn complete_family_sizes() {
        for (n, trees, t) in [(3usize, 3usize, 1usize), (4, 6, 2), (5, 10, 3), (7, 21, 5), (8, 28, 6)] {
            let u = ubb_complete(n).unwrap();
            assert_eq!(u.len(), trees, "n = {n}");
            assert_eq!(u.t(), t, "n = {n}");
            assert_eq!(u.len(), u.graph().edge_count());
        }
        assert!(ubb_complete(2).is_err());
    }

    #[test]
    fn factor_paths_are_hamilton_paths() {
        let u = ubb_complete(6).unwrap();
        let g = u.graph();
        for tree in u.trees() {
            let mut deg = vec![0usize; g.vertex_count()];
            for e in tree.edges().iter() {
                let (a, b) = g.endpoints(e);
                deg[a] += 1;
                deg[b] += 1;
            }
            assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 2);
            assert!(deg.iter().all(|&d| d <= 2));
        }
    }

    #[test]
    fn wheel_has_six_trees_for_all_n() {
        for n in 3..=12 {
            let u = ubb_wheel(n).unwrap();
            assert_eq!(u.len(), 6, "n = {n}");
            assert_eq!(u.t(), 2);
        }
    }

    #[test]
    fn wheel_even_family_is_self_complementary() {
        let u = ubb_wheel(6).unwrap();
        let full = u.graph().full_edge_set();
        for tree in u.trees() {
            let comp = full.difference(tree.edges());
            assert!(
                u.trees().iter().any(|t| t.edges() == &comp),
                "complement of a tree is also in the family"
            );
        }
    }

    #[test]
    fn disjoint_tree_wrapper() {
        let k4 = build_complete(4).unwrap();
        // path 0-1-2-3 and a disjoint star at 3 plus edge (0,2)
        let t1 = SpanningTree::new(
            &k4,
            EdgeSubset::from_ids(6, [
                k4.edge_between(0, 1).unwrap(),
                k4.edge_between(1, 2).unwrap(),
                k4.edge_between(2, 3).unwrap(),
            ]),
        )
        .unwrap();
        let t2 = SpanningTree::new(
            &k4,
            EdgeSubset::from_ids(6, [
                k4.edge_between(0, 2).unwrap(),
                k4.edge_between(0, 3).unwrap(),
                k4.edge_between(1, 3).unwrap(),
            ]),
        )
        .unwrap();
        let u = ubb_from_disjoint_trees(&k4, vec![t1.clone(), t2.clone()], 1).unwrap();
        assert_eq!(u.len(), 2);

        // a single tree is a valid 0-uncovering
        let u0 = ubb_from_disjoint_trees(&k4, vec![t1.clone()], 0).unwrap();
        assert_eq!(u0.t(), 0);

        // overlapping trees are rejected
        let t3 = SpanningTree::new(
            &k4,
            EdgeSubset::from_ids(6, [
                k4.edge_between(0, 1).unwrap(),
                k4.edge_between(1, 2).unwrap(),
                k4.edge_between(1, 3).unwrap(),
            ]),
        )
        .unwrap();
        assert!(ubb_from_disjoint_trees(&k4, vec![t1, t3], 1).is_err());
    }

    #[test]
    fn uncovering_rejects_t_at_lambda() {
        let u = ubb_wheel(5).unwrap();
        let trees = u.trees().to_vec();
        // λ(W_5) = 3, so t = 3 is out of range
        assert!(matches!(
            Uncovering::new(u.graph().clone(), 3, trees, "test"),
            Err(Error::UncoveringParameters { t: 3, lambda: 3 })
        ));
    }
}
