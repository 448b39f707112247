//! Hamiltonian decompositions, 1-factorisations, the auxiliary digraph on
//! the factors of a 1-factorisation, and directed 2-factors within it.

use crate::error::{Error, Result};
use crate::graph::{
    build_complete, is_hamilton_cycle, EdgeSubset, Graph,
};

/// True iff `parts` are nonempty, pairwise disjoint, and union to the full
/// edge set of `g`.
pub fn validate_partition(g: &Graph, parts: &[EdgeSubset]) -> bool {
    if parts.is_empty() {
        return false;
    }
    let m = g.edge_count();
    let mut seen = EdgeSubset::empty(m);
    for p in parts {
        if p.universe() != m || p.is_empty() || !seen.is_disjoint(p) {
            return false;
        }
        seen = seen.union(p);
    }
    seen.len() == m
}

/// A partition of a graph's edges into Hamilton cycles.
#[derive(Clone, Debug)]
pub struct HamiltonianDecomposition {
    cycles: Vec<EdgeSubset>,
}

impl HamiltonianDecomposition {
    pub fn new(g: &Graph, cycles: Vec<EdgeSubset>) -> Result<Self> {
        if !validate_partition(g, &cycles) {
            return Err(Error::InvalidPartition(
                "cycles do not partition the edge set".into(),
            ));
        }
        for (i, c) in cycles.iter().enumerate() {
            if !is_hamilton_cycle(g, c) {
                return Err(Error::InvalidPartition(format!(
                    "part {i} is not a Hamilton cycle"
                )));
            }
        }
        Ok(HamiltonianDecomposition { cycles })
    }

    pub fn cycles(&self) -> &[EdgeSubset] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// A partition of a graph's edges into 1-factors (perfect matchings).
#[derive(Clone, Debug)]
pub struct OneFactorisation {
    factors: Vec<EdgeSubset>,
}

impl OneFactorisation {
    pub fn new(g: &Graph, factors: Vec<EdgeSubset>) -> Result<Self> {
        if !validate_partition(g, &factors) {
            return Err(Error::InvalidPartition(
                "factors do not partition the edge set".into(),
            ));
        }
        for (i, f) in factors.iter().enumerate() {
            if !is_perfect_matching(g, f) {
                return Err(Error::InvalidPartition(format!(
                    "part {i} is not a perfect matching"
                )));
            }
        }
        Ok(OneFactorisation { factors })
    }

    pub fn factors(&self) -> &[EdgeSubset] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Index of the factor containing edge `e`.
    pub fn factor_of(&self, e: usize) -> Option<usize> {
        self.factors.iter().position(|f| f.contains(e))
    }
}

/// Spanning 1-regular subgraph check.
pub fn is_perfect_matching(g: &Graph, s: &EdgeSubset) -> bool {
    let n = g.vertex_count();
    if s.universe() != g.edge_count() || n % 2 != 0 || s.len() * 2 != n {
        return false;
    }
    let mut covered = vec![false; n];
    for e in s.iter() {
        let (u, v) = g.endpoints(e);
        if covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

/// Directed graph on the factor indices of a 1-factorisation, with an arc
/// `(i, j)` exactly when `F_i ∪ F_j` is a Hamilton cycle. The arc relation
/// is symmetric and loop-free.
#[derive(Clone, Debug)]
pub struct AuxDigraph {
    arcs: Vec<Vec<bool>>,
}

impl AuxDigraph {
    pub fn factor_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail != head && self.arcs[tail][head]
    }

    /// All arcs as ordered pairs, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let k = self.factor_count();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if self.has_arc(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn arc_count(&self) -> usize {
        self.arcs()
            .len()
    }
}

/// Builds the auxiliary digraph of a 1-factorisation by testing every pair
/// of factors for a Hamiltonian union.
pub fn auxiliary_digraph(g: &Graph, f: &OneFactorisation) -> AuxDigraph {
    let k = f.len();
    let mut arcs = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            if is_hamilton_cycle(g, &f.factors()[i].union(&f.factors()[j])) {
                arcs[i][j] = true;
                arcs[j][i] = true;
            }
        }
    }
    AuxDigraph { arcs }
}

/// A directed 2-factor in an auxiliary digraph: a fixed-point-free
/// permutation `h` of the factor indices such that every `(i, h(i))` is an
/// arc. The cycles of `h` are the components of the 2-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorMap {
    succ: Vec<usize>,
}

impl SuccessorMap {
    /// Wraps a successor vector after checking it is a fixed-point-free
    /// permutation. Arc membership is the caller's concern (see
    /// [`SuccessorMap::validate_arcs`]).
    pub fn new(succ: Vec<usize>) -> Result<Self> {
        let k = succ.len();
        let mut seen = vec![false; k];
        for (i, &j) in succ.iter().enumerate() {
            if j >= k {
                return Err(Error::InvalidSuccessor(format!("h({i}) = {j} out of range")));
            }
            if j == i {
                return Err(Error::InvalidSuccessor(format!("fixed point at {i}")));
            }
            if seen[j] {
                return Err(Error::InvalidSuccessor(format!("{j} has two preimages")));
            }
            seen[j] = true;
        }
        Ok(SuccessorMap { succ })
    }

    pub fn successor(&self, i: usize) -> usize {
        self.succ[i]
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.succ
    }

    /// Cycle lengths of the permutation, longest first.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let k = self.succ.len();
        let mut visited = vec![false; k];
        let mut lengths = Vec::new();
        for start in 0..k {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !visited[v] {
                visited[v] = true;
                len += 1;
                v = self.succ[v];
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Checks that every `(i, h(i))` pair has a Hamiltonian union in `f`.
    pub fn validate_arcs(&self, g: &Graph, f: &OneFactorisation) -> Result<()> {
        if self.succ.len() != f.len() {
            return Err(Error::InvalidSuccessor(format!(
                "map over {} factors applied to {} factors",
                self.succ.len(),
                f.len()
            )));
        }
        for (i, &j) in self.succ.iter().enumerate() {
            if !is_hamilton_cycle(g, &f.factors()[i].union(&f.factors()[j])) {
                return Err(Error::InvalidSuccessor(format!(
                    "F_{i} ∪ F_{j} is not a Hamilton cycle"
                )));
            }
        }
        Ok(())
    }
}

/// Walecki's Hamiltonian decomposition of `K_n` for odd `n = 2m + 1`.
///
/// Vertices are `Z_2m ∪ {∞}` with `∞` mapped to vertex `2m`; cycle `i`
/// (for `i = 0..m`) visits `∞, i, i+1, i-1, i+2, i-2, ..., i+m, ∞` with
/// arithmetic mod `2m`. The partition is validated before returning.
pub fn walecki(n: usize) -> Result<(Graph, HamiltonianDecomposition)> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "Walecki decomposition needs odd n >= 3, got {n}"
        )));
    }
    let g = build_complete(n)?;
    let m = (n - 1) / 2;
    let modulus = 2 * m;
    let inf = modulus;
    let mut cycles = Vec::with_capacity(m);
    for i in 0..m {
        let mut seq = Vec::with_capacity(n);
        seq.push(inf);
        seq.push(i % modulus);
        for j in 1..=m {
            seq.push((i + j) % modulus);
            if j < m {
                seq.push((i + modulus - j) % modulus);
            }
        }
        let mut cycle = g.empty_edge_set();
        for k in 0..seq.len() {
            let u = seq[k];
            let v = seq[(k + 1) % seq.len()];
            let e = g.edge_between(u, v).ok_or_else(|| {
                Error::InvalidPartition(format!("zigzag produced missing edge ({u},{v})"))
            })?;
            cycle.insert(e);
        }
        cycles.push(cycle);
    }
    let d = HamiltonianDecomposition::new(&g, cycles)?;
    Ok((g, d))
}

/// The classical starter-and-shift 1-factorisation of `K_v` for even `v =
/// 2m`, on vertices `Z_{2m-1} ∪ {∞}` (with `∞` mapped to vertex `2m - 1`):
/// `F_0 = {{i, -i} : i = 1..m-1} ∪ {{0, ∞}}` and `F_i = F_0 + i`.
pub fn gk_factorisation(v: usize) -> Result<(Graph, OneFactorisation)> {
    if v < 4 || v % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "starter factorisation needs even v >= 4, got {v}"
        )));
    }
    let g = build_complete(v)?;
    let m = v / 2;
    let q = 2 * m - 1;
    let inf = q;
    let mut factors = Vec::with_capacity(q);
    for i in 0..q {
        let mut factor = g.empty_edge_set();
        for j in 1..m {
            let a = (i + j) % q;
            let b = (i + q - j) % q;
            let e = g.edge_between(a, b).expect("complete graph");
            factor.insert(e);
        }
        factor.insert(g.edge_between(i, inf).expect("complete graph"));
        factors.push(factor);
    }
    let f = OneFactorisation::new(&g, factors)?;
    Ok((g, f))
}

/// The explicit directed 2-factor on the starter factorisation of `K_{2m}`:
/// one 3-cycle `F_{2m-2} → F_0 → F_1 → F_{2m-2}` plus 2-cycles
/// `F_2 ↔ F_3, ..., F_{2m-4} ↔ F_{2m-3}`. All of its arcs are between
/// factors at index distance 1 or 2 (mod 2m-1), so they exist in the
/// auxiliary digraph; this is checked before returning.
pub fn hkl_successor_for_k2m(g: &Graph, f: &OneFactorisation) -> Result<SuccessorMap> {
    let k = f.len();
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidSuccessor(format!(
            "expected an odd number >= 3 of factors, got {k}"
        )));
    }
    let mut succ = vec![0usize; k];
    succ[k - 1] = 0;
    succ[0] = 1;
    succ[1] = k - 1;
    let mut j = 2;
    while j + 1 < k - 1 {
        succ[j] = j + 1;
        succ[j + 1] = j;
        j += 2;
    }
    let map = SuccessorMap::new(succ)?;
    map.validate_arcs(g, f)?;
    Ok(map)
}

/// Finds a directed 2-factor of the auxiliary digraph: the
/// lexicographically smallest successor vector realizable as a perfect
/// matching between tails and heads, or `None` if no fixed-point-free
/// system of arcs covers every factor.
pub fn find_directed_2factor(h: &AuxDigraph) -> Option<SuccessorMap> {
    let k = h.factor_count();
    if k == 0 {
        return None;
    }
    let mut assigned: Vec<Option<usize>> = vec![None; k];
    let mut head_used = vec![false; k];
    for tail in 0..k {
        let mut found = false;
        for head in 0..k {
            if head_used[head] || !h.has_arc(tail, head) {
                continue;
            }
            assigned[tail] = Some(head);
            head_used[head] = true;
            if matchable(h, &head_used, tail + 1) {
                found = true;
                break;
            }
            assigned[tail] = None;
            head_used[head] = false;
        }
        if !found {
            return None;
        }
    }
    let succ: Vec<usize> = assigned.into_iter().map(|a| a.unwrap()).collect();
    Some(SuccessorMap::new(succ).expect("arcs are loop-free by construction"))
}

/// Can tails `from..k` be matched to the unused heads? Kuhn's augmenting
/// path algorithm on the remaining bipartite graph.
fn matchable(h: &AuxDigraph, head_used: &[bool], from: usize) -> bool {
    let k = h.factor_count();
    let mut head_match: Vec<Option<usize>> = vec![None; k];
    for tail in from..k {
        let mut seen = vec![false; k];
        if !augment(h, head_used, tail, &mut seen, &mut head_match, from) {
            return false;
        }
    }
    true
}

fn augment(
    h: &AuxDigraph,
    head_used: &[bool],
    tail: usize,
    seen: &mut [bool],
    head_match: &mut [Option<usize>],
    from: usize,
) -> bool {
    for head in 0..h.factor_count() {
        if head_used[head] || seen[head] || !h.has_arc(tail, head) {
            continue;
        }
        seen[head] = true;
        let free = match head_match[head] {
            None => true,
            Some(t) if t >= from => augment(h, head_used, t, seen, head_match, from),
            Some(_) => false,
        };
        if free {
            head_match[head] = Some(tail);
            return true;
        }
    }
    false
}

/// Builds the subgraph formed by a chosen set of factors, as its own graph
/// with fresh edge ids (factor-major order), together with the induced
/// 1-factorisation. The `keep` list orders the new factor indices.
pub fn restrict_to_factors(
    g: &Graph,
    f: &OneFactorisation,
    keep: &[usize],
) -> Result<(Graph, OneFactorisation)> {
    let mut edges = Vec::new();
    let mut parts_as_ids: Vec<Vec<usize>> = Vec::with_capacity(keep.len());
    for &fi in keep {
        let factor = f
            .factors()
            .get(fi)
            .ok_or_else(|| Error::InvalidParameter(format!("no factor {fi}")))?;
        let mut part = Vec::new();
        for e in factor.iter() {
            part.push(edges.len());
            edges.push(g.endpoints(e));
        }
        parts_as_ids.push(part);
    }
    let sub = Graph::new(g.vertex_count(), edges)?;
    let factors = parts_as_ids
        .into_iter()
        .map(|ids| EdgeSubset::from_ids(sub.edge_count(), ids))
        .collect();
    let sub_f = OneFactorisation::new(&sub, factors)?;
    Ok((sub, sub_f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::edge_connectivity;
    use crate::graph::build_circulant;

    #[test]
    fn walecki_small_explicit() {
        // n = 3: the single cycle is the triangle
        let (g3, d3) = walecki(3).unwrap();
        assert_eq!(d3.len(), 1);
        assert_eq!(d3.cycles()[0].len(), 3);
        assert_eq!(g3.edge_count(), 3);

        // n = 5: frozen zigzag cycles {∞0,01,13,32,2∞} and {∞1,12,20,03,3∞}
        let (g5, d5) = walecki(5).unwrap();
        assert_eq!(d5.len(), 2);
        let cycle_pairs = |c: &EdgeSubset| {
            let mut v: Vec<(usize, usize)> = c.iter().map(|e| g5.endpoints(e)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(
            cycle_pairs(&d5.cycles()[0]),
            vec![(0, 1), (0, 4), (1, 3), (2, 3), (2, 4)]
        );
        assert_eq!(
            cycle_pairs(&d5.cycles()[1]),
            vec![(0, 2), (0, 3), (1, 2), (1, 4), (3, 4)]
        );
    }

    #[test]
    fn walecki_partitions_and_implies_connectivity() {
        for n in [3usize, 5, 7, 9, 11] {
            let (g, d) = walecki(n).unwrap();
            assert_eq!(d.len(), (n - 1) / 2);
            assert!(validate_partition(&g, d.cycles()));
            for c in d.cycles() {
                assert!(is_hamilton_cycle(&g, c));
            }
            // a decomposition into c cycles forces λ = 2c
            assert_eq!(edge_connectivity(&g), n - 1);
        }
        assert!(walecki(4).is_err());
        assert!(walecki(1).is_err());
    }

    #[test]
    fn gk_small_explicit() {
        // v = 4 (∞ = 3): F_0 = {12, 0∞}, F_1 = {20, 1∞}, F_2 = {01, 2∞}
        let (g, f) = gk_factorisation(4).unwrap();
        let pairs = |s: &EdgeSubset| {
            let mut v: Vec<(usize, usize)> = s.iter().map(|e| g.endpoints(e)).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(pairs(&f.factors()[0]), vec![(0, 3), (1, 2)]);
        assert_eq!(pairs(&f.factors()[1]), vec![(0, 2), (1, 3)]);
        assert_eq!(pairs(&f.factors()[2]), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn gk_validates_and_has_lemma_arcs() {
        for v in [4usize, 6, 8, 10, 12] {
            let (g, f) = gk_factorisation(v).unwrap();
            let k = v - 1;
            assert_eq!(f.len(), k);
            for i in 0..k {
                for delta in [1usize, 2] {
                    let j = (i + delta) % k;
                    let union = f.factors()[i].union(&f.factors()[j]);
                    assert!(
                        is_hamilton_cycle(&g, &union),
                        "v={v}: F_{i} ∪ F_{j} not Hamiltonian"
                    );
                }
            }
        }
        assert!(gk_factorisation(5).is_err());
    }

    #[test]
    fn aux_digraph_gk4_complete() {
        let (g, f) = gk_factorisation(4).unwrap();
        let h = auxiliary_digraph(&g, &f);
        assert_eq!(h.arc_count(), 6); // complete digraph on 3 vertices
        for (i, j) in h.arcs() {
            assert!(h.has_arc(j, i)); // symmetric
            assert_ne!(i, j);
        }
    }

    #[test]
    fn aux_digraph_gk8_contains_lemma_arcs() {
        let (g, f) = gk_factorisation(8).unwrap();
        let h = auxiliary_digraph(&g, &f);
        for i in 0..7usize {
            for delta in [1usize, 2, 5, 6] {
                // i±1, i±2 mod 7
                assert!(h.has_arc(i, (i + delta) % 7));
            }
        }
    }

    #[test]
    fn aux_digraph_q3_parallel_has_no_arcs() {
        // 3-cube with the three "parallel" factors (edges per coordinate
        // direction); every pairwise union is two disjoint 4-cycles.
        let mut edges = Vec::new();
        for dim in 0..3usize {
            for v in 0..8usize {
                let w = v ^ (1 << dim);
                if v < w {
                    edges.push((v, w));
                }
            }
        }
        let q3 = Graph::new(8, edges).unwrap();
        let factors = (0..3)
            .map(|dim| {
                EdgeSubset::from_ids(12, (4 * dim)..(4 * dim + 4))
            })
            .collect();
        let f = OneFactorisation::new(&q3, factors).unwrap();
        let h = auxiliary_digraph(&q3, &f);
        assert_eq!(h.arc_count(), 0);
        assert!(find_directed_2factor(&h).is_none());
    }

    #[test]
    fn directed_2factor_lexicographic() {
        // complete digraph on 3 vertices -> the rotation 0→1→2→0
        let (g, f) = gk_factorisation(4).unwrap();
        let h = auxiliary_digraph(&g, &f);
        let map = find_directed_2factor(&h).unwrap();
        assert_eq!(map.as_slice(), &[1, 2, 0]);
        assert_eq!(map.cycle_lengths(), vec![3]);

        // two vertices with both arcs -> the swap
        let two = AuxDigraph {
            arcs: vec![vec![false, true], vec![true, false]],
        };
        assert_eq!(find_directed_2factor(&two).unwrap().as_slice(), &[1, 0]);

        // three vertices with only 0↔1 -> no 2-factor
        let mut arcs = vec![vec![false; 3]; 3];
        arcs[0][1] = true;
        arcs[1][0] = true;
        assert!(find_directed_2factor(&AuxDigraph { arcs }).is_none());
    }

    #[test]
    fn hkl_successor_cycle_types() {
        for (v, expected) in [(8usize, vec![3, 2, 2]), (6, vec![3, 2]), (4, vec![3])] {
            let (g, f) = gk_factorisation(v).unwrap();
            let map = hkl_successor_for_k2m(&g, &f).unwrap();
            assert_eq!(map.cycle_lengths(), expected, "v = {v}");
            map.validate_arcs(&g, &f).unwrap();
        }
    }

    #[test]
    fn successor_map_rejects_bad_vectors() {
        assert!(SuccessorMap::new(vec![0, 1]).is_err()); // fixed points
        assert!(SuccessorMap::new(vec![1, 1, 0]).is_err()); // not injective
        assert!(SuccessorMap::new(vec![3, 0, 1]).is_err()); // out of range
        assert_eq!(
            SuccessorMap::new(vec![1, 0]).unwrap().cycle_lengths(),
            vec![2]
        );
    }

    #[test]
    fn partition_validator() {
        let (g, d) = walecki(5).unwrap();
        assert!(validate_partition(&g, d.cycles()));

        let c7 = build_circulant(7, &[1, 2]).unwrap();
        let a = crate::graph::circulant_step_edges(&c7, 7, 1);
        let b = crate::graph::circulant_step_edges(&c7, 7, 2);
        assert!(validate_partition(&c7, &[a.clone(), b.clone()]));
        // shared edge
        assert!(!validate_partition(&c7, &[a.clone(), a.union(&b)]));
        // missing edge
        assert!(!validate_partition(&c7, &[a]));
    }

    #[test]
    fn restriction_keeps_factors() {
        let (g, f) = gk_factorisation(8).unwrap();
        let (sub, sub_f) = restrict_to_factors(&g, &f, &[6, 0, 1, 2, 3]).unwrap();
        assert_eq!(sub.vertex_count(), 8);
        assert_eq!(sub.edge_count(), 20);
        assert_eq!(sub_f.len(), 5);
        assert!((0..8).all(|v| sub.degree(v) == 5));
        assert_eq!(edge_connectivity(&sub), 5);
    }
}
