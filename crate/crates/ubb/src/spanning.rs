//! Spanning tree counting (Kirchhoff's matrix-tree theorem, exact integer
//! arithmetic) and exhaustive spanning tree enumeration.

use num_bigint::{BigInt, BigUint, Sign};

use crate::error::{Error, Result};
use crate::graph::{is_connected, EdgeSubset, Graph, SpanningTree};

/// Number of spanning trees of `g`, exactly. Disconnected graphs have 0;
/// the one-vertex graph has 1 (the empty tree).
///
/// Evaluates the determinant of a Laplacian minor with fraction-free
/// (Bareiss) elimination over big integers, so the count never overflows.
pub fn count_spanning_trees(g: &Graph) -> BigUint {
    let n = g.vertex_count();
    if n == 0 {
        return BigUint::ZERO;
    }
    if n == 1 {
        return BigUint::from(1u32);
    }
    // Laplacian with row/column 0 removed
    let d = n - 1;
    let mut m = vec![vec![BigInt::ZERO; d]; d];
    for v in 1..n {
        m[v - 1][v - 1] = BigInt::from(g.degree(v));
    }
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        if u >= 1 && v >= 1 {
            m[u - 1][v - 1] -= 1;
            m[v - 1][u - 1] -= 1;
        }
    }
    let det = bareiss_determinant(&mut m);
    match det.sign() {
        Sign::Minus => unreachable!("Laplacian minors have non-negative determinant"),
        _ => det.magnitude().clone(),
    }
}

/// Fraction-free Gaussian elimination; every intermediate entry stays an
/// integer. Consumes the matrix.
fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let d = m.len();
    if d == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..d - 1 {
        if m[k][k] == BigInt::ZERO {
            let Some(swap) = (k + 1..d).find(|&r| m[r][k] != BigInt::ZERO) else {
                return BigInt::ZERO;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::ZERO;
        }
        prev = m[k][k].clone();
    }
    let det = m[d - 1][d - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Enumerates every spanning tree of `g` exactly once via edge
/// contraction/deletion, in a deterministic order. Errors with
/// [`Error::ResourceCeiling`] once more than `cap` trees have been found,
/// and with [`Error::Disconnected`] on disconnected input.
pub fn enumerate_spanning_trees(g: &Graph, cap: usize) -> Result<Vec<SpanningTree>> {
    if !is_connected(g, &g.empty_edge_set()) {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(vec![SpanningTree::new(g, g.empty_edge_set())?]);
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    let mut component: Vec<usize> = (0..n).collect();
    let mut removed = g.empty_edge_set();
    recurse(g, &mut component, &mut removed, 0, &mut chosen, &mut out, cap)?;
    Ok(out)
}

/// Branches on the lowest-id usable edge: either it joins the growing
/// forest (contract) or it is discarded (delete). The delete branch is
/// only taken when the remaining graph stays connected, so every leaf of
/// the recursion emits a tree.
fn recurse(
    g: &Graph,
    component: &mut Vec<usize>,
    removed: &mut EdgeSubset,
    next_edge: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<SpanningTree>,
    cap: usize,
) -> Result<()> {
    if chosen.len() + 1 == g.vertex_count() {
        if out.len() >= cap {
            return Err(Error::ResourceCeiling(format!(
                "more than {cap} spanning trees"
            )));
        }
        let s = EdgeSubset::from_ids(g.edge_count(), chosen.iter().copied());
        out.push(SpanningTree::new(g, s)?);
        return Ok(());
    }
    // find the next edge joining two distinct components
    let mut e = next_edge;
    let (cu, cv) = loop {
        if e == g.edge_count() {
            return Ok(()); // cannot happen: delete branch preserved connectivity
        }
        let (u, v) = g.endpoints(e);
        if component[u] != component[v] {
            break (component[u], component[v]);
        }
        e += 1;
    };

    // include e: contract by merging the two components
    let saved: Vec<usize> = component.clone();
    for c in component.iter_mut() {
        if *c == cv {
            *c = cu;
        }
    }
    chosen.push(e);
    recurse(g, component, removed, e + 1, chosen, out, cap)?;
    chosen.pop();
    *component = saved;

    // exclude e: only valid if the rest still connects the graph
    removed.insert(e);
    if is_connected(g, removed) {
        recurse(g, component, removed, e + 1, chosen, out, cap)?;
    }
    removed.remove(e);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        build_circulant, build_complete, build_complete_bipartite, build_wheel, is_spanning_tree,
    };
    use crate::oracle;
    use std::collections::HashSet;

    fn biguint(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn matrix_tree_counts() {
        assert_eq!(count_spanning_trees(&build_complete(4).unwrap()), biguint(16));
        assert_eq!(
            count_spanning_trees(&build_circulant(5, &[1]).unwrap()),
            biguint(5)
        );
        // frozen from exhaustive 4-edge-subset enumeration
        assert_eq!(count_spanning_trees(&build_wheel(4).unwrap().0), biguint(45));
        assert_eq!(
            count_spanning_trees(&build_complete_bipartite(3, 3).unwrap()),
            biguint(81)
        );
    }

    #[test]
    fn cayley_formula() {
        for n in 2..=8usize {
            let expected = BigUint::from(n).pow(n as u32 - 2);
            assert_eq!(count_spanning_trees(&build_complete(n).unwrap()), expected);
        }
    }

    #[test]
    fn count_matches_exhaustive_oracle() {
        for g in [
            build_wheel(4).unwrap().0,
            build_wheel(5).unwrap().0,
            build_complete_bipartite(2, 3).unwrap(),
            build_circulant(6, &[1, 2]).unwrap(),
        ] {
            assert_eq!(
                count_spanning_trees(&g),
                oracle::count_spanning_trees_exhaustive(&g)
            );
        }
    }

    #[test]
    fn disconnected_counts_zero() {
        let g = build_circulant(6, &[3]).unwrap();
        assert_eq!(count_spanning_trees(&g), BigUint::ZERO);
        assert!(enumerate_spanning_trees(&g, 10).is_err());
    }

    #[test]
    fn enumeration_matches_count_and_is_distinct() {
        for g in [
            build_circulant(4, &[1]).unwrap(),
            build_complete(4).unwrap(),
            build_complete_bipartite(3, 3).unwrap(),
            build_wheel(4).unwrap().0,
        ] {
            let trees = enumerate_spanning_trees(&g, 1000).unwrap();
            assert_eq!(biguint(trees.len() as u64), count_spanning_trees(&g));
            let distinct: HashSet<Vec<usize>> =
                trees.iter().map(|t| t.edges().to_vec()).collect();
            assert_eq!(distinct.len(), trees.len());
            for t in &trees {
                assert!(is_spanning_tree(&g, t.edges()));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let k4 = build_complete(4).unwrap();
        assert_eq!(enumerate_spanning_trees(&k4, 16).unwrap().len(), 16);
        assert!(matches!(
            enumerate_spanning_trees(&k4, 15),
            Err(Error::ResourceCeiling(_))
        ));
    }
}
