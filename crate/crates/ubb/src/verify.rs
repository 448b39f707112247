//! Verification of uncoverings-by-bases: exhaustive and sampled checking,
//! minimality certification, the Schönheim lower bound, and the covering
//! design dual view.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::edge_connectivity;
use crate::construct::Uncovering;
use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, Graph};
use crate::subsets::{binomial, SubsetIter};

/// Default ceiling on the number of subsets exhaustive mode will touch.
pub const DEFAULT_SUBSET_CEILING: u64 = 100_000_000;

/// How to check an uncovering.
#[derive(Clone, Copy, Debug)]
pub enum VerifyMode {
    /// Enumerate every t-subset in colex order, up to a subset ceiling.
    Exhaustive { max_subsets: u64 },
    /// Draw `count` uniform t-subsets from a seeded generator.
    Sampled { count: u64, seed: u64 },
}

impl VerifyMode {
    pub fn exhaustive() -> Self {
        VerifyMode::Exhaustive {
            max_subsets: DEFAULT_SUBSET_CEILING,
        }
    }

    pub fn sampled(count: u64, seed: u64) -> Self {
        VerifyMode::Sampled { count, seed }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    /// Every t-subset misses at least one tree (exhaustive proof).
    Valid,
    /// Some t-subset intersects every tree; see the witness.
    Invalid,
    /// No bad subset among the sampled ones; not a proof.
    SampledPass,
}

/// Outcome of a verification run. The witness, when present, is a t-subset
/// of edges intersecting every tree of the checked uncovering.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witness: Option<EdgeSubset>,
    pub subsets_checked: u64,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.status == VerdictStatus::Valid
    }
}

/// Checks the uncovering property of `u` over its own graph: every t-subset
/// of edges must be disjoint from at least one tree.
///
/// Exhaustive mode scans subsets in colex order and stops at the first bad
/// subset, so the witness is the colex-least one. Errors with
/// [`Error::UncoveringParameters`] when `t >= λ(G)` (no uncovering can
/// exist) and with [`Error::ResourceCeiling`] when the subset count exceeds
/// the mode's ceiling.
pub fn verify_ubb(u: &Uncovering, mode: VerifyMode) -> Result<Verdict> {
    let g = u.graph();
    let t = u.t();
    let lambda = edge_connectivity(g);
    if t + 1 > lambda {
        return Err(Error::UncoveringParameters { t, lambda });
    }
    let m = g.edge_count();
    let trees: Vec<&EdgeSubset> = u.trees().iter().map(|tr| tr.edges()).collect();
    match mode {
        VerifyMode::Exhaustive { max_subsets } => {
            if binomial(m, t).is_none_or(|c| c > max_subsets as u128) {
                return Err(Error::ResourceCeiling(format!(
                    "C({m},{t}) exceeds the exhaustive ceiling {max_subsets}"
                )));
            }
            let mut checked = 0u64;
            let mut iter = SubsetIter::new(m, t);
            while let Some(ids) = iter.next() {
                checked += 1;
                if !some_tree_disjoint(&trees, ids) {
                    return Ok(Verdict {
                        status: VerdictStatus::Invalid,
                        witness: Some(EdgeSubset::from_ids(m, ids.iter().copied())),
                        subsets_checked: checked,
                    });
                }
            }
            Ok(Verdict {
                status: VerdictStatus::Valid,
                witness: None,
                subsets_checked: checked,
            })
        }
        VerifyMode::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ids = Vec::with_capacity(t);
            for trial in 0..count {
                sample_subset(&mut rng, m, t, &mut ids);
                if !some_tree_disjoint(&trees, &ids) {
                    return Ok(Verdict {
                        status: VerdictStatus::Invalid,
                        witness: Some(EdgeSubset::from_ids(m, ids.iter().copied())),
                        subsets_checked: trial + 1,
                    });
                }
            }
            Ok(Verdict {
                status: VerdictStatus::SampledPass,
                witness: None,
                subsets_checked: count,
            })
        }
    }
}

fn some_tree_disjoint(trees: &[&EdgeSubset], ids: &[usize]) -> bool {
    trees.iter().any(|tr| tr.is_disjoint_from_ids(ids))
}

/// Uniform t-subset of `0..m` by Floyd's algorithm; output sorted.
fn sample_subset(rng: &mut ChaCha8Rng, m: usize, t: usize, out: &mut Vec<usize>) {
    out.clear();
    for j in m - t..m {
        let r = rng.random_range(0..=j);
        if out.contains(&r) {
            out.push(j);
        } else {
            out.push(r);
        }
    }
    out.sort_unstable();
}

/// Minimality certificate: for each tree, a t-subset that only this tree
/// uncovers (i.e. removing the tree breaks the family).
#[derive(Clone, Debug)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// One entry per tree; `Some` holds a witness showing that tree is
    /// irredundant.
    pub witnesses: Vec<Option<EdgeSubset>>,
}

/// Checks whether every tree of a (valid) uncovering is irredundant by
/// re-verifying the family with each tree removed in turn.
pub fn is_minimal_ubb(u: &Uncovering, mode: VerifyMode) -> Result<MinimalityReport> {
    let mut witnesses = Vec::with_capacity(u.len());
    let mut minimal = true;
    for i in 0..u.len() {
        let verdict = verify_ubb(&u.without_tree(i), mode)?;
        match verdict.status {
            VerdictStatus::Invalid => witnesses.push(verdict.witness),
            _ => {
                minimal = false;
                witnesses.push(None);
            }
        }
    }
    Ok(MinimalityReport { minimal, witnesses })
}

/// The Schönheim lower bound on the size of an (n, k, t)-uncovering
/// (equivalently an (n, n-k, t) covering design): the nested ceiling
/// `⌈n/(n-k) ⌈(n-1)/(n-k-1) ⌈ ... ⌈(n-t+1)/(n-k-t+1)⌉ ... ⌉⌉⌉`, evaluated
/// innermost-first in exact integer arithmetic.
pub fn schonheim_bound(n: u64, k: u64, t: u64) -> Result<u64> {
    if k == 0 || n <= k || t == 0 || t > n - k {
        return Err(Error::InvalidParameter(format!(
            "Schönheim bound needs n > k >= 1 and 1 <= t <= n - k, got ({n},{k},{t})"
        )));
    }
    let mut acc: u128 = 1;
    for j in (0..t).rev() {
        let num = (n - j) as u128 * acc;
        let den = (n - k - j) as u128;
        acc = num.div_ceil(den);
    }
    u64::try_from(acc)
        .map_err(|_| Error::ResourceCeiling("Schönheim bound exceeds u64".into()))
}

/// The dual covering design of an uncovering: the complements of its trees,
/// as blocks over the edge id space.
pub fn export_covering_design(u: &Uncovering) -> Vec<EdgeSubset> {
    u.trees()
        .iter()
        .map(|t| t.edges().complement())
        .collect()
}

/// Exhaustively checks the covering property: every t-subset of `0..n` is
/// contained in at least one block.
pub fn verify_covering(n: usize, blocks: &[EdgeSubset], t: usize) -> bool {
    let mut iter = SubsetIter::new(n, t);
    while let Some(ids) = iter.next() {
        if !blocks
            .iter()
            .any(|b| ids.iter().all(|&i| b.contains(i)))
        {
            return false;
        }
    }
    true
}

/// Colex-least subset of the given size intersecting every tree of `u`, if
/// one exists. Unlike [`verify_ubb`] this puts no precondition on the size:
/// probing at or beyond λ(G) is allowed (and at λ a minimum cut always
/// qualifies, so the result is `Some`).
pub fn find_uncoverable_subset(g: &Graph, u: &Uncovering, size: usize) -> Option<EdgeSubset> {
    let m = g.edge_count();
    let trees: Vec<&EdgeSubset> = u.trees().iter().map(|tr| tr.edges()).collect();
    let mut iter = SubsetIter::new(m, size);
    while let Some(ids) = iter.next() {
        if !some_tree_disjoint(&trees, ids) {
            return Some(EdgeSubset::from_ids(m, ids.iter().copied()));
        }
    }
    None
}
