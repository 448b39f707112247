//! Colex enumeration of fixed-size subsets, binomial coefficients, and
//! colex ranking. Shared by the verifier and the set-cover search.

/// C(n, k) in u128, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// Colex rank of a sorted index set: sum of C(a_i, i+1).
pub fn colex_rank(ids: &[usize]) -> u128 {
    ids.iter()
        .enumerate()
        .map(|(i, &a)| binomial(a, i + 1).expect("rank overflow"))
        .sum()
}

/// Iterates all k-subsets of `0..n` in colexicographic order. Yields the
/// subsets as a sorted slice via `next()` (a lending iterator: the slice
/// borrows the internal buffer).
pub struct SubsetIter {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl SubsetIter {
    pub fn new(n: usize, k: usize) -> Self {
        SubsetIter {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                return None;
            }
            let limit = if i + 1 < k { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                return Some(&self.current);
            }
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Some(6));
        assert_eq!(binomial(36, 7), Some(8_347_680));
        assert_eq!(binomial(5, 0), Some(1));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(28, 6), Some(376_740));
    }

    #[test]
    fn colex_order_small() {
        let mut iter = SubsetIter::new(4, 2);
        let mut all = Vec::new();
        while let Some(s) = iter.next() {
            all.push(s.to_vec());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        // ranks are consecutive
        for (r, s) in all.iter().enumerate() {
            assert_eq!(colex_rank(s), r as u128);
        }
    }

    #[test]
    fn counts_match_binomial() {
        for (n, k) in [(6, 3), (8, 1), (8, 8), (5, 0), (10, 4)] {
            let mut iter = SubsetIter::new(n, k);
            let mut count = 0u128;
            while iter.next().is_some() {
                count += 1;
            }
            assert_eq!(count, binomial(n, k).unwrap());
        }
    }

    #[test]
    fn empty_subset() {
        let mut iter = SubsetIter::new(5, 0);
        assert_eq!(iter.next(), Some(&[][..]));
        assert_eq!(iter.next(), None);
    }
}
