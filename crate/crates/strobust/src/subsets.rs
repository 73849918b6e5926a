//! Ordered enumeration and uniform sampling of fixed-size index subsets.
//!
//! Every exhaustive checker walks subsets in lexicographic order so that
//! "first counterexample" is well defined and reproducible.

use rand::Rng;

/// Binomial coefficient C(n, k) as u128. Saturates instead of overflowing;
/// callers only compare against budgets far below the saturation point.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic enumeration of all size-`k` subsets of `0..n`.
pub struct SubsetIter {
    n: usize,
    k: usize,
    cur: Vec<usize>,
    started: bool,
    done: bool,
}

impl SubsetIter {
    pub fn new(n: usize, k: usize) -> Self {
        SubsetIter {
            n,
            k,
            cur: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Advances to the next subset, returning it as a sorted slice.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.cur);
        }
        // Find the rightmost element that can still move up.
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.cur[i] != i + self.n - k {
                break;
            }
        }
        self.cur[i] += 1;
        for j in i + 1..k {
            self.cur[j] = self.cur[j - 1] + 1;
        }
        Some(&self.cur)
    }
}

/// Draws a uniformly random size-`k` subset of `0..n`, sorted ascending
/// (Floyd's algorithm; deterministic for a given rng state).
pub fn sample_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<usize> {
    assert!(k <= n);
    let mut chosen = std::collections::BTreeSet::new();
    for j in n - k..n {
        let t = rng.gen_range(0..=j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    chosen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(20, 4), 4845);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn enumerates_all_subsets_in_order() {
        let mut it = SubsetIter::new(4, 2);
        let mut seen = Vec::new();
        while let Some(s) = it.next_subset() {
            seen.push(s.to_vec());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn zero_size_subset() {
        let mut it = SubsetIter::new(5, 0);
        assert_eq!(it.next_subset(), Some(&[][..]));
        assert_eq!(it.next_subset(), None);
    }

    #[test]
    fn sampling_is_uniformish_and_sorted() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts = [0usize; 6];
        for _ in 0..6000 {
            let s = sample_subset(&mut rng, 4, 2);
            assert_eq!(s.len(), 2);
            assert!(s[0] < s[1]);
            let idx = match (s[0], s[1]) {
                (0, 1) => 0,
                (0, 2) => 1,
                (0, 3) => 2,
                (1, 2) => 3,
                (1, 3) => 4,
                (2, 3) => 5,
                _ => unreachable!(),
            };
            counts[idx] += 1;
        }
        // 6000 draws over 6 cells: each should be near 1000.
        for &c in &counts {
            assert!(c > 800 && c < 1200, "skewed sample counts: {counts:?}");
        }
    }
}
