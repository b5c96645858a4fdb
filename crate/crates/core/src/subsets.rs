//! Subset enumeration in size-then-lexicographic order: all subsets of size
//! 0, then size 1, …, each size in lexicographic order of sorted member
//! lists. Every "for all S" loop in the crate uses this order, so the first
//! violating set it reports is reproducible.

/// Yields subsets of `universe` as 64-bit masks. `universe` must be sorted
/// and every member must be `< 64`.
#[derive(Debug, Clone)]
pub struct SizeLexSubsets {
    bits: Vec<u64>,
    idx: Vec<usize>,
    max_size: usize,
    started: bool,
    done: bool,
}

impl SizeLexSubsets {
    pub fn new(universe: &[usize], max_size: usize) -> Self {
        debug_assert!(universe.windows(2).all(|w| w[0] < w[1]));
        SizeLexSubsets {
            bits: universe
                .iter()
                .map(|&v| {
                    assert!(v < 64, "vertex {v} does not fit a 64-bit mask");
                    1u64 << v
                })
                .collect(),
            idx: Vec::new(),
            max_size: max_size.min(universe.len()),
            started: false,
            done: false,
        }
    }

    /// All subsets of `0..n`.
    pub fn all(n: usize) -> Self {
        let universe: Vec<usize> = (0..n).collect();
        Self::new(&universe, n)
    }

    fn mask(&self) -> u64 {
        self.idx.iter().fold(0, |m, &i| m | self.bits[i])
    }

    fn advance(&mut self) -> bool {
        let len = self.bits.len();
        let k = self.idx.len();
        for i in (0..k).rev() {
            if self.idx[i] < len - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return true;
            }
        }
        if k >= self.max_size {
            return false;
        }
        self.idx = (0..=k).collect();
        true
    }
}

impl Iterator for SizeLexSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(0);
        }
        if self.advance() {
            Some(self.mask())
        } else {
            self.done = true;
            None
        }
    }
}

/// Number of subsets of an `n`-set with at most `k` members, saturating.
pub fn count_up_to(n: usize, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u128 = 1;
    for i in 0..=k.min(n) {
        total = total.saturating_add(c.min(u64::MAX as u128) as u64);
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    total
}
