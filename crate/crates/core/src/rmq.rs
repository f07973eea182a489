//! Constant-time range minimum over a fixed `u32` array.
//!
//! Values are split into 64-wide blocks. A sparse table covers block minima;
//! inside a block each position keeps a bitmask of the suffix minima ending
//! there, so an in-block query is one mask and one `trailing_zeros`.
//! Space is `n` words of masks plus `(n / 64) log n` for the sparse table.

use alloc::vec;
use alloc::vec::Vec;

const BLOCK: usize = 64;

#[derive(Debug, Clone)]
pub struct RangeMin {
    values: Vec<u32>,
    masks: Vec<u64>,
    // sparse[level][b] = min of blocks b .. b + 2^level
    sparse: Vec<Vec<u32>>,
}

impl RangeMin {
    pub fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut masks = vec![0u64; n];
        let mut stack: Vec<usize> = Vec::with_capacity(BLOCK);
        for start in (0..n).step_by(BLOCK) {
            stack.clear();
            let mut mask = 0u64;
            for i in start..(start + BLOCK).min(n) {
                while let Some(&top) = stack.last() {
                    if values[top] < values[i] {
                        break;
                    }
                    mask &= !(1u64 << (top - start));
                    stack.pop();
                }
                stack.push(i);
                mask |= 1u64 << (i - start);
                masks[i] = mask;
            }
        }

        let blocks = n.div_ceil(BLOCK);
        let mut sparse = Vec::new();
        if blocks > 0 {
            let base: Vec<u32> = values
                .chunks(BLOCK)
                .map(|c| *c.iter().min().unwrap())
                .collect();
            sparse.push(base);
            let mut width = 1;
            while 2 * width <= blocks {
                let prev = sparse.last().unwrap();
                let level: Vec<u32> = (0..=blocks - 2 * width)
                    .map(|b| prev[b].min(prev[b + width]))
                    .collect();
                sparse.push(level);
                width *= 2;
            }
        }

        RangeMin {
            values,
            masks,
            sparse,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minimum over the inclusive range `lo..=hi`.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi && hi < self.values.len());
        let (block_lo, block_hi) = (lo / BLOCK, hi / BLOCK);
        if block_lo == block_hi {
            return self.in_block(lo, hi);
        }
        let mut best = self
            .in_block(lo, block_lo * BLOCK + BLOCK - 1)
            .min(self.in_block(block_hi * BLOCK, hi));
        if block_lo + 1 < block_hi {
            best = best.min(self.blocks_min(block_lo + 1, block_hi - 1));
        }
        best
    }

    #[inline]
    fn in_block(&self, lo: usize, hi: usize) -> u32 {
        let offset = lo % BLOCK;
        let candidates = self.masks[hi] & (u64::MAX << offset);
        self.values[lo - offset + candidates.trailing_zeros() as usize]
    }

    #[inline]
    fn blocks_min(&self, lo: usize, hi: usize) -> u32 {
        let level = (hi - lo + 1).ilog2() as usize;
        let row = &self.sparse[level];
        row[lo].min(row[hi + 1 - (1 << level)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_scan() {
        let mut state = 17u64;
        for n in [1usize, 2, 63, 64, 65, 130, 300] {
            let values: Vec<u32> = (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    ((state >> 40) % 9) as u32
                })
                .collect();
            let rmq = RangeMin::new(values.clone());
            for lo in 0..n {
                for hi in lo..n {
                    let scan = *values[lo..=hi].iter().min().unwrap();
                    assert_eq!(rmq.min(lo, hi), scan, "n={n} {lo}..={hi}");
                }
            }
        }
    }

    #[test]
    fn empty() {
        assert!(RangeMin::new(Vec::new()).is_empty());
    }
}
