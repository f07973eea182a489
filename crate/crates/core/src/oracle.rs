//! Brute-force ground truth for small inputs.
//!
//! `cost(i, j)` is the cheapest way to read `s[i..j]` as an approximate
//! palindrome, computed outside-in: pair the two end symbols (free if they
//! pair, 1 otherwise) or drop one of them (1). Empty and single-symbol spans
//! cost nothing. Nothing here is shared with the engines, including the
//! pairing relation and the cell arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, MatchRule, Sequence};

pub const DEFAULT_CAP: usize = 512;

fn pairs(rule: MatchRule, a: u8, b: u8) -> bool {
    match rule {
        MatchRule::Identity => a == b,
        MatchRule::DnaComplement => matches!(
            (a, b),
            (b'A', b'T') | (b'T', b'A') | (b'C', b'G') | (b'G', b'C')
        ),
    }
}

/// Palindrome edit cost of every substring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    n: usize,
    // costs[i * (n + 1) + j] for the half-open span i..j, i <= j
    costs: Vec<u32>,
}

impl CostMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Cost of `s[start..end]`.
    pub fn cost(&self, start: usize, end: usize) -> u32 {
        assert!(start <= end && end <= self.n, "span {start}..{end} outside n={}", self.n);
        self.costs[start * (self.n + 1) + end]
    }

    /// Furthest `t` on diagonal `d` whose span costs at most `e`.
    pub fn reach(&self, d: usize, e: u32) -> u32 {
        assert!(d + 1 < 2 * self.n, "diagonal {d} outside n={}", self.n);
        // Centre c = d / 2. Odd d: the gap after symbol c. Even d: symbol c.
        let c = d / 2;
        let odd_length = d.is_multiple_of(2);
        let limit = if odd_length {
            c.min(self.n - 1 - c)
        } else {
            (c + 1).min(self.n - 1 - c)
        };
        (0..=limit)
            .rev()
            .find(|&t| {
                let (start, end) = if odd_length {
                    (c - t, c + t + 1)
                } else {
                    (c + 1 - t, c + 1 + t)
                };
                self.cost(start, end) <= e
            })
            .expect("the origin itself always costs 0") as u32
    }

    /// `rows[e][d]` for `e` in `0..=k`.
    pub fn reach_rows(&self, k: u32) -> Vec<Vec<u32>> {
        let width = (2 * self.n).saturating_sub(1);
        (0..=k)
            .map(|e| (0..width).map(|d| self.reach(d, e)).collect())
            .collect()
    }
}

pub fn pal_cost(seq: &Sequence, rule: MatchRule) -> Result<CostMatrix, Error> {
    pal_cost_capped(seq, rule, DEFAULT_CAP)
}

pub fn pal_cost_capped(seq: &Sequence, rule: MatchRule, cap: usize) -> Result<CostMatrix, Error> {
    let s = seq.residues();
    let n = s.len();
    if n > cap {
        return Err(Error::OracleTooLong { len: n, cap });
    }
    let stride = n + 1;
    let mut costs = vec![0u32; stride * stride];
    for len in 2..=n {
        for start in 0..=n - len {
            let end = start + len;
            let at = |i: usize, j: usize| costs[i * stride + j];
            let pair = at(start + 1, end - 1) + u32::from(!pairs(rule, s[start], s[end - 1]));
            let drop_left = at(start + 1, end) + 1;
            let drop_right = at(start, end - 1) + 1;
            costs[start * stride + end] = pair.min(drop_left).min(drop_right);
        }
    }
    Ok(CostMatrix { n, costs })
}

/// One-off reach query; builds the whole matrix.
pub fn oracle_reach(seq: &Sequence, rule: MatchRule, d: usize, e: u32) -> Result<u32, Error> {
    Ok(pal_cost(seq, rule)?.reach(d, e))
}
