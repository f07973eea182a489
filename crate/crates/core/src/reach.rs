//! The reach table and the row recurrence shared by both engines.

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::Geometry;
use crate::MatchRule;

/// Marks a diagonal with no path. Every diagonal has an origin, so this only
/// shows up in hand-built rows.
pub const INVALID: u32 = u32::MAX;

/// Which rows a search keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Retention {
    /// Two rows of working memory; only row `k` survives.
    FinalRow,
    /// All `k + 1` rows, needed for traceback.
    AllRows,
}

/// Work counters. Not part of a table's identity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Symbol-pair comparisons made while extending for free.
    pub comparisons: u64,
    /// Longest-common-extension queries issued.
    pub lce_queries: u64,
}

impl SearchStats {
    /// `comparisons / ((k + 1) n)`, zero for an empty sequence.
    pub fn comparison_ratio(&self, n: usize, k: u32) -> f64 {
        ratio(self.comparisons, n, k)
    }

    pub fn query_ratio(&self, n: usize, k: u32) -> f64 {
        ratio(self.lce_queries, n, k)
    }
}

fn ratio(count: u64, n: usize, k: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    count as f64 / ((u64::from(k) + 1) as f64 * n as f64)
}

/// `reach[e][d]`: the furthest extension along diagonal `d` reachable for a
/// cost of at most `e`, plus the smallest `e` attaining the final value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachTable {
    n: usize,
    k: u32,
    rule: MatchRule,
    retention: Retention,
    rows: Vec<u32>,
    min_errors: Vec<u32>,
}

impl ReachTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rule(&self) -> MatchRule {
        self.rule
    }

    pub fn retention(&self) -> Retention {
        self.retention
    }

    pub fn geometry(&self) -> Geometry {
        Geometry::new(self.n)
    }

    pub fn diagonal_count(&self) -> usize {
        self.min_errors.len()
    }

    /// Row `e`, if it was retained.
    pub fn row(&self, e: u32) -> Option<&[u32]> {
        let width = self.diagonal_count();
        match self.retention {
            _ if e > self.k => None,
            Retention::AllRows => {
                let start = e as usize * width;
                Some(&self.rows[start..start + width])
            }
            Retention::FinalRow if e == self.k => Some(&self.rows),
            Retention::FinalRow => None,
        }
    }

    pub fn final_row(&self) -> &[u32] {
        let width = self.diagonal_count();
        &self.rows[self.rows.len() - width..]
    }

    pub fn get(&self, e: u32, d: usize) -> Option<u32> {
        self.row(e).and_then(|row| row.get(d).copied())
    }

    /// Final reach on diagonal `d`.
    pub fn reach(&self, d: usize) -> u32 {
        self.final_row()[d]
    }

    /// Smallest budget whose row already holds the final reach, per diagonal.
    pub fn min_errors(&self) -> &[u32] {
        &self.min_errors
    }
}

/// Free extension along one diagonal, the only step the engines do differently.
pub(crate) trait Extender {
    /// Largest `t' >= t`, at most `t_max`, such that every pair step from `t`
    /// to `t'` matches.
    fn extend(&mut self, d: usize, t: u32, t_max: u32) -> u32;
}

pub(crate) fn fill_row0<X: Extender>(geometry: Geometry, ext: &mut X, out: &mut [u32]) {
    for (d, slot) in out.iter_mut().enumerate() {
        *slot = ext.extend(d, 0, geometry.t_max(d) as u32);
    }
}

pub(crate) fn fill_next_row<X: Extender>(
    geometry: Geometry,
    ext: &mut X,
    prev: &[u32],
    out: &mut [u32],
) {
    let width = prev.len();
    debug_assert_eq!(width, out.len());
    for d in 0..width {
        let t_max = geometry.t_max(d) as u32;
        let shift = (d & 1) as u32;
        let mut best = None;
        let mut offer = |v: u32, step: u32| {
            if v != INVALID {
                let c = (v + step).min(t_max);
                best = Some(best.map_or(c, |b: u32| b.max(c)));
            }
        };
        if d > 0 {
            offer(prev[d - 1], shift);
        }
        offer(prev[d], 1);
        if d + 1 < width {
            offer(prev[d + 1], shift);
        }
        out[d] = ext.extend(d, best.unwrap_or(0), t_max);
    }
}

pub(crate) fn run<X: Extender>(
    n: usize,
    rule: MatchRule,
    k: u32,
    retention: Retention,
    ext: &mut X,
) -> ReachTable {
    let geometry = Geometry::new(n);
    let width = geometry.diagonal_count();
    let mut min_errors = vec![0u32; width];

    let rows = match retention {
        Retention::AllRows => {
            let mut rows = vec![0u32; (k as usize + 1) * width];
            fill_row0(geometry, ext, &mut rows[..width]);
            for e in 1..=k as usize {
                let (done, rest) = rows.split_at_mut(e * width);
                let prev = &done[(e - 1) * width..];
                let cur = &mut rest[..width];
                fill_next_row(geometry, ext, prev, cur);
                note_improvements(prev, cur, e as u32, &mut min_errors);
            }
            rows
        }
        Retention::FinalRow => {
            let mut prev = vec![0u32; width];
            let mut cur = vec![0u32; width];
            fill_row0(geometry, ext, &mut prev);
            for e in 1..=k {
                fill_next_row(geometry, ext, &prev, &mut cur);
                note_improvements(&prev, &cur, e, &mut min_errors);
                core::mem::swap(&mut prev, &mut cur);
            }
            prev
        }
    };

    ReachTable {
        n,
        k,
        rule,
        retention,
        rows,
        min_errors,
    }
}

fn note_improvements(prev: &[u32], cur: &[u32], e: u32, min_errors: &mut [u32]) {
    for ((p, c), m) in prev.iter().zip(cur).zip(min_errors.iter_mut()) {
        if c > p {
            *m = e;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Extends nothing; exposes the bare recurrence.
    struct Frozen;

    impl Extender for Frozen {
        fn extend(&mut self, _d: usize, t: u32, _t_max: u32) -> u32 {
            t
        }
    }

    #[test]
    fn invalid_entries_fall_back_to_origin() {
        let g = Geometry::new(3);
        let prev = [INVALID, INVALID, INVALID, 0, INVALID];
        let mut out = [9u32; 5];
        fill_next_row(g, &mut Frozen, &prev, &mut out);
        // d=2 gets 0+0 from d=3 (even diagonal, no shift); d=3 gets 0+1;
        // d=4 gets 0+0 from d=3.
        assert_eq!(out, [0, 0, 0, 1, 0]);
    }

    #[test]
    fn candidates_clamp_to_t_max() {
        let g = Geometry::new(2);
        let mut out = [0u32; 3];
        fill_next_row(g, &mut Frozen, &[0, 1, 0], &mut out);
        assert_eq!(out, [0, 1, 0]);
    }

    #[test]
    fn retention_modes_agree_on_final_row() {
        let full = run(5, MatchRule::Identity, 3, Retention::AllRows, &mut Frozen);
        let last = run(5, MatchRule::Identity, 3, Retention::FinalRow, &mut Frozen);
        assert_eq!(full.final_row(), last.final_row());
        assert_eq!(full.min_errors(), last.min_errors());
        assert!(last.row(0).is_none());
        assert_eq!(full.row(0).unwrap(), &[0; 9]);
        assert!(full.row(4).is_none());
    }
}
