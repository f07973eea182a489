//! The simple engine: free extension by direct symbol comparison.
//!
//! Expected `O(kn)` time on biological sequences. Long runs of matching pairs
//! (`A^n`, `(AT)^(n/2)`) make it quadratic.

use alloc::vec;
use alloc::vec::Vec;
use core::marker::PhantomData;

use crate::alphabet::{Complement, Identity, PairRelation};
use crate::geometry::{cell_of, Geometry};
use crate::reach::{self, Extender, ReachTable, Retention, SearchStats};
use crate::{MatchRule, Sequence};

struct Scan<'a, R> {
    text: &'a [u8],
    comparisons: u64,
    relation: PhantomData<R>,
}

impl<'a, R: PairRelation> Scan<'a, R> {
    fn new(text: &'a [u8]) -> Self {
        Scan {
            text,
            comparisons: 0,
            relation: PhantomData,
        }
    }
}

impl<R: PairRelation> Extender for Scan<'_, R> {
    #[inline]
    fn extend(&mut self, d: usize, t: u32, t_max: u32) -> u32 {
        let (left, right) = cell_of(d, t as usize);
        let room = (t_max - t) as usize;
        // Pairs (left-1-i, right+1+i) for i < room are all in bounds.
        let mut run = 0;
        while run < room {
            self.comparisons += 1;
            if !R::pairs(self.text[left - 1 - run], self.text[right + 1 + run]) {
                break;
            }
            run += 1;
        }
        t + run as u32
    }
}

/// Runs `body` with a scanner specialised to `rule`; returns its output and
/// the comparison count.
fn scanning<T>(text: &[u8], rule: MatchRule, body: impl ScanBody<T>) -> (T, u64) {
    match rule {
        MatchRule::Identity => {
            let mut scan = Scan::<Identity>::new(text);
            let out = body.call(&mut scan);
            (out, scan.comparisons)
        }
        MatchRule::DnaComplement => {
            let mut scan = Scan::<Complement>::new(text);
            let out = body.call(&mut scan);
            (out, scan.comparisons)
        }
    }
}

trait ScanBody<T> {
    fn call<X: Extender>(self, ext: &mut X) -> T;
}

/// Extend cell `(d, t)` outward while the flanking symbols pair up, never past
/// `t_max(d)`. Returns the new extension and the number of comparisons made.
pub fn slide(seq: &Sequence, rule: MatchRule, d: usize, t: u32) -> (u32, u64) {
    struct Slide {
        d: usize,
        t: u32,
        t_max: u32,
    }
    impl ScanBody<u32> for Slide {
        fn call<X: Extender>(self, ext: &mut X) -> u32 {
            ext.extend(self.d, self.t, self.t_max)
        }
    }
    let t_max = Geometry::new(seq.len()).t_max(d) as u32;
    debug_assert!(t <= t_max);
    scanning(seq.residues(), rule, Slide { d, t, t_max })
}

/// Exact palindromes: row 0 of the reach table.
pub fn compute_row0(seq: &Sequence, rule: MatchRule) -> Vec<u32> {
    struct Row0(Geometry);
    impl ScanBody<Vec<u32>> for Row0 {
        fn call<X: Extender>(self, ext: &mut X) -> Vec<u32> {
            let mut row = vec![0; self.0.diagonal_count()];
            reach::fill_row0(self.0, ext, &mut row);
            row
        }
    }
    scanning(seq.residues(), rule, Row0(Geometry::new(seq.len()))).0
}

/// Row `e` from row `e - 1`. The budget itself does not enter the recurrence.
pub fn advance_row(seq: &Sequence, rule: MatchRule, prev: &[u32]) -> Vec<u32> {
    struct Next<'p>(Geometry, &'p [u32]);
    impl ScanBody<Vec<u32>> for Next<'_> {
        fn call<X: Extender>(self, ext: &mut X) -> Vec<u32> {
            let mut row = vec![0; self.1.len()];
            reach::fill_next_row(self.0, ext, self.1, &mut row);
            row
        }
    }
    let geometry = Geometry::new(seq.len());
    assert_eq!(
        prev.len(),
        geometry.diagonal_count(),
        "row width does not match sequence"
    );
    scanning(seq.residues(), rule, Next(geometry, prev)).0
}

pub fn search(seq: &Sequence, rule: MatchRule, k: u32, retention: Retention) -> ReachTable {
    search_with_stats(seq, rule, k, retention).0
}

pub fn search_with_stats(
    seq: &Sequence,
    rule: MatchRule,
    k: u32,
    retention: Retention,
) -> (ReachTable, SearchStats) {
    struct Search {
        n: usize,
        rule: MatchRule,
        k: u32,
        retention: Retention,
    }
    impl ScanBody<ReachTable> for Search {
        fn call<X: Extender>(self, ext: &mut X) -> ReachTable {
            reach::run(self.n, self.rule, self.k, self.retention, ext)
        }
    }
    let body = Search {
        n: seq.len(),
        rule,
        k,
        retention,
    };
    let (table, comparisons) = scanning(seq.residues(), rule, body);
    let stats = SearchStats {
        comparisons,
        lce_queries: 0,
    };
    (table, stats)
}
