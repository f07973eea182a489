//! The guaranteed `O(kn)` engine.
//!
//! Free extension on cell `(L, R)` compares `s[R+1+i]` with `s[L-1-i]` for
//! `i = 0, 1, ...`. Writing `r` for the mirror of `s` (reverse, or reverse
//! complement in DNA mode), `s[L-1-i]` pairs with `s[R+1+i]` exactly when
//! `r[n-L+i] == s[R+1+i]`, so the run length is the longest common prefix of
//! two suffixes of `s # r $`. A suffix array, its LCP array and a constant-time
//! range-minimum structure answer that in `O(1)`.

use alloc::vec::Vec;

use crate::alphabet::complement;
use crate::geometry::{cell_of, Geometry};
use crate::reach::{self, Extender, ReachTable, Retention, SearchStats};
use crate::rmq::RangeMin;
use crate::suffix_array::{lcp_array, suffix_array};
use crate::{MatchRule, Sequence};

// Codes above the byte range. Each separator occurs once; the two `N` codes
// keep unknown bases on one arm from agreeing with those on the other.
const MID: u32 = 0x100;
const END: u32 = 0x101;
const UNKNOWN_FORWARD: u32 = 0x102;
const UNKNOWN_MIRROR: u32 = 0x103;

/// Longest-common-extension index over `s # r $`.
#[derive(Debug, Clone)]
pub struct LceIndex {
    n: usize,
    text: Vec<u32>,
    rank: Vec<u32>,
    lcp: RangeMin,
}

impl LceIndex {
    pub fn build(seq: &Sequence, rule: MatchRule) -> Self {
        let residues = seq.residues();
        let n = residues.len();
        if n == 0 {
            return LceIndex {
                n,
                text: Vec::new(),
                rank: Vec::new(),
                lcp: RangeMin::new(Vec::new()),
            };
        }

        let mut text = Vec::with_capacity(2 * n + 2);
        match rule {
            MatchRule::Identity => {
                text.extend(residues.iter().map(|&b| u32::from(b)));
                text.push(MID);
                text.extend(residues.iter().rev().map(|&b| u32::from(b)));
            }
            MatchRule::DnaComplement => {
                let forward = |b: u8| match b {
                    b'A' | b'C' | b'G' | b'T' => u32::from(b),
                    _ => UNKNOWN_FORWARD,
                };
                let mirror = |b: u8| match complement(b) {
                    b'N' => UNKNOWN_MIRROR,
                    c => u32::from(c),
                };
                text.extend(residues.iter().map(|&b| forward(b)));
                text.push(MID);
                text.extend(residues.iter().rev().map(|&b| mirror(b)));
            }
        }
        text.push(END);

        let sa = suffix_array(&text);
        let lcp = lcp_array(&text, &sa);
        let mut rank = alloc::vec![0u32; text.len()];
        for (r, &s) in sa.iter().enumerate() {
            rank[s as usize] = r as u32;
        }
        LceIndex {
            n,
            text,
            rank,
            lcp: RangeMin::new(lcp),
        }
    }

    /// Length of the indexed sequence.
    pub fn sequence_len(&self) -> usize {
        self.n
    }

    /// `|s| + |r| + 2`, or zero for an empty sequence.
    pub fn text_len(&self) -> usize {
        self.text.len()
    }

    /// The indexed text as symbol codes: bytes below 256, separators and the
    /// two unknown-base codes above.
    pub fn codes(&self) -> &[u32] {
        &self.text
    }

    /// The indexed text with separators drawn as `#` and `$` and unknown
    /// bases as `N`.
    pub fn render(&self) -> Vec<u8> {
        self.text
            .iter()
            .map(|&c| match c {
                MID => b'#',
                END => b'$',
                UNKNOWN_FORWARD | UNKNOWN_MIRROR => b'N',
                c => c as u8,
            })
            .collect()
    }

    /// Longest common prefix of the suffixes starting at `i` and `j`.
    /// Out-of-range positions give 0.
    #[inline]
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let len = self.text.len();
        if i >= len || j >= len {
            return 0;
        }
        if i == j {
            return len - i;
        }
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp.min(lo + 1, hi) as usize
    }

    /// Free extension of cell `(d, t)`; equal to the greedy slide.
    pub fn slide(&self, d: usize, t: u32) -> u32 {
        let t_max = Geometry::new(self.n).t_max(d) as u32;
        Queries::new(self).extend(d, t, t_max)
    }
}

struct Queries<'a> {
    index: &'a LceIndex,
    issued: u64,
}

impl<'a> Queries<'a> {
    fn new(index: &'a LceIndex) -> Self {
        Queries { index, issued: 0 }
    }
}

impl Extender for Queries<'_> {
    #[inline]
    fn extend(&mut self, d: usize, t: u32, t_max: u32) -> u32 {
        if t >= t_max {
            return t;
        }
        self.issued += 1;
        let n = self.index.n;
        let (left, right) = cell_of(d, t as usize);
        let run = self.index.lce(right + 1, (n + 1) + (n - left));
        (t as usize + run).min(t_max as usize) as u32
    }
}

pub fn search_lce(seq: &Sequence, rule: MatchRule, k: u32, retention: Retention) -> ReachTable {
    search_lce_with_stats(seq, rule, k, retention).0
}

/// Builds the index and runs the search with it. At most one query is issued
/// per table cell.
pub fn search_lce_with_stats(
    seq: &Sequence,
    rule: MatchRule,
    k: u32,
    retention: Retention,
) -> (ReachTable, SearchStats) {
    let index = LceIndex::build(seq, rule);
    search_with_index(&index, rule, k, retention)
}

/// Search reusing a prebuilt index; `rule` must be the one it was built for.
pub fn search_with_index(
    index: &LceIndex,
    rule: MatchRule,
    k: u32,
    retention: Retention,
) -> (ReachTable, SearchStats) {
    let mut queries = Queries::new(index);
    let table = reach::run(index.n, rule, k, retention, &mut queries);
    let stats = SearchStats {
        comparisons: 0,
        lce_queries: queries.issued,
    };
    (table, stats)
}
