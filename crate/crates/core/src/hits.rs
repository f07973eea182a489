//! Turning a reach table into reported palindromes.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::reach::ReachTable;
use crate::traceback::Alignment;

/// Parity of a palindrome's length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// Even diagonals carry odd-length palindromes and vice versa.
    pub fn of_diagonal(d: usize) -> Self {
        if d.is_multiple_of(2) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reported approximate palindrome, `start..end` half-open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeHit {
    pub seq_id: String,
    pub diagonal: usize,
    pub start: usize,
    pub end: usize,
    /// Smallest budget reaching this span.
    pub errors: u32,
    pub alignment: Option<Alignment>,
}

impl PalindromeHit {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn parity(&self) -> Parity {
        Parity::of_diagonal(self.diagonal)
    }

    /// The same palindrome in the reversed string of length `n`.
    pub fn mirrored(&self, n: usize) -> PalindromeHit {
        PalindromeHit {
            seq_id: self.seq_id.clone(),
            diagonal: 2 * n - 2 - self.diagonal,
            start: n - self.end,
            end: n - self.start,
            errors: self.errors,
            alignment: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HitFilter {
    pub min_len: usize,
    /// Drop hits whose span lies inside another reported hit.
    pub drop_contained: bool,
}

impl Default for HitFilter {
    fn default() -> Self {
        HitFilter {
            min_len: 8,
            drop_contained: true,
        }
    }
}

/// One candidate per diagonal from the final row, filtered and sorted by
/// `(start, end)`.
pub fn extract_hits(table: &ReachTable, seq_id: &str, filter: HitFilter) -> Vec<PalindromeHit> {
    let geometry = table.geometry();
    // (start, end, diagonal)
    let mut spans: Vec<(usize, usize, usize)> = table
        .final_row()
        .iter()
        .enumerate()
        .map(|(d, &t)| {
            let (start, end) = geometry.span(d, t as usize);
            (start, end, d)
        })
        .filter(|&(start, end, _)| end - start >= filter.min_len)
        .collect();

    if filter.drop_contained {
        // Distinct diagonals have distinct centres, so no two spans are equal.
        // Longest-first within a start, then any span ending no later than
        // the furthest end seen so far is inside an earlier one.
        spans.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let mut furthest = 0;
        spans.retain(|&(_, end, _)| {
            let keep = end > furthest;
            furthest = furthest.max(end);
            keep
        });
    }
    spans.sort_unstable();

    let min_errors = table.min_errors();
    spans
        .into_iter()
        .map(|(start, end, d)| PalindromeHit {
            seq_id: String::from(seq_id),
            diagonal: d,
            start,
            end,
            errors: min_errors[d],
            alignment: None,
        })
        .collect()
}
