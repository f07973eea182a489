//! Approximate palindrome search.
//!
//! A palindrome is centred on an *origin*: a symbol (odd length) or the gap
//! between two symbols (even length). Origins are numbered by diagonal `d` in
//! `0..2n-1`; even diagonals sit on symbols and odd diagonals on gaps. A search
//! with error budget `k` finds, for every diagonal, the furthest extension `t`
//! (number of symbol pairs outward from the origin) reachable by a path of
//! pair matches, mismatches and single-arm indels costing at most `k`.
//!
//! Two engines share the same row recurrence:
//!
//! - [`greedy`] extends each diagonal by comparing symbol pairs one at a time.
//!   Expected `O(kn)` on real sequences, `O(n^2)` on inputs such as `A^n`.
//! - [`lce`] answers each free extension with one longest-common-extension
//!   query over a suffix array, so the search is `O(kn)` after preprocessing.
//!
//! [`oracle`] is an independent quadratic dynamic program used to check both.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod alphabet;
pub mod geometry;
pub mod greedy;
pub mod hits;
pub mod lce;
pub mod oracle;
pub mod reach;
pub mod rmq;
pub mod suffix_array;
pub mod traceback;

mod error;

pub use alphabet::{MatchRule, Sequence, SequenceKind};
pub use error::Error;
pub use geometry::Geometry;
pub use greedy::{search, search_with_stats};
pub use hits::{extract_hits, HitFilter, Parity, PalindromeHit};
pub use lce::{search_lce, search_lce_with_stats, LceIndex};
pub use reach::{ReachTable, Retention, SearchStats};
pub use traceback::{traceback, Alignment, EditOp};
