#![allow(dead_code)]

use palfind_core::oracle::CostMatrix;
use palfind_core::{
    extract_hits, traceback, HitFilter, MatchRule, ReachTable, Retention, Sequence,
};
use proptest::prelude::*;

pub const RULES: [MatchRule; 2] = [MatchRule::Identity, MatchRule::DnaComplement];

/// Alphabets exercised per rule, sizes 2 and 4 (plus N for DNA).
pub fn alphabets(rule: MatchRule) -> &'static [&'static [u8]] {
    match rule {
        MatchRule::Identity => &[b"AB", b"ABCD"],
        MatchRule::DnaComplement => &[b"AT", b"AC", b"ACGT", b"ACGTN"],
    }
}

pub fn seq(rule: MatchRule, residues: &[u8]) -> Sequence {
    match rule {
        MatchRule::Identity => Sequence::bytes("s", residues).unwrap(),
        MatchRule::DnaComplement => Sequence::dna("s", residues).unwrap(),
    }
}

pub fn rows_of(table: &ReachTable) -> Vec<Vec<u32>> {
    (0..=table.k()).map(|e| table.row(e).unwrap().to_vec()).collect()
}

/// Every table cell against the oracle, plus every diagonal's minimal error
/// count and traceback.
pub fn check_against_oracle(seq: &Sequence, rule: MatchRule, k: u32, table: &ReachTable, oracle: &CostMatrix) {
    let n = seq.len();
    assert_eq!(rows_of(table), oracle.reach_rows(k), "{:?} k={k} {rule:?}", String::from_utf8_lossy(seq.residues()));
    let geometry = table.geometry();
    for d in 0..table.diagonal_count() {
        let t = table.reach(d) as usize;
        let (start, end) = geometry.span(d, t);
        let errors = table.min_errors()[d];
        let cost = oracle.cost(start, end);
        assert!(cost <= errors);
        // minimal: nothing cheaper reaches as far
        if errors > 0 {
            assert!(oracle.reach(d, errors - 1) < t as u32);
        }
        let alignment = traceback(table, d).unwrap();
        assert_eq!(alignment.cost(), errors, "d={d} {alignment}");
        assert_eq!(alignment.replay(n), Some((start, end)), "d={d} {alignment}");
    }
}

pub fn residues(alphabet: &'static [u8], max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len)
}

/// (rule, residues) with one of the rule's alphabets.
pub fn case(max_len: usize) -> impl Strategy<Value = (MatchRule, Vec<u8>)> {
    prop::sample::select(&RULES[..]).prop_flat_map(move |rule| {
        prop::sample::select(alphabets(rule))
            .prop_flat_map(move |alphabet| residues(alphabet, max_len))
            .prop_map(move |r| (rule, r))
    })
}

pub fn all_hits(table: &ReachTable, min_len: usize, drop_contained: bool) -> Vec<(usize, usize, u32)> {
    extract_hits(table, "s", HitFilter { min_len, drop_contained })
        .iter()
        .map(|h| (h.start, h.end, h.errors))
        .collect()
}

pub fn full(seq: &Sequence, rule: MatchRule, k: u32) -> ReachTable {
    palfind_core::search(seq, rule, k, Retention::AllRows)
}
