//! Command-line front end, file formats and benchmarks for `palfind-core`.

pub mod bench;
pub mod cli;
pub mod fasta;
pub mod tsv;

use std::fmt;
use std::str::FromStr;

use palfind_core::{
    extract_hits, search_lce_with_stats, search_with_stats, traceback, HitFilter, MatchRule,
    PalindromeHit, ReachTable, Retention, SearchStats, Sequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    /// Pairwise symbol comparison.
    #[default]
    Greedy,
    /// Suffix-array longest common extension.
    Lce,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Greedy => "greedy",
            Engine::Lce => "lce",
        }
    }

    pub fn search(
        self,
        seq: &Sequence,
        rule: MatchRule,
        k: u32,
        retention: Retention,
    ) -> (ReachTable, SearchStats) {
        match self {
            Engine::Greedy => search_with_stats(seq, rule, k, retention),
            Engine::Lce => search_lce_with_stats(seq, rule, k, retention),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(Engine::Greedy),
            "lce" => Ok(Engine::Lce),
            other => Err(format!("unknown engine {other:?} (expected greedy or lce)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Analysis {
    pub rule: MatchRule,
    pub k: u32,
    pub engine: Engine,
    pub filter: HitFilter,
    /// Attach an alignment to every hit; keeps all rows of the table.
    pub align: bool,
}

/// Search one sequence and report its hits.
pub fn analyze(seq: &Sequence, analysis: &Analysis) -> (Vec<PalindromeHit>, SearchStats) {
    let retention = if analysis.align {
        Retention::AllRows
    } else {
        Retention::FinalRow
    };
    let (table, stats) = analysis
        .engine
        .search(seq, analysis.rule, analysis.k, retention);
    let mut hits = extract_hits(&table, seq.id(), analysis.filter);
    if analysis.align {
        for hit in &mut hits {
            hit.alignment = Some(traceback(&table, hit.diagonal).expect("all rows retained"));
        }
    }
    (hits, stats)
}
