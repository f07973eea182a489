//! Synthetic sequences and instrumented timing runs.
//!
//! Random generators use ChaCha8 seeded with `seed_from_u64`, so a plan cell
//! always produces the same sequence.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use palfind_core::{MatchRule, Retention, Sequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::Engine;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// i.i.d. bases, each with probability 1/4.
    UniformDna,
    /// A or T with total probability `at_fraction`, split evenly.
    AtRichDna,
    /// `A^n`.
    Homopolymer,
    /// `ATAT...`, truncated to `n`.
    Alternating,
}

impl Generator {
    /// `A^n` only degenerates under identity matching (A does not pair with
    /// A), so it defaults to `id`; everything else to `dna`.
    pub fn default_rule(self) -> MatchRule {
        match self {
            Generator::Homopolymer => MatchRule::Identity,
            _ => MatchRule::DnaComplement,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::UniformDna => "uniform_dna",
            Generator::AtRichDna => "at_rich_dna",
            Generator::Homopolymer => "homopolymer",
            Generator::Alternating => "alternating",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "uniform_dna" => Generator::UniformDna,
            "at_rich_dna" => Generator::AtRichDna,
            "homopolymer" => Generator::Homopolymer,
            "alternating" => Generator::Alternating,
            other => return Err(format!("unknown generator {other:?}")),
        })
    }
}

pub fn generate(kind: Generator, n: usize, at_fraction: f64, seed: u64) -> Sequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let residues: Vec<u8> = match kind {
        Generator::UniformDna => (0..n).map(|_| b"ACGT"[rng.random_range(0..4)]).collect(),
        Generator::AtRichDna => {
            let at = at_fraction.clamp(0.0, 1.0);
            (0..n)
                .map(|_| {
                    let pick = if rng.random_bool(at) { b"AT" } else { b"CG" };
                    pick[usize::from(rng.random_bool(0.5))]
                })
                .collect()
        }
        Generator::Homopolymer => vec![b'A'; n],
        Generator::Alternating => b"AT".iter().copied().cycle().take(n).collect(),
    };
    let id = format!("{kind}_{n}_{seed}");
    Sequence::dna(id, residues).expect("generated sequences fit the length limit")
}

/// One benchmark run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchCell {
    pub generator: Generator,
    pub n: usize,
    pub k: u32,
    pub engine: Engine,
    pub at_fraction: f64,
    pub seed: u64,
    pub rule: MatchRule,
}

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("plan line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parses `generator,n,k,engine,at_fraction,seed[,mode]` lines, `mode` being
/// `id` or `dna` (default per [`Generator::default_rule`]). Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_plan(text: &str) -> Result<Vec<BenchCell>, PlanError> {
    let mut cells = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| PlanError::Syntax {
            line: index + 1,
            message,
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let (generator, n, k, engine, at_fraction, seed, mode) = match fields[..] {
            [g, n, k, e, a, s] => (g, n, k, e, a, s, None),
            [g, n, k, e, a, s, m] => (g, n, k, e, a, s, Some(m)),
            _ => {
                return Err(syntax(format!(
                    "expected 6 or 7 fields, found {}",
                    fields.len()
                )))
            }
        };
        let generator: Generator = generator.parse().map_err(syntax)?;
        let rule = match mode {
            None => generator.default_rule(),
            Some("id") => MatchRule::Identity,
            Some("dna") => MatchRule::DnaComplement,
            Some(other) => return Err(syntax(format!("unknown mode {other:?}"))),
        };
        let number = |what: &str, value: &str| -> Result<u64, PlanError> {
            value
                .parse()
                .map_err(|_| syntax(format!("{what} {value:?} is not a non-negative integer")))
        };
        let at_fraction: f64 = at_fraction
            .parse()
            .ok()
            .filter(|f: &f64| (0.0..=1.0).contains(f))
            .ok_or_else(|| syntax(format!("at_fraction {at_fraction:?} is not in [0, 1]")))?;
        cells.push(BenchCell {
            generator,
            n: number("n", n)? as usize,
            k: u32::try_from(number("k", k)?).map_err(|_| syntax(format!("k {k} too large")))?,
            engine: engine.parse().map_err(syntax)?,
            at_fraction,
            seed: number("seed", seed)?,
            rule,
        });
    }
    Ok(cells)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub generator: Generator,
    pub n: usize,
    pub k: u32,
    pub engine: Engine,
    pub seconds: f64,
    pub comparisons: u64,
    pub lce_queries: u64,
    /// `comparisons / ((k + 1) n)`.
    pub ratio: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub const CSV_HEADER: &str = "generator,n,k,engine,seconds,comparisons,lce_queries,ratio";

impl BenchReport {
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "{CSV_HEADER}")?;
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{:.6},{},{},{:.4}",
                r.generator, r.n, r.k, r.engine, r.seconds, r.comparisons, r.lce_queries, r.ratio
            )?;
        }
        Ok(())
    }
}

/// Runs one cell: generation is not timed; the search (including the LCE
/// index build) is.
pub fn run_cell(cell: &BenchCell) -> BenchRow {
    let seq = generate(cell.generator, cell.n, cell.at_fraction, cell.seed);
    let started = Instant::now();
    let (table, stats) = cell
        .engine
        .search(&seq, cell.rule, cell.k, Retention::FinalRow);
    let seconds = started.elapsed().as_secs_f64();
    drop(table);
    BenchRow {
        generator: cell.generator,
        n: cell.n,
        k: cell.k,
        engine: cell.engine,
        seconds,
        comparisons: stats.comparisons,
        lce_queries: stats.lce_queries,
        ratio: stats.comparison_ratio(cell.n, cell.k),
    }
}

/// Cells run one after another so timings do not interfere.
pub fn run_bench(plan: &[BenchCell]) -> BenchReport {
    BenchReport {
        rows: plan.iter().map(run_cell).collect(),
    }
}
