//! `palfind` argument handling and the per-sequence driver.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use palfind_core::{HitFilter, MatchRule};

use crate::bench::{parse_plan, run_bench};
use crate::fasta::parse_fasta;
use crate::{analyze, tsv, Analysis, Engine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Arms read the same symbols (plain string palindromes).
    Id,
    /// Arms are reverse complements (A-T, C-G); input is normalized to ACGTN.
    Dna,
}

impl Mode {
    pub fn rule(self) -> MatchRule {
        match self {
            Mode::Id => MatchRule::Identity,
            Mode::Dna => MatchRule::DnaComplement,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    /// Compare symbol pairs directly (fast on real sequences).
    Greedy,
    /// Suffix-array extension queries (guaranteed O(kn) after indexing).
    Lce,
}

impl From<EngineArg> for Engine {
    fn from(arg: EngineArg) -> Self {
        match arg {
            EngineArg::Greedy => Engine::Greedy,
            EngineArg::Lce => Engine::Lce,
        }
    }
}

/// Find long approximate palindromes in FASTA sequences.
///
/// Writes one TSV row per palindrome: seq_id, start, end (0-based,
/// half-open), length, errors, parity, diagonal, alignment.
#[derive(Debug, Parser)]
#[command(
    name = "palfind",
    version,
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// FASTA file, or `-` for standard input.
    #[arg(required = true)]
    pub input: Option<String>,

    /// Maximum number of mismatches and indels per palindrome.
    #[arg(long = "k", default_value_t = 0)]
    pub k: u32,

    /// Shortest palindrome to report.
    #[arg(long, default_value_t = 8)]
    pub min_len: usize,

    #[arg(long, value_enum, default_value_t = Mode::Dna)]
    pub mode: Mode,

    #[arg(long, value_enum, default_value_t = EngineArg::Greedy)]
    pub engine: EngineArg,

    /// Report an alignment per hit. Keeps all k+1 rows of the reach table,
    /// so memory grows to O(kn).
    #[arg(long)]
    pub align: bool,

    /// Also report palindromes lying inside a longer reported one.
    #[arg(long)]
    pub no_containment_filter: bool,

    /// Print per-sequence work counts and timing to standard error.
    #[arg(long)]
    pub stats: bool,

    /// Write TSV here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Time searches over generated sequences; CSV on standard output.
    Bench {
        /// One cell per line: generator,n,k,engine,at_fraction,seed[,id|dna]
        #[arg(long)]
        plan: PathBuf,
    },
}

/// Parses `args` (including the program name) and runs. Returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(config) => run_cli(&config),
        Err(err) => {
            let _ = err.print();
            if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

pub fn run_cli(config: &CliConfig) -> i32 {
    let stderr = io::stderr();
    let mut diag = stderr.lock();
    let result = match &config.command {
        Some(Command::Bench { plan }) => bench(plan),
        None => search(config, &mut diag),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(message) => {
            let _ = writeln!(diag, "palfind: {message}");
            EXIT_INPUT
        }
    }
}

fn bench(plan: &PathBuf) -> Result<(), String> {
    let text = std::fs::read_to_string(plan).map_err(|e| format!("{}: {e}", plan.display()))?;
    let cells = parse_plan(&text).map_err(|e| format!("{}: {e}", plan.display()))?;
    let report = run_bench(&cells);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    report.write_csv(&mut out).map_err(|e| e.to_string())
}

fn search(config: &CliConfig, diag: &mut dyn Write) -> Result<(), String> {
    let input = config.input.as_deref().unwrap_or("-");
    let rule = config.mode.rule();
    let records = {
        let reader: Box<dyn BufRead> = if input == "-" {
            Box::new(io::stdin().lock())
        } else {
            let file = File::open(input).map_err(|e| format!("{input}: {e}"))?;
            Box::new(BufReader::new(file))
        };
        parse_fasta(reader, rule).map_err(|e| format!("{input}: {e}"))?
    };

    let mut out: Box<dyn Write> = match &config.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| format!("{}: {e}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let io_err = |e: io::Error| format!("writing output: {e}");

    let analysis = Analysis {
        rule,
        k: config.k,
        engine: config.engine.into(),
        filter: HitFilter {
            min_len: config.min_len,
            drop_contained: !config.no_containment_filter,
        },
        align: config.align,
    };
    tsv::write_header(&mut out).map_err(io_err)?;
    for seq in &records {
        let started = Instant::now();
        let (hits, stats) = analyze(seq, &analysis);
        let seconds = started.elapsed().as_secs_f64();
        tsv::write_hits(&mut out, &hits).map_err(io_err)?;
        if config.stats {
            // For the LCE engine each extension query stands in for a run of
            // symbol comparisons, so it is what gets counted.
            let work = match analysis.engine {
                Engine::Greedy => stats.comparisons,
                Engine::Lce => stats.lce_queries,
            };
            let ratio = if seq.is_empty() {
                0.0
            } else {
                work as f64 / ((u64::from(config.k) + 1) as f64 * seq.len() as f64)
            };
            writeln!(
                diag,
                "n={} k={} engine={} comparisons={} ratio={:.4} seconds={:.6}",
                seq.len(),
                config.k,
                analysis.engine,
                work,
                ratio,
                seconds
            )
            .map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)
}
