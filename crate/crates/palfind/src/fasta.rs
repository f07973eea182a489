//! FASTA input.

use std::io::BufRead;

use palfind_core::{MatchRule, Sequence};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FastaError {
    #[error("line {line}: sequence data before the first '>' header")]
    MissingHeader { line: usize },
    #[error("record {id:?}: {source}")]
    Sequence {
        id: String,
        source: palfind_core::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Reads every record. Headers start with `>`, the id is the header text up
/// to the first whitespace, and sequence lines are concatenated with
/// surrounding whitespace removed. DNA mode normalizes residues; identity
/// mode keeps the bytes as written.
pub fn parse_fasta<R: BufRead>(mut reader: R, rule: MatchRule) -> Result<Vec<Sequence>, FastaError> {
    let mut records = Vec::new();
    let mut current: Option<(String, Vec<u8>)> = None;
    let mut line = Vec::new();
    let mut number = 0;

    loop {
        line.clear();
        if reader.read_until(b'\n', &mut line)? == 0 {
            break;
        }
        number += 1;
        let text = line.trim_ascii();
        if let Some(header) = text.strip_prefix(b">") {
            if let Some(done) = current.take() {
                records.push(finish(done, rule)?);
            }
            let id = header
                .split(|b| b.is_ascii_whitespace())
                .next()
                .unwrap_or_default();
            current = Some((String::from_utf8_lossy(id).into_owned(), Vec::new()));
        } else if !text.is_empty() {
            match current.as_mut() {
                Some((_, residues)) => residues.extend_from_slice(text),
                None => return Err(FastaError::MissingHeader { line: number }),
            }
        }
    }
    if let Some(done) = current {
        records.push(finish(done, rule)?);
    }
    Ok(records)
}

fn finish((id, residues): (String, Vec<u8>), rule: MatchRule) -> Result<Sequence, FastaError> {
    let built = match rule {
        MatchRule::DnaComplement => Sequence::dna(id.clone(), residues),
        MatchRule::Identity => Sequence::bytes(id.clone(), residues),
    };
    built.map_err(|source| FastaError::Sequence { id, source })
}
