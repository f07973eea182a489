//! Tab-separated hit output. Coordinates are 0-based and half-open.

use std::io::{self, Write};

use palfind_core::PalindromeHit;

pub const HEADER: &str = "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment";

pub fn format_hit(hit: &PalindromeHit) -> String {
    let alignment = hit
        .alignment
        .as_ref()
        .map_or_else(|| String::from("-"), |a| a.to_cigar());
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        hit.seq_id,
        hit.start,
        hit.end,
        hit.len(),
        hit.errors,
        hit.parity(),
        hit.diagonal,
        alignment
    )
}

pub fn write_header<W: Write>(out: &mut W) -> io::Result<()> {
    writeln!(out, "{HEADER}")
}

pub fn write_hits<W: Write>(out: &mut W, hits: &[PalindromeHit]) -> io::Result<()> {
    for hit in hits {
        writeln!(out, "{}", format_hit(hit))?;
    }
    Ok(())
}
