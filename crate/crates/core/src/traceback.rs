//! Recovering one optimal alignment for a diagonal from a full reach table.
//!
//! Working backwards from `(d, e)`, the value before free extension is the
//! clamped maximum of the three predecessor candidates; the free run becomes
//! `M` ops and the chosen predecessor contributes one `X` (same diagonal),
//! `R` (from `d - 1`) or `L` (from `d + 1`). Ties go to `X`, then `d - 1`,
//! then `d + 1`.
//!
//! A neighbour candidate can be clamped at the string end. Its cell is then
//! one symbol *wider* than the target cell, so instead of appending a step the
//! predecessor's path is trimmed by that outer symbol, which never costs more
//! than the indel it replaces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::reach::{ReachTable, Retention};
use crate::{Error, Geometry};

/// One centre-out step of a palindrome alignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditOp {
    /// Outer pair matches.
    Match,
    /// Outer pair differs.
    Mismatch,
    /// One unpaired symbol on the left arm.
    LeftIndel,
    /// One unpaired symbol on the right arm.
    RightIndel,
}

impl EditOp {
    pub fn code(self) -> char {
        match self {
            EditOp::Match => 'M',
            EditOp::Mismatch => 'X',
            EditOp::LeftIndel => 'L',
            EditOp::RightIndel => 'R',
        }
    }

    pub fn cost(self) -> u32 {
        u32::from(self != EditOp::Match)
    }

    fn from_code(c: char) -> Option<Self> {
        Some(match c {
            'M' => EditOp::Match,
            'X' => EditOp::Mismatch,
            'L' => EditOp::LeftIndel,
            'R' => EditOp::RightIndel,
            _ => return None,
        })
    }
}

/// A path from an origin, ops listed centre-out and run-length encoded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alignment {
    pub origin: usize,
    pub runs: Vec<(u32, EditOp)>,
}

impl Alignment {
    pub fn from_ops(origin: usize, ops: &[EditOp]) -> Self {
        let mut runs: Vec<(u32, EditOp)> = Vec::new();
        for &op in ops {
            match runs.last_mut() {
                Some((count, last)) if *last == op => *count += 1,
                _ => runs.push((1, op)),
            }
        }
        Alignment { origin, runs }
    }

    /// Parses the `"2M1X1L"` form.
    pub fn parse(origin: usize, text: &str) -> Option<Self> {
        let mut ops = Vec::new();
        let mut count: Option<u32> = None;
        for c in text.chars() {
            if let Some(digit) = c.to_digit(10) {
                count = Some(count.unwrap_or(0).checked_mul(10)?.checked_add(digit)?);
            } else {
                let op = EditOp::from_code(c)?;
                ops.extend(core::iter::repeat_n(op, count.take()? as usize));
            }
        }
        count.is_none().then(|| Alignment::from_ops(origin, &ops))
    }

    pub fn ops(&self) -> impl Iterator<Item = EditOp> + '_ {
        self.runs
            .iter()
            .flat_map(|&(count, op)| core::iter::repeat_n(op, count as usize))
    }

    pub fn cost(&self) -> u32 {
        self.runs.iter().map(|&(count, op)| count * op.cost()).sum()
    }

    /// Half-open span reached by applying the ops from the origin, or `None`
    /// if a step leaves `0..n`.
    pub fn replay(&self, n: usize) -> Option<(usize, usize)> {
        let (mut start, mut end) = (self.origin.div_ceil(2), self.origin / 2 + 1);
        if end > n {
            return None;
        }
        for op in self.ops() {
            if matches!(op, EditOp::Match | EditOp::Mismatch | EditOp::LeftIndel) {
                start = start.checked_sub(1)?;
            }
            if matches!(op, EditOp::Match | EditOp::Mismatch | EditOp::RightIndel) {
                end += 1;
                if end > n {
                    return None;
                }
            }
        }
        Some((start, end))
    }

    pub fn to_cigar(&self) -> String {
        let mut out = String::new();
        write!(out, "{self}").unwrap();
        out
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(count, op) in &self.runs {
            write!(f, "{count}{}", op.code())?;
        }
        Ok(())
    }
}

/// An optimal alignment for the final reach on diagonal `d`.
pub fn traceback(table: &ReachTable, d: usize) -> Result<Alignment, Error> {
    if table.retention() != Retention::AllRows {
        return Err(Error::RowsNotRetained);
    }
    let count = table.diagonal_count();
    if d >= count {
        return Err(Error::DiagonalOutOfRange { d, count });
    }
    let mut path = Path::default();
    trace(table, d, table.min_errors()[d], table.reach(d), &mut path);
    Ok(Alignment::from_ops(path.origin, &path.ops))
}

#[derive(Default)]
struct Path {
    origin: usize,
    ops: Vec<EditOp>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

impl Path {
    /// Removes the outermost symbol on `side`: the last op touching that arm
    /// either disappears (an indel) or becomes an indel on the other arm (a
    /// pair). Without such an op, that symbol belongs to the origin.
    fn trim(&mut self, side: Side) {
        let (own, other) = match side {
            Side::Left => (EditOp::LeftIndel, EditOp::RightIndel),
            Side::Right => (EditOp::RightIndel, EditOp::LeftIndel),
        };
        let touches = |op: EditOp| op != other;
        if let Some(at) = self.ops.iter().rposition(|&op| touches(op)) {
            if self.ops[at] == own {
                self.ops.remove(at);
            } else {
                self.ops[at] = other;
            }
            return;
        }
        // Only `other` ops: the symbol is the origin's centre (even origin)
        // or the one added by the first op (empty origin).
        let step = |d: usize, by: usize| match side {
            Side::Left => d + by,
            Side::Right => d - by,
        };
        if self.origin.is_multiple_of(2) {
            self.origin = step(self.origin, 1);
        } else {
            debug_assert!(!self.ops.is_empty());
            self.origin = step(self.origin, 2);
            self.ops.remove(0);
        }
    }
}

fn trace(table: &ReachTable, d: usize, mut e: u32, v: u32, path: &mut Path) {
    let row = |e: u32| table.row(e).expect("all rows retained");
    while e > 0 && row(e - 1)[d] >= v {
        e -= 1;
    }
    if e == 0 {
        path.origin = d;
        path.ops.clear();
        path.ops.extend(core::iter::repeat_n(EditOp::Match, v as usize));
        return;
    }

    let prev = row(e - 1);
    let geometry: Geometry = table.geometry();
    let t_max = geometry.t_max(d) as u32;
    let shift = (d & 1) as u32;

    // (predecessor diagonal, step op, raw candidate), in tie-break order
    let mut candidates: [Option<(usize, EditOp, u32)>; 3] = [None; 3];
    candidates[0] = Some((d, EditOp::Mismatch, prev[d] + 1));
    if d > 0 {
        candidates[1] = Some((d - 1, EditOp::RightIndel, prev[d - 1] + shift));
    }
    if d + 1 < table.diagonal_count() {
        candidates[2] = Some((d + 1, EditOp::LeftIndel, prev[d + 1] + shift));
    }
    let start = candidates
        .iter()
        .flatten()
        .map(|&(_, _, raw)| raw.min(t_max))
        .max()
        .unwrap();
    debug_assert!(start <= v);

    let exact = candidates.iter().flatten().find(|&&(_, _, raw)| raw == start);
    if let Some(&(from, op, _)) = exact {
        trace(table, from, e - 1, prev[from], path);
        path.ops.push(op);
        path.ops
            .extend(core::iter::repeat_n(EditOp::Match, (v - start) as usize));
        return;
    }

    // Only a clamped neighbour reaches `start`, which is then t_max(d) = v.
    let &(from, op, _) = candidates
        .iter()
        .flatten()
        .find(|&&(_, _, raw)| raw.min(t_max) == start)
        .unwrap();
    debug_assert_eq!(start, v);
    trace(table, from, e - 1, prev[from], path);
    match op {
        // the R step would leave the string on the right: drop the left end
        EditOp::RightIndel => path.trim(Side::Left),
        EditOp::LeftIndel => path.trim(Side::Right),
        _ => unreachable!("same-diagonal candidate is never clamped here"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{search, MatchRule, Sequence};

    fn trace_of(s: &str, k: u32, d: usize) -> Alignment {
        let seq = Sequence::bytes("x", s.as_bytes()).unwrap();
        let table = search(&seq, MatchRule::Identity, k, Retention::AllRows);
        traceback(&table, d).unwrap()
    }

    #[test]
    fn worked_tracebacks() {
        let a = trace_of("AABA", 1, 3);
        assert_eq!((a.origin, a.to_cigar().as_str()), (4, "1M1L"));
        assert_eq!(a.replay(4), Some((0, 4)));

        let a = trace_of("ABA", 0, 2);
        assert_eq!((a.origin, a.to_cigar().as_str()), (2, "1M"));

        let a = trace_of("ABCA", 1, 3);
        assert_eq!((a.origin, a.to_cigar().as_str()), (3, "1X1M"));
        assert_eq!(a.cost(), 1);
    }

    #[test]
    fn needs_full_table() {
        let seq = Sequence::bytes("x", &b"ABA"[..]).unwrap();
        let table = search(&seq, MatchRule::Identity, 1, Retention::FinalRow);
        assert_eq!(traceback(&table, 2), Err(Error::RowsNotRetained));
        let table = search(&seq, MatchRule::Identity, 1, Retention::AllRows);
        assert_eq!(
            traceback(&table, 5),
            Err(Error::DiagonalOutOfRange { d: 5, count: 5 })
        );
    }

    #[test]
    fn cigar_round_trip() {
        let a = Alignment::parse(3, "2M1X10L1R").unwrap();
        assert_eq!(a.to_cigar(), "2M1X10L1R");
        assert_eq!(a.cost(), 12);
        assert!(Alignment::parse(0, "M").is_none());
        assert!(Alignment::parse(0, "3").is_none());
        assert!(Alignment::parse(0, "2Q").is_none());
        assert_eq!(Alignment::parse(0, "").unwrap().runs, []);
    }

    #[test]
    fn replay_bounds() {
        assert_eq!(Alignment::parse(3, "2M").unwrap().replay(4), Some((0, 4)));
        assert_eq!(Alignment::parse(3, "3M").unwrap().replay(4), None);
        assert_eq!(Alignment::parse(0, "1R").unwrap().replay(2), Some((0, 2)));
        assert_eq!(Alignment::parse(0, "1L").unwrap().replay(2), None);
    }

    #[test]
    fn trimming() {
        let mut p = Path {
            origin: 4,
            ops: alloc::vec![EditOp::Match, EditOp::LeftIndel, EditOp::RightIndel],
        };
        p.trim(Side::Left);
        assert_eq!(p.ops, [EditOp::Match, EditOp::RightIndel]);

        let mut p = Path {
            origin: 4,
            ops: alloc::vec![EditOp::Mismatch, EditOp::RightIndel],
        };
        p.trim(Side::Left);
        assert_eq!(p.ops, [EditOp::RightIndel, EditOp::RightIndel]);

        // even origin at symbol 2, all right indels: centre goes
        let mut p = Path {
            origin: 4,
            ops: alloc::vec![EditOp::RightIndel],
        };
        p.trim(Side::Left);
        assert_eq!((p.origin, p.ops.len()), (5, 1));

        // empty origin after symbol 1, first R added symbol 2
        let mut p = Path {
            origin: 3,
            ops: alloc::vec![EditOp::RightIndel, EditOp::RightIndel],
        };
        p.trim(Side::Left);
        assert_eq!((p.origin, p.ops.len()), (5, 1));
        assert_eq!(
            Alignment::from_ops(p.origin, &p.ops).replay(6),
            Some((3, 4))
        );
    }
}
