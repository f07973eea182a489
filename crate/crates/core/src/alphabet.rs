//! Sequences and the symbol relations palindromes are measured against.

use alloc::string::String;
use alloc::vec::Vec;

use crate::Error;

/// Extension distances are stored as `u32`, so sequences stay below 2^31.
pub const MAX_LEN: usize = (1 << 31) - 1;

/// How a palindrome's two arms are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MatchRule {
    /// `a` pairs with `b` iff they are the same byte.
    Identity,
    /// Watson-Crick pairing: A with T, C with G. `N` and anything else pairs
    /// with nothing, not even another `N`.
    #[default]
    DnaComplement,
}

impl MatchRule {
    #[inline]
    pub fn matches(self, a: u8, b: u8) -> bool {
        match self {
            MatchRule::Identity => Identity::pairs(a, b),
            MatchRule::DnaComplement => Complement::pairs(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MatchRule::Identity => "id",
            MatchRule::DnaComplement => "dna",
        }
    }
}

/// Complement of a normalized DNA base; anything outside ACGT maps to `N`.
#[inline]
pub fn complement(base: u8) -> u8 {
    match base {
        b'A' => b'T',
        b'T' => b'A',
        b'C' => b'G',
        b'G' => b'C',
        _ => b'N',
    }
}

pub fn reverse_complement(bases: &[u8]) -> Vec<u8> {
    bases.iter().rev().map(|&b| complement(b)).collect()
}

/// Fold to uppercase and map every byte outside ACGT to `N`.
#[inline]
pub fn normalize_base(byte: u8) -> u8 {
    match byte.to_ascii_uppercase() {
        b @ (b'A' | b'C' | b'G' | b'T') => b,
        _ => b'N',
    }
}

/// Pair relation resolved at compile time so the extension loops monomorphize.
pub(crate) trait PairRelation {
    fn pairs(a: u8, b: u8) -> bool;
}

pub(crate) struct Identity;

impl PairRelation for Identity {
    #[inline(always)]
    fn pairs(a: u8, b: u8) -> bool {
        a == b
    }
}

pub(crate) struct Complement;

// Partner of each ACGT byte; 0x100 (never equal to a byte) for everything else.
const PARTNER: [u16; 256] = {
    let mut table = [0x100u16; 256];
    table[b'A' as usize] = b'T' as u16;
    table[b'T' as usize] = b'A' as u16;
    table[b'C' as usize] = b'G' as u16;
    table[b'G' as usize] = b'C' as u16;
    table
};

impl PairRelation for Complement {
    #[inline(always)]
    fn pairs(a: u8, b: u8) -> bool {
        PARTNER[a as usize] == b as u16
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Arbitrary bytes, stored as given.
    Bytes,
    /// Normalized DNA over `{A, C, G, T, N}`.
    Dna,
}

/// A named, immutable symbol string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    id: String,
    residues: Vec<u8>,
    kind: SequenceKind,
}

impl Sequence {
    /// Any bytes, no normalization.
    pub fn bytes(id: impl Into<String>, residues: impl Into<Vec<u8>>) -> Result<Self, Error> {
        let residues = residues.into();
        check_len(residues.len())?;
        Ok(Sequence {
            id: id.into(),
            residues,
            kind: SequenceKind::Bytes,
        })
    }

    /// DNA: lowercase is folded and any byte outside ACGT becomes `N`.
    pub fn dna(id: impl Into<String>, raw: impl AsRef<[u8]>) -> Result<Self, Error> {
        let raw = raw.as_ref();
        check_len(raw.len())?;
        Ok(Sequence {
            id: id.into(),
            residues: raw.iter().map(|&b| normalize_base(b)).collect(),
            kind: SequenceKind::Dna,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn residues(&self) -> &[u8] {
        &self.residues
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn reversed(&self) -> Sequence {
        Sequence {
            id: self.id.clone(),
            residues: self.residues.iter().rev().copied().collect(),
            kind: self.kind,
        }
    }

    /// Reverse complement; non-ACGT bytes become `N`.
    pub fn reverse_complement(&self) -> Sequence {
        Sequence {
            id: self.id.clone(),
            residues: reverse_complement(&self.residues),
            kind: SequenceKind::Dna,
        }
    }
}

fn check_len(len: usize) -> Result<(), Error> {
    if len > MAX_LEN {
        Err(Error::SequenceTooLong(len))
    } else {
        Ok(())
    }
}
