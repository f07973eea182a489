//! Diagonal/cell coordinates.
//!
//! Diagonal `d` has its origin at symbol `d/2` when `d` is even (odd-length
//! palindromes) and in the gap after symbol `(d-1)/2` when `d` is odd
//! (even-length palindromes). A cell `(d, t)` is the span `L..=R` reached after
//! `t` pair steps outward, with `L + R = d`. Origins outside the string (before
//! symbol 0 and after symbol `n-1`) are not diagonals.

/// Inclusive bounds `(L, R)` of cell `(d, t)`. For odd `d` and `t = 0` the span
/// is empty and `L = R + 1`.
#[inline]
pub fn cell_of(d: usize, t: usize) -> (usize, usize) {
    debug_assert!(t <= d.div_ceil(2), "cell ({d}, {t}) runs off the left end");
    (d.div_ceil(2) - t, d / 2 + t)
}

/// Number of symbols covered by cell `(d, t)`.
#[inline]
pub fn length_of(d: usize, t: usize) -> usize {
    2 * t + usize::from(d.is_multiple_of(2))
}

/// Bounds for one string length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Geometry {
    n: usize,
}

impl Geometry {
    pub fn new(n: usize) -> Self {
        Geometry { n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `2n - 1`, or zero for the empty string.
    #[inline]
    pub fn diagonal_count(&self) -> usize {
        (2 * self.n).saturating_sub(1)
    }

    /// Largest `t` whose cell still lies inside `0..n`.
    #[inline]
    pub fn t_max(&self, d: usize) -> usize {
        debug_assert!(d < self.diagonal_count(), "diagonal {d} out of range");
        d.div_ceil(2).min(self.n - 1 - d / 2)
    }

    #[inline]
    pub fn cell_of(&self, d: usize, t: usize) -> (usize, usize) {
        debug_assert!(t <= self.t_max(d), "cell ({d}, {t}) outside n={}", self.n);
        cell_of(d, t)
    }

    /// Half-open span `start..end` of cell `(d, t)`.
    #[inline]
    pub fn span(&self, d: usize, t: usize) -> (usize, usize) {
        let (left, right) = self.cell_of(d, t);
        (left, right + 1)
    }
}
