//! Ground-set element subsets as 64-bit masks.
//!
//! Elements are indexed 0..n-1 internally; the conventional 1-based labels
//! appear only when formatting or parsing. `{1,2,5}` therefore denotes the
//! set with internal indices 0, 1 and 4.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

/// A subset of a ground set with at most 64 elements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    /// The full ground set `{1,...,n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64, "ground set larger than 64 elements");
        if n == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Single element by 0-based index.
    pub fn singleton(index: usize) -> Self {
        assert!(index < 64);
        ElementSet(1u64 << index)
    }

    /// Build from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < 64);
            bits |= 1u64 << i;
        }
        ElementSet(bits)
    }

    /// Build from the 1-based labels used in textual formats.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_indices(labels.into_iter().map(|l| {
            assert!(l >= 1, "element labels are 1-based");
            l - 1
        }))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, index: usize) -> bool {
        index < 64 && (self.0 >> index) & 1 == 1
    }

    pub fn with(self, index: usize) -> Self {
        assert!(index < 64);
        ElementSet(self.0 | (1u64 << index))
    }

    pub fn without(self, index: usize) -> Self {
        assert!(index < 64);
        ElementSet(self.0 & !(1u64 << index))
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub const fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    pub const fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// 0-based indices in ascending order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// Smallest 0-based index, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// 1-based labels in ascending order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

/// Iterator over 0-based indices.
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Indices;

    fn into_iter(self) -> Indices {
        self.iter()
    }
}

impl BitOr for ElementSet {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for ElementSet {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitXor for ElementSet {
    type Output = Self;
    fn bitxor(self, rhs: Self) -> Self {
        self.symmetric_difference(rhs)
    }
}

// Lexicographic order on the ascending label sequences, with a proper
// prefix sorting before its extensions: {1,2} < {1,2,3} < {1,3} < {2}.
// This is the order used for all deterministic enumeration output.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let i = a.trailing_zeros();
            let j = b.trailing_zeros();
            match i.cmp(&j) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
