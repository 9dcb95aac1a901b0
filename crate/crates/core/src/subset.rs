//! Universes and subsets encoded as single-word bit masks.

use std::fmt;

use crate::error::{CountError, Result};

/// Maximum number of elements a universe may hold.
pub const MAX_UNIVERSE: usize = 64;

/// A finite universe `{0, 1, ..., n-1}` with `n <= 64`.
///
/// A zero-element universe is allowed; it shows up when a single vertex is
/// removed from a one-vertex graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe(usize);

impl Universe {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(CountError::UniverseTooLarge(n));
        }
        Ok(Universe(n))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The mask holding every element.
    #[inline]
    pub fn full(self) -> SubsetMask {
        SubsetMask(low_bits(self.0))
    }

    pub fn check(self, s: SubsetMask) -> Result<()> {
        if s.0 & !low_bits(self.0) != 0 {
            let element = 63 - s.0.leading_zeros() as usize;
            return Err(CountError::ElementOutOfRange { element, n: self.0 });
        }
        Ok(())
    }

    /// The universe obtained by deleting one element.
    pub fn without_one(self) -> Universe {
        Universe(self.0.saturating_sub(1))
    }
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of a universe; element `i` corresponds to bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1u64 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        SubsetMask(elements.into_iter().fold(0, |m, e| m | (1u64 << e)))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | (1u64 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Drops element `v` and shifts every larger element down by one, mapping
    /// subsets of `U \ {v}` onto subsets of a universe one element smaller.
    #[inline]
    pub fn compress(self, v: usize) -> Self {
        let low = low_bits(v);
        SubsetMask((self.0 & low) | ((self.0 >> v >> 1) << v))
    }

    /// Inverse of [`SubsetMask::compress`]; the result never contains `v`.
    #[inline]
    pub fn decompress(self, v: usize) -> Self {
        let low = low_bits(v);
        SubsetMask((self.0 & low) | ((self.0 & !low) << 1))
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration in increasing numeric order.
#[derive(Clone)]
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(SubsetMask(cur))
    }
}

/// Iterates the `r`-element subsets of an `n`-element universe in
/// increasing numeric order, which for fixed cardinality is colex order.
#[derive(Clone)]
pub struct FixedSizeSubsets {
    next: Option<u64>,
    limit: u128,
}

impl FixedSizeSubsets {
    pub fn new(n: usize, r: usize) -> Self {
        if r > n {
            return FixedSizeSubsets { next: None, limit: 0 };
        }
        FixedSizeSubsets {
            next: Some(low_bits(r)),
            limit: 1u128 << n,
        }
    }
}

impl Iterator for FixedSizeSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack, widened so the top word does not overflow.
            let c = cur as u128;
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let succ = (((ripple ^ c) >> 2) / low) | ripple;
            if succ < self.limit {
                Some(succ as u64)
            } else {
                None
            }
        };
        Some(SubsetMask(cur))
    }
}
