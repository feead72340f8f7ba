//! Ground-set and family primitives.
//!
//! Elements are 1-indexed; bit `i - 1` of an [`ElementSet`] stores element `i`.
//! Sets over at most [`MAX_ELEMENTS`] elements are supported, which covers
//! every instance this crate builds (the largest construction uses n = 98).

mod cover;
mod cover_number;
mod enumerate;
mod family;
pub mod random;
mod trace;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use cover::{Color, LabeledCover};
pub use cover_number::{cover_number, CoverNumber, CoverOutcome};
pub use enumerate::{
    binomial_u128, colex_rank, colex_unrank, enumerate_ksets, enumerate_ksets_range, rank_chunks,
    KSets,
};
pub use family::SetFamily;
pub use trace::TraceFamily;

pub const MAX_ELEMENTS: usize = 128;

/// Ground set `[n]` together with the uniformity `k` of the families living on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Universe {
    pub n: usize,
    pub k: usize,
}

impl Universe {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Self { n, k })
    }

    /// `n - 2k + 2`, the chromatic number of the Kneser graph when `n >= 2k`.
    pub fn kneser_colors(&self) -> i64 {
        self.n as i64 - 2 * self.k as i64 + 2
    }

    pub fn is_kneser(&self) -> bool {
        self.n >= 2 * self.k
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn num_ksets(&self) -> u128 {
        binomial_u128(self.n, self.k)
    }
}

/// A subset of `[n]` stored as a bit mask with cached cardinality.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: u128,
    n: u8,
    len: u8,
}

#[inline]
pub(crate) fn mask_below(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set too large: {n}");
        Self {
            bits: 0,
            n: n as u8,
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        Self::from_bits_unchecked(n, mask_below(n))
    }

    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(n));
        }
        if bits & !mask_below(n) != 0 {
            let element = 128 - (bits & !mask_below(n)).leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(Self::from_bits_unchecked(n, bits))
    }

    #[inline]
    pub(crate) fn from_bits_unchecked(n: usize, bits: u128) -> Self {
        debug_assert!(bits & !mask_below(n) == 0);
        Self {
            bits,
            n: n as u8,
            len: bits.count_ones() as u8,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut bits = 0u128;
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1u128 << (e - 1);
        }
        Ok(Self::from_bits_unchecked(n, bits))
    }

    /// Contiguous range `[lo, hi]` (inclusive, 1-indexed).
    pub fn interval(n: usize, lo: usize, hi: usize) -> Result<Self> {
        Self::from_elements(n, lo..=hi)
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element >= 1 && element <= self.n() && self.bits >> (element - 1) & 1 == 1
    }

    pub fn with(&self, element: usize) -> Self {
        assert!(element >= 1 && element <= self.n(), "element {element} out of range");
        Self::from_bits_unchecked(self.n(), self.bits | 1u128 << (element - 1))
    }

    pub fn without(&self, element: usize) -> Self {
        if element == 0 || element > self.n() {
            return *self;
        }
        Self::from_bits_unchecked(self.n(), self.bits & !(1u128 << (element - 1)))
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.n().max(other.n()), self.bits | other.bits)
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.n(), self.bits & other.bits)
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        Self::from_bits_unchecked(self.n(), self.bits & !other.bits)
    }

    pub fn complement(&self) -> Self {
        Self::from_bits_unchecked(self.n(), !self.bits & mask_below(self.n()))
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn min_element(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn max_element(&self) -> Option<usize> {
        (self.bits != 0).then(|| 128 - self.bits.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the increasing element sequences.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Colexicographic comparison; coincides with comparing the bit masks.
    pub fn colex_cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }

    /// Same members, viewed inside a ground set of a different size.
    pub fn rebase(&self, n: usize) -> Result<Self> {
        Self::from_bits(n, self.bits)
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Colexicographic order.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits).then(self.n.cmp(&other.n))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Deserializes from an element list; the ground set is taken as the largest
/// element, so callers that know `n` should `rebase`.
impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        let n = elements.iter().copied().max().unwrap_or(0);
        ElementSet::from_elements(n, elements).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug)]
pub struct Elements {
    bits: u128,
}

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}
