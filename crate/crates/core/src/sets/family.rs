use std::cmp::Ordering;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::cover_number::{cover_number, CoverOutcome};
use super::{ElementSet, Universe};
use crate::error::{Error, Result};

/// An ordered, duplicate-free collection of subsets of `[n]`.
///
/// Members are kept in colex order. `uniform` is `Some(c)` when every member
/// has cardinality `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<ElementSet>,
    uniform: Option<usize>,
}

const PARALLEL_PAIRS: usize = 1 << 22;

impl SetFamily {
    /// Builds a family on `universe`; members are sorted and deduplicated.
    /// The family is uniform when all members have `universe.k` elements.
    pub fn new(universe: Universe, members: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let mut members: Vec<ElementSet> = members.into_iter().collect();
        for m in &members {
            if m.n() != universe.n {
                return Err(Error::IncompatibleUniverses {
                    left: universe.n,
                    right: m.n(),
                });
            }
        }
        members.sort_unstable();
        members.dedup();
        let uniform = members
            .iter()
            .all(|m| m.len() == universe.k)
            .then_some(universe.k);
        Ok(Self {
            universe,
            members,
            uniform,
        })
    }

    /// Infers the uniformity from the members (the largest cardinality for
    /// mixed families, 0 for an empty one).
    pub fn from_sets(n: usize, members: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        let members: Vec<ElementSet> = members.into_iter().collect();
        let k = members.iter().map(|m| m.len()).max().unwrap_or(0);
        Self::new(Universe::new(n, k)?, members)
    }

    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| ElementSet::from_elements(n, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sets(n, sets)
    }

    /// Every k-subset of `[n]`.
    pub fn complete(universe: Universe) -> Self {
        Self {
            universe,
            members: super::KSets::new(universe).collect(),
            uniform: Some(universe.k),
        }
    }

    /// `{F in C([n],k) : pred(F)}`, evaluated exhaustively.
    pub fn filter_ksets(universe: Universe, pred: impl Fn(&ElementSet) -> bool) -> Self {
        Self {
            universe,
            members: super::KSets::new(universe).filter(|s| pred(s)).collect(),
            uniform: Some(universe.k),
        }
    }

    pub(crate) fn from_sorted_unchecked(universe: Universe, members: Vec<ElementSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let uniform = members
            .iter()
            .all(|m| m.len() == universe.k)
            .then_some(universe.k);
        Self {
            universe,
            members,
            uniform,
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.n
    }

    pub fn uniform(&self) -> Option<usize> {
        self.uniform
    }

    pub fn members(&self) -> &[ElementSet] {
        &self.members
    }

    pub fn into_members(self) -> Vec<ElementSet> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElementSet> {
        self.members.iter()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    /// Union of all members.
    pub fn support(&self) -> ElementSet {
        self.members
            .iter()
            .fold(ElementSet::empty(self.n()), |acc, m| acc.union(m))
    }

    /// Smallest member in lexicographic order satisfying `pred`.
    pub fn lex_first_where(&self, pred: impl Fn(&ElementSet) -> bool) -> Option<ElementSet> {
        self.members
            .iter()
            .filter(|m| pred(m))
            .min_by(|a, b| a.lex_cmp(b))
            .copied()
    }

    /// First disjoint pair `(earlier, later)` in member order, if any.
    pub fn disjoint_pair(&self) -> Option<(ElementSet, ElementSet)> {
        let ms = &self.members;
        let scan = |i: usize| -> Option<(ElementSet, ElementSet)> {
            let a = ms[i].bits();
            ms[i + 1..]
                .iter()
                .find(|b| a & b.bits() == 0)
                .map(|b| (ms[i], *b))
        };
        if ms.len() * ms.len() / 2 > PARALLEL_PAIRS {
            (0..ms.len()).into_par_iter().find_map_first(scan)
        } else {
            (0..ms.len()).find_map(scan)
        }
    }

    /// True iff every two members share an element. Empty and singleton
    /// families are intersecting.
    pub fn is_intersecting(&self) -> bool {
        // a member that is the empty set is disjoint from everything
        if self.members.len() >= 2 && self.members[0].is_empty() {
            return false;
        }
        self.disjoint_pair().is_none()
    }

    pub fn cross_disjoint_pair(&self, other: &SetFamily) -> Result<Option<(ElementSet, ElementSet)>> {
        if self.n() != other.n() {
            return Err(Error::IncompatibleUniverses {
                left: self.n(),
                right: other.n(),
            });
        }
        let bs = &other.members;
        let scan = |a: &ElementSet| bs.iter().find(|b| a.is_disjoint(b)).map(|b| (*a, *b));
        Ok(if self.len() * other.len() > PARALLEL_PAIRS {
            self.members.par_iter().find_map_first(scan)
        } else {
            self.members.iter().find_map(scan)
        })
    }

    /// True iff every member of `self` meets every member of `other`.
    pub fn is_cross_intersecting(&self, other: &SetFamily) -> Result<bool> {
        Ok(self.cross_disjoint_pair(other)?.is_none())
    }

    /// Intersection of all members; the family is a star iff this is non-empty.
    pub fn centers(&self) -> Result<ElementSet> {
        let first = self.members.first().ok_or(Error::NoMembers)?;
        Ok(self.members[1..]
            .iter()
            .fold(*first, |acc, m| acc.intersection(m)))
    }

    pub fn is_trivial(&self) -> Result<bool> {
        Ok(!self.centers()?.is_empty())
    }

    /// `τ(F)` with the lexicographically smallest minimum cover.
    pub fn cover_number(&self, cap: Option<usize>) -> CoverOutcome {
        cover_number(self, cap)
    }

    /// `W(A, B) = {F \ A : F ∈ W, F ∩ B = A}`.
    pub fn restrict(&self, a: &ElementSet, b: &ElementSet) -> Result<SetFamily> {
        if !a.is_subset(b) {
            return Err(Error::NotSubset { a: *a, b: *b });
        }
        let members: Vec<ElementSet> = self
            .members
            .iter()
            .filter(|f| f.intersection(b) == *a)
            .map(|f| f.difference(a))
            .collect();
        let universe = Universe {
            n: self.n(),
            k: self.universe.k.saturating_sub(a.len()),
        };
        // removing a common subset keeps colex order and distinctness
        Ok(if self.uniform.is_some() {
            Self::from_sorted_unchecked(universe, members)
        } else {
            Self::new(universe, members)?
        })
    }

    /// `{G \ {x} : x ∈ G ∈ F}`.
    pub fn link(&self, x: usize) -> Result<SetFamily> {
        if x == 0 || x > self.n() {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n(),
            });
        }
        let a = ElementSet::from_elements(self.n(), [x])?;
        self.restrict(&a, &a)
    }

    /// Members containing `x`.
    pub fn star_part(&self, x: usize) -> SetFamily {
        let members = self.members.iter().filter(|m| m.contains(x)).copied().collect();
        Self::from_sorted_unchecked(self.universe, members)
    }

    /// Members not in `other`.
    pub fn minus(&self, other: &SetFamily) -> SetFamily {
        let members = self
            .members
            .iter()
            .filter(|m| !other.contains(m))
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.universe, members)
    }

    /// Lexicographic comparison of member lists, for deterministic output order.
    pub fn cmp_members(&self, other: &SetFamily) -> Ordering {
        self.members.cmp(&other.members)
    }
}

/// Serialized as `{n, k, members}` with members as element lists.
impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SetFamily", 3)?;
        st.serialize_field("n", &self.universe.n)?;
        st.serialize_field("k", &self.universe.k)?;
        st.serialize_field("members", &self.members)?;
        st.end()
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a ElementSet;
    type IntoIter = std::slice::Iter<'a, ElementSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
