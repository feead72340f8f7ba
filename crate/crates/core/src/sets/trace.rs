//! Uniform families whose membership depends only on the trace on a small
//! support set.
//!
//! A `TraceFamily` on `C([n], k)` is given by a support `R`, a table of
//! allowed traces `T ⊆ R`, and a few explicit extra members contained in `R`.
//! A k-set `F` is a member iff `F ∩ R` is an allowed trace, or `F` is one of
//! the extras. Because elements outside `R` are interchangeable, the
//! intersecting property, the centers and the cover number can all be decided
//! exactly from the trace table without materializing the family.

use serde::Serialize;

use super::cover_number::CoverNumber;
use super::{binomial_u128, ElementSet, SetFamily, Universe};
use crate::error::{invalid, Result};

pub const MAX_SUPPORT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceFamily {
    universe: Universe,
    support: ElementSet,
    /// support elements in increasing order; bit j of a trace index is `positions[j]`
    #[serde(skip)]
    positions: Vec<usize>,
    #[serde(skip)]
    allowed: Vec<bool>,
    /// elements contained in every allowed trace, for quick rejection
    #[serde(skip)]
    required: u128,
    extras: Vec<ElementSet>,
}

impl TraceFamily {
    /// `allow(trace)` decides membership for k-sets with the given trace on
    /// `support`. Extras must be k-subsets of the support.
    pub fn new(
        universe: Universe,
        support: ElementSet,
        allow: impl Fn(&ElementSet) -> bool,
        extras: Vec<ElementSet>,
    ) -> Result<Self> {
        if support.n() != universe.n {
            return Err(invalid("support lives on a different ground set"));
        }
        if support.len() > MAX_SUPPORT {
            return Err(invalid(format!(
                "trace support of size {} exceeds {MAX_SUPPORT}",
                support.len()
            )));
        }
        for e in &extras {
            if e.len() != universe.k || !e.is_subset(&support) {
                return Err(invalid(format!(
                    "extra member {e} must be a {}-subset of the support {support}",
                    universe.k
                )));
            }
        }
        let positions = support.to_vec();
        let r = positions.len();
        let mut allowed = vec![false; 1 << r];
        let mut required = support.bits();
        let outside = universe.n - r;
        for (idx, slot) in allowed.iter_mut().enumerate() {
            let trace = Self::trace_from_index(universe.n, &positions, idx);
            let realizable = trace.len() <= universe.k && universe.k - trace.len() <= outside;
            if realizable && allow(&trace) {
                *slot = true;
                required &= trace.bits();
            }
        }
        if !allowed.iter().any(|&a| a) {
            required = 0;
        }
        let mut extras = extras;
        extras.sort_unstable();
        extras.dedup();
        Ok(Self {
            universe,
            support,
            positions,
            allowed,
            required,
            extras,
        })
    }

    fn trace_from_index(n: usize, positions: &[usize], idx: usize) -> ElementSet {
        let mut bits = 0u128;
        for (j, &p) in positions.iter().enumerate() {
            if idx >> j & 1 == 1 {
                bits |= 1u128 << (p - 1);
            }
        }
        ElementSet::from_bits_unchecked(n, bits)
    }

    #[inline]
    fn index_of(&self, set: &ElementSet) -> usize {
        let bits = set.bits();
        let mut idx = 0usize;
        for (j, &p) in self.positions.iter().enumerate() {
            idx |= ((bits >> (p - 1)) as usize & 1) << j;
        }
        idx
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn support(&self) -> ElementSet {
        self.support
    }

    pub fn extras(&self) -> &[ElementSet] {
        &self.extras
    }

    /// Allowed (and realizable) traces.
    pub fn traces(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.allowed
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| Self::trace_from_index(self.universe.n, &self.positions, i))
    }

    fn outside(&self) -> usize {
        self.universe.n - self.positions.len()
    }

    /// Membership of a k-set.
    #[inline]
    pub fn contains(&self, set: &ElementSet) -> bool {
        if set.len() != self.universe.k {
            return false;
        }
        if set.bits() & self.required == self.required && self.allowed[self.index_of(set)] {
            return true;
        }
        !self.extras.is_empty() && self.extras.binary_search(set).is_ok()
    }

    /// Exact number of members.
    pub fn size(&self) -> u128 {
        let outside = self.outside();
        let k = self.universe.k;
        let from_traces: u128 = self
            .traces()
            .map(|t| binomial_u128(outside, k - t.len()))
            .sum();
        let extra_only = self
            .extras
            .iter()
            .filter(|e| !self.allowed[self.index_of(e)])
            .count() as u128;
        from_traces + extra_only
    }

    /// The lowest-index k-set with trace `t`: `t` plus the smallest outside elements.
    fn fill(&self, t: &ElementSet, skip: &ElementSet) -> ElementSet {
        let need = self.universe.k - t.len();
        let free = self.support.union(skip).complement();
        let mut out = *t;
        for e in free.iter().take(need) {
            out = out.with(e);
        }
        out
    }

    /// A pair of disjoint members, if one exists.
    pub fn disjoint_pair(&self) -> Option<(ElementSet, ElementSet)> {
        let outside = self.outside();
        let k = self.universe.k;
        let traces: Vec<ElementSet> = self.traces().collect();
        for (i, s) in traces.iter().enumerate() {
            for t in &traces[i..] {
                if s.intersects(t) {
                    continue;
                }
                if (k - s.len()) + (k - t.len()) <= outside {
                    let a = self.fill(s, &ElementSet::empty(self.universe.n));
                    let b = self.fill(t, &a);
                    return Some((a, b));
                }
            }
        }
        for e in &self.extras {
            for t in &traces {
                if e.is_disjoint(t) {
                    return Some((*e, self.fill(t, &ElementSet::empty(self.universe.n))));
                }
            }
        }
        for (i, e) in self.extras.iter().enumerate() {
            for f in &self.extras[i + 1..] {
                if e.is_disjoint(f) {
                    return Some((*e, *f));
                }
            }
        }
        None
    }

    pub fn is_intersecting(&self) -> bool {
        self.disjoint_pair().is_none()
    }

    pub fn is_empty(&self) -> bool {
        self.extras.is_empty() && !self.allowed.iter().any(|&a| a)
    }

    /// Elements common to all members.
    pub fn centers(&self) -> Option<ElementSet> {
        if self.is_empty() {
            return None;
        }
        let n = self.universe.n;
        let k = self.universe.k;
        let outside = self.outside();
        let mut common = ElementSet::full(n);
        for t in self.traces() {
            common = common.intersection(&t);
            // a member with this trace can avoid any single outside element
            // unless it needs every outside element
            if k - t.len() < outside {
                common = common.intersection(&self.support);
            }
        }
        for e in &self.extras {
            common = common.intersection(e);
        }
        Some(common)
    }

    /// Exact cover number with the lexicographically smallest witness.
    pub fn cover_number(&self) -> CoverNumber {
        let n = self.universe.n;
        let k = self.universe.k;
        let outside = self.outside();
        if self.is_empty() {
            return CoverNumber {
                tau: 0,
                witness: ElementSet::empty(n),
            };
        }
        let traces: Vec<ElementSet> = self.traces().collect();
        let outside_elems: Vec<usize> = self.support.complement().to_vec();
        let r = self.positions.len();
        // minimum number of outside elements needed once `inner` is chosen
        let needed_outside = |inner: &ElementSet| -> Option<usize> {
            if self.extras.iter().any(|e| e.is_disjoint(inner)) {
                return None;
            }
            let mut need = 0usize;
            for t in &traces {
                if t.is_disjoint(inner) {
                    let free = k - t.len();
                    if free == 0 {
                        return None;
                    }
                    need = need.max(outside - free + 1);
                }
            }
            Some(need)
        };
        let mut tau = usize::MAX;
        let mut options: Vec<(ElementSet, usize)> = Vec::new();
        for idx in 0..1usize << r {
            let inner = Self::trace_from_index(n, &self.positions, idx);
            if let Some(need) = needed_outside(&inner) {
                let size = inner.len() + need;
                if size < tau {
                    tau = size;
                }
                options.push((inner, need));
            }
        }
        // every option with |inner| + c = tau for some c >= need is a minimum cover
        let witness = options
            .iter()
            .filter(|(inner, need)| inner.len() <= tau && tau - inner.len() >= *need)
            .filter(|(inner, _)| tau - inner.len() <= outside)
            .map(|(inner, _)| {
                let mut w = *inner;
                for &e in outside_elems.iter().take(tau - inner.len()) {
                    w = w.with(e);
                }
                w
            })
            .min_by(|a, b| a.lex_cmp(b))
            .expect("support ∪ outside is always a cover");
        CoverNumber { tau, witness }
    }

    /// Lists every member. Only sensible for small instances.
    pub fn materialize(&self) -> SetFamily {
        SetFamily::filter_ksets(self.universe, |s| self.contains(s))
    }
}
