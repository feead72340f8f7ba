//! Cover number `τ` by branch and bound.

use serde::Serialize;

use super::{mask_below, ElementSet, SetFamily};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverNumber {
    pub tau: usize,
    /// Lexicographically smallest cover of size `tau`.
    pub witness: ElementSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverOutcome {
    Exact(CoverNumber),
    ExceedsCap { cap: usize },
    /// The family contains the empty set, which no set meets.
    Uncoverable,
}

impl CoverOutcome {
    pub fn exact(self) -> Option<CoverNumber> {
        match self {
            CoverOutcome::Exact(c) => Some(c),
            _ => None,
        }
    }

    pub fn tau(self) -> Option<usize> {
        self.exact().map(|c| c.tau)
    }
}

/// Size of a greedy packing of pairwise disjoint sets: a lower bound on the
/// number of elements any cover needs.
fn packing_bound(sets: &[u128]) -> usize {
    let mut used = 0u128;
    let mut count = 0;
    for &s in sets {
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

fn greedy_cover_size(sets: &[u128]) -> usize {
    let mut left: Vec<u128> = sets.to_vec();
    let mut size = 0;
    while !left.is_empty() {
        let mut freq = [0u32; 128];
        for &s in &left {
            let mut b = s;
            while b != 0 {
                freq[b.trailing_zeros() as usize] += 1;
                b &= b - 1;
            }
        }
        let best = (0..128).max_by_key(|&i| (freq[i], std::cmp::Reverse(i))).unwrap();
        left.retain(|s| s >> best & 1 == 0);
        size += 1;
    }
    size
}

fn branch(uncovered: &[u128], depth: usize, best: &mut usize) {
    if uncovered.is_empty() {
        *best = depth;
        return;
    }
    if depth + packing_bound(uncovered) >= *best {
        return;
    }
    // branch on the smallest uncovered member
    let pivot = *uncovered.iter().min_by_key(|s| s.count_ones()).unwrap();
    let mut b = pivot;
    while b != 0 {
        let bit = b & b.wrapping_neg();
        b &= b - 1;
        let rest: Vec<u128> = uncovered.iter().copied().filter(|s| s & bit == 0).collect();
        branch(&rest, depth + 1, best);
        if depth + 1 >= *best {
            // cannot improve on a cover found one level down
            return;
        }
    }
}

fn lex_search(uncovered: &[u128], chosen: u128, last: usize, remaining: usize) -> Option<u128> {
    if uncovered.is_empty() {
        return Some(chosen);
    }
    if remaining == 0 {
        return None;
    }
    let above = !mask_below(last);
    let restricted: Vec<u128> = uncovered.iter().map(|s| s & above).collect();
    if restricted.contains(&0) {
        return None;
    }
    if packing_bound(&restricted) > remaining {
        return None;
    }
    // the next pick cannot exceed the largest element of any uncovered member
    let limit = restricted
        .iter()
        .map(|s| 127 - s.leading_zeros() as usize)
        .min()
        .unwrap();
    let useful = restricted.iter().fold(0u128, |acc, s| acc | s);
    for pos in last..=limit {
        if useful >> pos & 1 == 0 {
            continue;
        }
        let bit = 1u128 << pos;
        let rest: Vec<u128> = uncovered.iter().copied().filter(|s| s & bit == 0).collect();
        if let Some(found) = lex_search(&rest, chosen | bit, pos + 1, remaining - 1) {
            return Some(found);
        }
    }
    None
}

/// Minimum cover size with the lexicographically smallest witness.
///
/// `cap` defaults to `k` for uniform families (any member is a cover).
pub fn cover_number(family: &SetFamily, cap: Option<usize>) -> CoverOutcome {
    let n = family.n();
    if family.is_empty() {
        return CoverOutcome::Exact(CoverNumber {
            tau: 0,
            witness: ElementSet::empty(n),
        });
    }
    let sets: Vec<u128> = family.iter().map(|m| m.bits()).collect();
    if sets.contains(&0) {
        return CoverOutcome::Uncoverable;
    }
    let cap = cap.or(family.uniform());
    let upper = greedy_cover_size(&sets);
    let mut best = match cap {
        Some(c) if c < upper => c + 1,
        _ => upper,
    };
    let start = best;
    branch(&sets, 0, &mut best);
    let tau = if best < start { best } else { start };
    if let Some(c) = cap {
        if tau > c {
            return CoverOutcome::ExceedsCap { cap: c };
        }
    }
    let witness = lex_search(&sets, 0, 0, tau).expect("a cover of size tau exists");
    CoverOutcome::Exact(CoverNumber {
        tau,
        witness: ElementSet::from_bits_unchecked(n, witness),
    })
}
