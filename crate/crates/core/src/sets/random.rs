//! Seeded random families for property suites and examples.

use rand::seq::index::sample;
use rand::Rng;

use super::{ElementSet, SetFamily, Universe};

/// Uniformly random k-subset of `[n]`.
pub fn random_kset<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> ElementSet {
    let mut bits = 0u128;
    for i in sample(rng, n, k).iter() {
        bits |= 1u128 << i;
    }
    ElementSet::from_bits_unchecked(n, bits)
}

/// Greedy random intersecting family: draws `attempts` random k-sets and
/// keeps each one that meets every set kept so far.
pub fn random_intersecting_family<R: Rng + ?Sized>(
    rng: &mut R,
    u: Universe,
    attempts: usize,
) -> SetFamily {
    let mut kept: Vec<ElementSet> = Vec::new();
    for _ in 0..attempts {
        let s = random_kset(rng, u.n, u.k);
        if kept.iter().all(|m| m.intersects(&s)) {
            kept.push(s);
        }
    }
    SetFamily::new(u, kept).expect("sets live on u")
}

/// Random intersecting family with `τ >= 2`; seeds the family with two sets
/// sharing exactly one element and a third set avoiding that element.
/// Returns `None` when the parameters leave no room for such a start.
pub fn random_nontrivial_intersecting_family<R: Rng + ?Sized>(
    rng: &mut R,
    u: Universe,
    attempts: usize,
) -> Option<SetFamily> {
    for _ in 0..64 {
        let a = random_kset(rng, u.n, u.k);
        let b = random_kset(rng, u.n, u.k);
        let c = random_kset(rng, u.n, u.k);
        if !(a.intersects(&b) && a.intersects(&c) && b.intersects(&c)) {
            continue;
        }
        if !a.intersection(&b).intersection(&c).is_empty() {
            continue;
        }
        let mut kept = vec![a, b, c];
        for _ in 0..attempts {
            let s = random_kset(rng, u.n, u.k);
            if kept.iter().all(|m| m.intersects(&s)) {
                kept.push(s);
            }
        }
        return Some(SetFamily::new(u, kept).expect("sets live on u"));
    }
    None
}
