use std::sync::OnceLock;

use super::{ElementSet, Universe, MAX_ELEMENTS};

fn pascal() -> &'static [[u128; MAX_ELEMENTS + 1]] {
    static TABLE: OnceLock<Vec<[u128; MAX_ELEMENTS + 1]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![[0u128; MAX_ELEMENTS + 1]; MAX_ELEMENTS + 1];
        for n in 0..=MAX_ELEMENTS {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// `C(n, k)` for `n <= 128`; every such value fits in a `u128`.
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    assert!(n <= MAX_ELEMENTS, "binomial table covers n <= {MAX_ELEMENTS}");
    pascal()[n][k]
}

/// Rank of `set` among the `|set|`-subsets in colexicographic order.
pub fn colex_rank(set: &ElementSet) -> u128 {
    set.iter()
        .enumerate()
        .map(|(i, e)| binomial_u128(e - 1, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`].
pub fn colex_unrank(u: Universe, mut rank: u128) -> Option<ElementSet> {
    if rank >= u.num_ksets() {
        return None;
    }
    let mut bits = 0u128;
    let mut hi = u.n;
    for i in (1..=u.k).rev() {
        // largest c < hi with C(c, i) <= rank
        let mut c = hi - 1;
        while binomial_u128(c, i) > rank {
            c -= 1;
        }
        bits |= 1u128 << c;
        rank -= binomial_u128(c, i);
        hi = c;
    }
    Some(ElementSet::from_bits_unchecked(u.n, bits))
}

#[inline]
fn next_colex(x: u128) -> u128 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    (((r ^ x) >> 2) >> c.trailing_zeros()) | r
}

/// Iterator over the k-subsets of `[n]` with colex ranks in `[start, end)`.
#[derive(Clone, Debug)]
pub struct KSets {
    n: usize,
    current: u128,
    remaining: u128,
}

impl KSets {
    pub fn new(u: Universe) -> Self {
        Self::range(u, 0, u.num_ksets())
    }

    pub fn range(u: Universe, start: u128, end: u128) -> Self {
        let end = end.min(u.num_ksets());
        match colex_unrank(u, start) {
            Some(first) if start < end => Self {
                n: u.n,
                current: first.bits(),
                remaining: end - start,
            },
            _ => Self {
                n: u.n,
                current: 0,
                remaining: 0,
            },
        }
    }
}

impl Iterator for KSets {
    type Item = ElementSet;

    #[inline]
    fn next(&mut self) -> Option<ElementSet> {
        if self.remaining == 0 {
            return None;
        }
        let out = ElementSet::from_bits_unchecked(self.n, self.current);
        self.remaining -= 1;
        if self.remaining > 0 {
            self.current = next_colex(self.current);
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Visits every k-subset of `[n]` once in colex order and returns the count.
/// `k > n` yields an empty enumeration.
pub fn enumerate_ksets<F: FnMut(&ElementSet)>(u: Universe, mut visitor: F) -> u128 {
    let mut count = 0;
    for s in KSets::new(u) {
        visitor(&s);
        count += 1;
    }
    count
}

pub fn enumerate_ksets_range<F: FnMut(&ElementSet)>(
    u: Universe,
    start: u128,
    end: u128,
    mut visitor: F,
) -> u128 {
    let mut count = 0;
    for s in KSets::range(u, start, end) {
        visitor(&s);
        count += 1;
    }
    count
}

/// Splits `[0, C(n,k))` into at most `chunks` contiguous rank ranges.
pub fn rank_chunks(u: Universe, chunks: usize) -> Vec<(u128, u128)> {
    let total = u.num_ksets();
    let chunks = (chunks.max(1) as u128).min(total.max(1));
    let step = total.div_ceil(chunks);
    (0..chunks)
        .map(|i| (i * step, ((i + 1) * step).min(total)))
        .filter(|(a, b)| a < b)
        .collect()
}
