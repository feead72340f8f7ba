//! The block construction of a covering of `C([n], k)`, `n = 2(k-1)^2`, by
//! `n - 2k + 2` non-trivial intersecting families, and a verifier for
//! arbitrary covers.
//!
//! The ground set splits into `k - 1` blocks of `2k - 2` consecutive
//! elements. In local coordinates a block carries the arc sets
//! `F_i = {2k-4, 2k-3, 2k-2} ∪ {i+1, ..., i+k-3}` (arc taken modulo `2k - 5`)
//! for `i = 1..=2k-5`, the Hilton–Milner-type colors
//! `H_i = {F : i ∈ F, F ∩ F_i ≠ ∅} ∪ {F_i}` and the color
//! `G = {F : |F ∩ {2k-4, 2k-3, 2k-2}| >= 2}`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::report::ser_opt_u128;
use crate::sets::random::random_kset;
use crate::sets::{
    rank_chunks, Color, CoverOutcome, ElementSet, KSets, LabeledCover, SetFamily, TraceFamily,
    Universe,
};

pub const PROVENANCE: &str = "block-construction";

/// Largest `C(n, k)` checked exhaustively by default.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 20_000_000;

pub const DEFAULT_SAMPLE: u64 = 1_000_000;

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(invalid("construction defined for k >= 3"));
    }
    Ok(())
}

/// Split of `[2(k-1)^2]` into `k - 1` consecutive blocks of size `2k - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockLayout {
    pub k: usize,
    pub n: usize,
    pub blocks: Vec<ElementSet>,
}

impl BlockLayout {
    pub fn new(k: usize) -> Result<Self> {
        check_k(k)?;
        let n = 2 * (k - 1) * (k - 1);
        Universe::new(n, k)?;
        let size = 2 * k - 2;
        let blocks = (0..k - 1)
            .map(|b| ElementSet::interval(n, b * size + 1, (b + 1) * size))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { k, n, blocks })
    }

    pub fn universe(&self) -> Universe {
        Universe { n: self.n, k: self.k }
    }

    /// Offset of block `b` (0-based): its elements are `offset + 1 ..= offset + 2k - 2`.
    pub fn offset(&self, b: usize) -> usize {
        b * (2 * self.k - 2)
    }
}

/// `((x - 1) mod m) + 1`, the representative of `x` in `[1, m]`.
pub fn wrap(x: usize, m: usize) -> usize {
    (x - 1) % m + 1
}

/// The arc set `F_i` of a block, shifted by `block_offset`, as a subset of
/// `[block_offset + 2k - 2]`.
pub fn build_arc_set(k: usize, i: usize, block_offset: usize) -> Result<ElementSet> {
    check_k(k)?;
    let m = 2 * k - 5;
    if i == 0 || i > m {
        return Err(invalid(format!("arc index {i} outside [1, {m}]")));
    }
    let n = block_offset + 2 * k - 2;
    let top = [2 * k - 4, 2 * k - 3, 2 * k - 2];
    let arc = (i + 1..=i + k - 3).map(|x| wrap(x, m));
    ElementSet::from_elements(n, top.into_iter().chain(arc).map(|x| x + block_offset))
}

/// Colors contributed by one block.
#[derive(Clone, Debug)]
pub struct BlockFamilies {
    pub block: usize,
    pub arc_sets: Vec<ElementSet>,
    pub hm_colors: Vec<TraceFamily>,
    pub pigeon_color: TraceFamily,
}

impl BlockFamilies {
    /// `H_1, ..., H_{2k-5}, G` in that order.
    pub fn colors(&self) -> impl Iterator<Item = Color> + '_ {
        self.hm_colors
            .iter()
            .cloned()
            .chain(std::iter::once(self.pigeon_color.clone()))
            .map(Color::Trace)
    }
}

pub fn build_block_families(layout: &BlockLayout, block: usize) -> Result<BlockFamilies> {
    let k = layout.k;
    check_k(k)?;
    if block >= layout.blocks.len() {
        return Err(invalid(format!("block {block} out of range")));
    }
    let u = layout.universe();
    let n = layout.n;
    let off = layout.offset(block);
    let top = ElementSet::from_elements(n, [2 * k - 4, 2 * k - 3, 2 * k - 2].map(|x| x + off))?;
    let mut arc_sets = Vec::new();
    let mut hm_colors = Vec::new();
    for i in 1..=2 * k - 5 {
        let f = build_arc_set(k, i, off)?.rebase(n)?;
        let gi = i + off;
        let support = f.with(gi);
        let color = TraceFamily::new(u, support, |t| t.contains(gi) && t.intersects(&f), vec![f])?;
        arc_sets.push(f);
        hm_colors.push(color);
    }
    let pigeon_color = TraceFamily::new(u, top, |t| t.len() >= 2, vec![])?;
    Ok(BlockFamilies {
        block,
        arc_sets,
        hm_colors,
        pigeon_color,
    })
}

/// The full covering with `(2k - 4)(k - 1)` colors, blocks left to right.
pub fn build_cover(k: usize) -> Result<LabeledCover> {
    let layout = BlockLayout::new(k)?;
    let mut colors = Vec::with_capacity((2 * k - 4) * (k - 1));
    for b in 0..layout.blocks.len() {
        colors.extend(build_block_families(&layout, b)?.colors());
    }
    LabeledCover::new(layout.universe(), colors, PROVENANCE)
}

/// Which color of a block is guaranteed to contain every k-set whose two
/// smallest elements inside the block are `i < j` (local coordinates).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredictedColor {
    Pigeon,
    Hm(usize),
}

pub fn predicted_color(k: usize, i: usize, j: usize) -> Result<PredictedColor> {
    check_k(k)?;
    if !(1 <= i && i < j && j <= 2 * k - 2) {
        return Err(invalid(format!("need 1 <= i < j <= {}", 2 * k - 2)));
    }
    let t = 2 * k - 4;
    Ok(if i >= t {
        PredictedColor::Pigeon
    } else if j >= t || j <= i + k - 3 {
        PredictedColor::Hm(i)
    } else {
        PredictedColor::Hm(j)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Covering,
    Partition,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub mode: VerifyMode,
    /// Check all of `C(n, k)` when it has at most this many members.
    pub exhaustive_budget: u128,
    /// Sample size once the budget is exceeded, or always when `force_sample`.
    pub sample: u64,
    pub force_sample: bool,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            mode: VerifyMode::Covering,
            exhaustive_budget: DEFAULT_EXHAUSTIVE_BUDGET,
            sample: DEFAULT_SAMPLE,
            force_sample: false,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageCheck {
    /// `exhaustive` or `sampled`.
    pub mode: String,
    #[serde(serialize_with = "crate::report::ser_u128")]
    pub checked: u128,
    #[serde(serialize_with = "crate::report::ser_u128")]
    pub misses: u128,
    /// First uncovered set (smallest colex rank when exhaustive, first drawn when sampled).
    pub witness: Option<ElementSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorCheck {
    pub index: usize,
    #[serde(serialize_with = "ser_opt_u128")]
    pub size: Option<u128>,
    pub intersecting: bool,
    pub disjoint_pair: Option<(ElementSet, ElementSet)>,
    /// `None` when the color is empty.
    pub tau: Option<usize>,
    pub tau_witness: Option<ElementSet>,
    pub centers: Option<ElementSet>,
}

impl ColorCheck {
    pub fn non_trivial(&self) -> bool {
        self.tau.is_some_and(|t| t >= 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountCheck {
    pub colors: usize,
    pub expected: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointnessCheck {
    pub disjoint: bool,
    /// A set lying in two colors, with the two color indices (1-based).
    pub witness: Option<(ElementSet, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: usize,
    pub mode: VerifyMode,
    pub coverage: CoverageCheck,
    pub colors: Vec<ColorCheck>,
    pub count_check: CountCheck,
    pub partition: Option<DisjointnessCheck>,
}

impl VerificationReport {
    pub fn coverage_ok(&self) -> bool {
        self.coverage.misses == 0
    }

    pub fn all_intersecting(&self) -> bool {
        self.colors.iter().all(|c| c.intersecting)
    }

    pub fn all_non_trivial(&self) -> bool {
        self.colors.iter().all(|c| c.non_trivial())
    }

    pub fn passed(&self) -> bool {
        self.coverage_ok()
            && self.all_intersecting()
            && self.all_non_trivial()
            && self.count_check.holds
            && self.partition.as_ref().is_none_or(|p| p.disjoint)
    }
}

#[derive(Clone, Copy, Default)]
struct ScanResult {
    checked: u128,
    misses: u128,
    first_miss: Option<(u128, ElementSet)>,
    first_overlap: Option<(u128, ElementSet, usize, usize)>,
}

impl ScanResult {
    fn merge(mut self, o: ScanResult) -> ScanResult {
        self.checked += o.checked;
        self.misses += o.misses;
        self.first_miss = match (self.first_miss, o.first_miss) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self.first_overlap = match (self.first_overlap, o.first_overlap) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    /// `order` is the colex rank or the draw index.
    fn visit(&mut self, c: &LabeledCover, s: &ElementSet, order: u128, partition: bool) {
        self.checked += 1;
        let colors = c.colors();
        match colors.iter().position(|col| col.contains(s)) {
            None => {
                self.misses += 1;
                if self.first_miss.is_none() {
                    self.first_miss = Some((order, *s));
                }
            }
            Some(first) if partition && self.first_overlap.is_none() => {
                if let Some(second) = colors[first + 1..].iter().position(|col| col.contains(s)) {
                    self.first_overlap = Some((order, *s, first + 1, first + second + 2));
                }
            }
            Some(_) => {}
        }
    }
}

fn check_color(index: usize, color: &Color) -> ColorCheck {
    let size = Some(color.size());
    let disjoint_pair = color.disjoint_pair();
    let centers = color.centers().ok();
    let (tau, tau_witness) = if color.is_empty() {
        (None, None)
    } else {
        match color.cover_number(None) {
            CoverOutcome::Exact(c) => (Some(c.tau), Some(c.witness)),
            CoverOutcome::ExceedsCap { cap } => (Some(cap + 1), None),
            CoverOutcome::Uncoverable => (None, None),
        }
    };
    ColorCheck {
        index,
        size,
        intersecting: disjoint_pair.is_none(),
        disjoint_pair,
        tau,
        tau_witness,
        centers,
    }
}

/// Checks coverage, per-color intersection and non-triviality, and the color
/// count; in partition mode also pairwise disjointness. Failures are recorded
/// in the report, never returned as errors.
pub fn verify_cover(c: &LabeledCover, opts: &VerifyOptions) -> VerificationReport {
    let u = c.universe();
    let partition = opts.mode == VerifyMode::Partition;
    let total = u.num_ksets();
    let exhaustive = !opts.force_sample && total <= opts.exhaustive_budget;
    let scan = if exhaustive {
        let chunks = (rayon::current_num_threads() * 8).max(1);
        rank_chunks(u, chunks)
            .into_par_iter()
            .map(|(start, end)| {
                let mut r = ScanResult::default();
                for (off, s) in KSets::range(u, start, end).enumerate() {
                    r.visit(c, &s, start + off as u128, partition);
                }
                r
            })
            .reduce(ScanResult::default, ScanResult::merge)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let draws: Vec<ElementSet> = (0..opts.sample).map(|_| random_kset(&mut rng, u.n, u.k)).collect();
        draws
            .par_iter()
            .enumerate()
            .fold(ScanResult::default, |mut r, (i, s)| {
                r.visit(c, s, i as u128, partition);
                r
            })
            .reduce(ScanResult::default, ScanResult::merge)
    };
    let colors: Vec<ColorCheck> = c
        .colors()
        .par_iter()
        .enumerate()
        .map(|(i, col)| check_color(i + 1, col))
        .collect();
    let expected = u.kneser_colors();
    VerificationReport {
        n: u.n,
        k: u.k,
        mode: opts.mode,
        coverage: CoverageCheck {
            mode: if exhaustive { "exhaustive" } else { "sampled" }.to_string(),
            checked: scan.checked,
            misses: scan.misses,
            witness: scan.first_miss.map(|(_, s)| s),
        },
        count_check: CountCheck {
            colors: c.len(),
            expected,
            holds: c.len() as i64 == expected,
        },
        colors,
        partition: partition.then(|| DisjointnessCheck {
            disjoint: scan.first_overlap.is_none(),
            witness: scan.first_overlap.map(|(_, s, a, b)| (s, a, b)),
        }),
    }
}

/// How a covering is turned into a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionStrategy {
    /// Every k-set goes to its lowest-index color.
    LowestIndex,
    /// The explicit extra members of trace colors (the arc sets `F_i` of the
    /// block construction) stay in their own color; everything else goes to
    /// its lowest-index color.
    #[default]
    PinWitnesses,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionFlag {
    /// 1-based color index.
    pub color: usize,
    /// `empty` or `trivial`.
    pub reason: String,
    pub centers: Option<ElementSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub strategy: PartitionStrategy,
    pub sizes: Vec<usize>,
    pub flags: Vec<PartitionFlag>,
}

impl PartitionReport {
    pub fn clean(&self) -> bool {
        self.flags.is_empty()
    }
}

/// Assigns every k-set to exactly one color. Colors that end up empty or
/// trivial are flagged, not repaired. Fails when `c` does not cover
/// `C([n], k)`.
pub fn cover_to_partition(
    c: &LabeledCover,
    strategy: PartitionStrategy,
) -> Result<(LabeledCover, PartitionReport)> {
    let u = c.universe();
    let colors = c.colors();
    let mut pinned: Vec<(ElementSet, usize)> = Vec::new();
    if strategy == PartitionStrategy::PinWitnesses {
        for (i, col) in colors.iter().enumerate() {
            if let Color::Trace(t) = col {
                for e in t.extras() {
                    if !pinned.iter().any(|(s, _)| s == e) {
                        pinned.push((*e, i));
                    }
                }
            }
        }
        pinned.sort_unstable();
    }
    let chunks = (rayon::current_num_threads() * 8).max(1);
    let parts: Vec<Result<Vec<Vec<ElementSet>>>> = rank_chunks(u, chunks)
        .into_par_iter()
        .map(|(start, end)| {
            let mut buckets = vec![Vec::new(); colors.len()];
            for s in KSets::range(u, start, end) {
                let idx = match pinned.binary_search_by(|(p, _)| p.cmp(&s)) {
                    Ok(pos) => pinned[pos].1,
                    Err(_) => c.first_color_of(&s).ok_or_else(|| {
                        Error::Hypothesis(format!("input is not a covering: {s} is uncovered"))
                    })?,
                };
                buckets[idx].push(s);
            }
            Ok(buckets)
        })
        .collect();
    let mut buckets: Vec<Vec<ElementSet>> = vec![Vec::new(); colors.len()];
    for part in parts {
        for (b, mut p) in buckets.iter_mut().zip(part?) {
            b.append(&mut p);
        }
    }
    let families: Vec<SetFamily> = buckets
        .into_par_iter()
        .map(|b| SetFamily::new(u, b).expect("members are k-subsets of [n]"))
        .collect();
    let flags: Vec<PartitionFlag> = families
        .iter()
        .enumerate()
        .filter_map(|(i, f)| match f.centers() {
            Err(_) => Some(PartitionFlag {
                color: i + 1,
                reason: "empty".into(),
                centers: None,
            }),
            Ok(centers) if !centers.is_empty() => Some(PartitionFlag {
                color: i + 1,
                reason: "trivial".into(),
                centers: Some(centers),
            }),
            Ok(_) => None,
        })
        .collect();
    let sizes = families.iter().map(|f| f.len()).collect();
    let out = LabeledCover::new(
        u,
        families.into_iter().map(Color::Explicit).collect(),
        format!("{}+partition", c.provenance()),
    )?;
    Ok((
        out,
        PartitionReport {
            strategy,
            sizes,
            flags,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> ElementSet {
        ElementSet::from_elements(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn arc_set_examples() {
        assert_eq!(build_arc_set(3, 1, 0).unwrap().to_vec(), vec![2, 3, 4]);
        assert_eq!(build_arc_set(4, 3, 0).unwrap().to_vec(), vec![1, 4, 5, 6]);
        assert_eq!(build_arc_set(4, 1, 6).unwrap().to_vec(), vec![8, 10, 11, 12]);
        assert!(build_arc_set(4, 4, 0).is_err());
        assert!(build_arc_set(4, 0, 0).is_err());
        assert!(build_arc_set(2, 1, 0).is_err());
    }

    #[test]
    fn arc_sets_have_size_k_and_avoid_their_index() {
        for k in 3..=12 {
            for i in 1..=2 * k - 5 {
                let f = build_arc_set(k, i, 0).unwrap();
                assert_eq!(f.len(), k);
                assert!(!f.contains(i));
                assert!(f.iter().all(|x| x <= 2 * k - 2));
            }
        }
    }

    #[test]
    fn color_count_identity() {
        for k in 3usize..=200 {
            assert_eq!((2 * k - 4) * (k - 1), 2 * (k - 1) * (k - 1) - 2 * k + 2);
        }
    }

    #[test]
    fn layout_partitions_ground_set() {
        for k in 3..=9 {
            let l = BlockLayout::new(k).unwrap();
            let mut seen = ElementSet::empty(l.n);
            for b in &l.blocks {
                assert_eq!(b.len(), 2 * k - 2);
                assert!(b.is_disjoint(&seen));
                seen = seen.union(b);
            }
            assert_eq!(seen, ElementSet::full(l.n));
        }
        assert!(BlockLayout::new(10).is_err());
    }

    #[test]
    fn k3_first_block() {
        let l = BlockLayout::new(3).unwrap();
        let b = build_block_families(&l, 0).unwrap();
        assert_eq!(b.hm_colors.len(), 1);
        let h1 = b.hm_colors[0].materialize();
        let expected = SetFamily::filter_ksets(l.universe(), |f| {
            (f.contains(1) && f.intersects(&set(8, &[2, 3, 4]))) || *f == set(8, &[2, 3, 4])
        });
        assert_eq!(h1, expected);
        assert_eq!(h1.len(), 16);
        let g = b.pigeon_color.materialize();
        let top = set(8, &[2, 3, 4]);
        assert_eq!(
            g,
            SetFamily::filter_ksets(l.universe(), |f| f.intersection(&top).len() >= 2)
        );
    }

    #[test]
    fn color_counts() {
        assert_eq!(build_cover(3).unwrap().len(), 4);
        assert_eq!(build_cover(4).unwrap().len(), 12);
        let c6 = build_cover(6).unwrap();
        assert_eq!((c6.universe().n, c6.len()), (50, 40));
        let l = BlockLayout::new(4).unwrap();
        assert_eq!(build_block_families(&l, 0).unwrap().colors().count(), 4);
    }

    #[test]
    fn small_covers_verify_exhaustively() {
        for (k, total) in [(3, 56u128), (4, 3060)] {
            let r = verify_cover(&build_cover(k).unwrap(), &VerifyOptions::default());
            assert_eq!(r.coverage.mode, "exhaustive");
            assert_eq!(r.coverage.checked, total);
            assert!(r.passed(), "k={k}: {r:?}");
        }
    }

    #[test]
    fn predicted_colors_contain_their_sets() {
        for k in 3..=5 {
            let l = BlockLayout::new(k).unwrap();
            let fams = build_block_families(&l, 0).unwrap();
            let u = l.universe();
            for s in KSets::new(u).take(2_000_000) {
                let local: Vec<usize> = s.iter().take_while(|&x| x <= 2 * k - 2).collect();
                if local.len() < 2 {
                    continue;
                }
                let color = match predicted_color(k, local[0], local[1]).unwrap() {
                    PredictedColor::Pigeon => &fams.pigeon_color,
                    PredictedColor::Hm(i) => &fams.hm_colors[i - 1],
                };
                assert!(color.contains(&s), "k={k} {s}");
            }
        }
    }

    #[test]
    fn star_is_not_a_cover() {
        let u = Universe::new(6, 2).unwrap();
        let star = SetFamily::filter_ksets(u, |s| s.contains(1));
        let c = LabeledCover::new(u, vec![star.into()], "test").unwrap();
        let r = verify_cover(&c, &VerifyOptions::default());
        assert_eq!(r.coverage.misses, 10);
        assert_eq!(r.coverage.witness, Some(set(6, &[2, 3])));
        assert!(!r.colors[0].non_trivial());
        assert_eq!(r.colors[0].tau, Some(1));
        assert!(!r.count_check.holds);
        assert!(!r.passed());
    }

    #[test]
    fn sampled_mode_is_seeded() {
        let c = build_cover(4).unwrap();
        let opts = VerifyOptions {
            force_sample: true,
            sample: 500,
            seed: 9,
            ..Default::default()
        };
        let r = verify_cover(&c, &opts);
        assert_eq!(r.coverage.mode, "sampled");
        assert_eq!(r.coverage.checked, 500);
        assert!(r.passed());
        assert_eq!(verify_cover(&c, &opts), r);
    }

    #[test]
    fn partition_of_small_covers() {
        for k in [3, 4] {
            let c = build_cover(k).unwrap();
            let (p, rep) = cover_to_partition(&c, PartitionStrategy::PinWitnesses).unwrap();
            assert!(rep.clean(), "k={k}: {:?}", rep.flags);
            let opts = VerifyOptions {
                mode: VerifyMode::Partition,
                ..Default::default()
            };
            let r = verify_cover(&p, &opts);
            assert!(r.passed(), "k={k}: {r:?}");
            assert_eq!(rep.sizes.iter().sum::<usize>() as u128, c.universe().num_ksets());
        }
    }

    #[test]
    fn lowest_index_partition_strips_last_arc_color() {
        let c = build_cover(4).unwrap();
        let (_, rep) = cover_to_partition(&c, PartitionStrategy::LowestIndex).unwrap();
        // F_3 = {1,4,5,6} contains 1 and meets F_1, so it lands in H_1
        assert!(rep.flags.iter().any(|f| f.color == 3 && f.reason == "trivial"));
        let (_, rep3) = cover_to_partition(&build_cover(3).unwrap(), PartitionStrategy::LowestIndex).unwrap();
        assert!(rep3.clean());
    }

    #[test]
    fn duplicate_color_is_flagged_empty() {
        let u = Universe::new(3, 2).unwrap();
        let tri = SetFamily::complete(u);
        let c = LabeledCover::new(u, vec![tri.clone().into(), tri.into()], "test").unwrap();
        let (_, rep) = cover_to_partition(&c, PartitionStrategy::default()).unwrap();
        assert_eq!(rep.flags.len(), 1);
        assert_eq!(rep.flags[0].color, 2);
        assert_eq!(rep.flags[0].reason, "empty");
    }

    #[test]
    fn partition_rejects_non_cover() {
        let u = Universe::new(4, 2).unwrap();
        let star = SetFamily::filter_ksets(u, |s| s.contains(1));
        let c = LabeledCover::new(u, vec![star.into()], "test").unwrap();
        assert!(cover_to_partition(&c, PartitionStrategy::LowestIndex).is_err());
    }
}
