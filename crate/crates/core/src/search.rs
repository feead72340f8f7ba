//! Exhaustive search for coverings and partitions of `C([n], k)` by at most
//! `c` non-trivial intersecting families at tiny parameters, the `n(2)`
//! oracle, and DIMACS CNF export of the same question.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::construction::{verify_cover, VerifyMode, VerifyOptions};
use crate::error::{invalid, Error, Result};
use crate::sets::{Color, ElementSet, KSets, LabeledCover, SetFamily, Universe};

/// Largest `C(n, k)` the search accepts.
pub const MAX_SEARCH_SETS: usize = 4096;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(600);
pub const DEFAULT_FAMILY_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Colors may overlap.
    Covering,
    /// Every k-set gets exactly one color.
    Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchInstance {
    pub n: usize,
    pub k: usize,
    pub colors: usize,
    pub mode: SearchMode,
    /// Partition mode: the first set takes color 1 and new colors are opened
    /// in order of first use.
    pub symmetry_breaking: bool,
    pub node_budget: u64,
    #[serde(skip)]
    pub time_budget: Duration,
}

impl SearchInstance {
    /// Covering mode with `c = n - 2k + 2` colors and default budgets.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let c = Universe::new(n, k)?.kneser_colors();
        if c < 1 {
            return Err(invalid(format!("n - 2k + 2 = {c} leaves no colors")));
        }
        Ok(Self::with_colors(n, k, c as usize))
    }

    pub fn with_colors(n: usize, k: usize, colors: usize) -> Self {
        Self {
            n,
            k,
            colors,
            mode: SearchMode::Covering,
            symmetry_breaking: true,
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: DEFAULT_TIME_BUDGET,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    fn universe(&self) -> Result<Universe> {
        if self.colors == 0 {
            return Err(invalid("at least one color is required"));
        }
        if self.k == 0 || self.k > self.n {
            return Err(invalid(format!("need 1 <= k <= n, got n={} k={}", self.n, self.k)));
        }
        let u = Universe::new(self.n, self.k)?;
        if u.num_ksets() > MAX_SEARCH_SETS as u128 {
            return Err(invalid(format!(
                "C({}, {}) exceeds the search limit of {MAX_SEARCH_SETS} sets",
                self.n, self.k
            )));
        }
        Ok(u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub certificate: Option<LabeledCover>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// How `exhausted-none` was reached or why the search gave up.
    pub note: String,
}

/// Growable bitset over k-set indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & !b).collect())
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

/// All k-sets in colex order with their "intersects" adjacency rows (no loops).
struct SetGraph {
    u: Universe,
    sets: Vec<ElementSet>,
    meets: Vec<Bits>,
}

impl SetGraph {
    fn new(u: Universe) -> Self {
        let sets: Vec<ElementSet> = KSets::new(u).collect();
        let m = sets.len();
        let meets = sets
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut row = Bits::new(m);
                for (j, t) in sets.iter().enumerate() {
                    if j != i && s.intersects(t) {
                        row.set(j);
                    }
                }
                row
            })
            .collect();
        Self { u, sets, meets }
    }

    fn family(&self, members: &Bits) -> SetFamily {
        SetFamily::new(self.u, members.iter().map(|i| self.sets[i])).expect("k-sets of [n]")
    }
}

fn maximal_cliques(g: &SetGraph, cap: usize) -> Result<Vec<Bits>> {
    fn rec(g: &SetGraph, r: &Bits, p: Bits, x: Bits, out: &mut Vec<Bits>, cap: usize) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= cap {
                return Err(Error::Inconclusive(format!(
                    "more than {cap} maximal intersecting families"
                )));
            }
            out.push(r.clone());
            return Ok(());
        }
        // pivot maximizing |P ∩ N(u)|
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| p.and(&g.meets[u]).count())
            .expect("P ∪ X non-empty");
        let mut p = p;
        let mut x = x;
        let branch: Vec<usize> = p.and_not(&g.meets[pivot]).iter().collect();
        for v in branch {
            let mut r2 = r.clone();
            r2.set(v);
            rec(g, &r2, p.and(&g.meets[v]), x.and(&g.meets[v]), out, cap)?;
            p.0[v / 64] &= !(1 << (v % 64));
            x.set(v);
        }
        Ok(())
    }
    let m = g.sets.len();
    let mut out = Vec::new();
    rec(g, &Bits::new(m), Bits::full(m), Bits::new(m), &mut out, cap)?;
    out.sort_by(|a, b| {
        let fa: Vec<usize> = a.iter().collect();
        let fb: Vec<usize> = b.iter().collect();
        fa.cmp(&fb)
    });
    Ok(out)
}

/// Every maximal intersecting subfamily of `C([n], k)`, ordered by member
/// indices in colex order. Fails with `Inconclusive` once more than `cap`
/// families turn up.
pub fn enumerate_maximal_intersecting(n: usize, k: usize, cap: usize) -> Result<Vec<SetFamily>> {
    let u = SearchInstance::with_colors(n, k, 1).universe()?;
    let g = SetGraph::new(u);
    Ok(maximal_cliques(&g, cap)?.iter().map(|b| g.family(b)).collect())
}

struct Budget {
    nodes: AtomicU64,
    limit: u64,
    deadline: Instant,
    exceeded: AtomicBool,
}

impl Budget {
    fn tick(&self) -> bool {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit || (used.is_multiple_of(4096) && Instant::now() > self.deadline) {
            self.exceeded.store(true, Ordering::Relaxed);
        }
        !self.exceeded.load(Ordering::Relaxed)
    }
}

enum Dfs {
    Found(Vec<usize>),
    None,
    Stopped,
}

/// Upper bound on a non-trivial intersecting subfamily of `C([n], k)`.
fn nontrivial_size_bound(n: usize, k: usize) -> u128 {
    if n >= 2 * k {
        crate::bounds::hm_bound(n as u64, k as u64)
            .ok()
            .and_then(|b| u128::try_from(b).ok())
            .unwrap_or(u128::MAX)
    } else {
        crate::sets::binomial_u128(n, k)
    }
}

/// Covering search: colors may be taken maximal, so it is enough to pick
/// `c` maximal non-trivial intersecting families. Branches on the first
/// uncovered set. Falls back to [`search_assignment`] when there are too many
/// maximal families to list.
fn search_covering(g: &SetGraph, inst: &SearchInstance, budget: &Budget) -> (Dfs, String) {
    let m = g.sets.len();
    let c = inst.colors;
    let bound = nontrivial_size_bound(g.u.n, g.u.k);
    if (c as u128).saturating_mul(bound) < m as u128 {
        return (
            Dfs::None,
            format!("counting bound: {c} colors x {bound} sets < {m}"),
        );
    }
    let families: Vec<Bits> = match maximal_cliques(g, DEFAULT_FAMILY_CAP) {
        Ok(all) => all
            .into_iter()
            .filter(|b| g.family(b).centers().map(|x| x.is_empty()).unwrap_or(false))
            .collect(),
        Err(_) => {
            let (r, note) = search_assignment(g, inst, budget);
            let why = format!("more than {DEFAULT_FAMILY_CAP} maximal families, assignment search");
            return (r, if note.is_empty() { why } else { format!("{why}: {note}") });
        }
    };
    let max_size = families.iter().map(|f| f.count()).max().unwrap_or(0);
    if c * max_size < m {
        return (
            Dfs::None,
            format!("counting bound: {c} colors x {max_size} sets < {m}"),
        );
    }

    struct Ctx<'a> {
        fams: &'a [Bits],
        max_size: usize,
        budget: &'a Budget,
        branch: usize,
        best: &'a AtomicUsize,
    }

    fn rec(cx: &Ctx<'_>, uncovered: &Bits, left: usize, chosen: &mut Vec<usize>) -> Dfs {
        if !cx.budget.tick() || cx.best.load(Ordering::Relaxed) < cx.branch {
            return Dfs::Stopped;
        }
        let Some(first) = uncovered.first() else {
            return Dfs::Found(chosen.clone());
        };
        if left == 0 || uncovered.count() > left * cx.max_size {
            return Dfs::None;
        }
        let mut stopped = false;
        for (i, f) in cx.fams.iter().enumerate() {
            if !f.get(first) {
                continue;
            }
            chosen.push(i);
            match rec(cx, &uncovered.and_not(f), left - 1, chosen) {
                Dfs::Found(v) => return Dfs::Found(v),
                Dfs::Stopped => stopped = true,
                Dfs::None => {}
            }
            chosen.pop();
            if stopped {
                break;
            }
        }
        if stopped {
            Dfs::Stopped
        } else {
            Dfs::None
        }
    }

    let all = Bits::full(m);
    // top-level branches run in parallel; a branch gives up once a lower one
    // has succeeded, so the lowest-index success wins
    let best = AtomicUsize::new(usize::MAX);
    let branches: Vec<usize> = (0..families.len()).filter(|&i| families[i].get(0)).collect();
    let results: Vec<Dfs> = branches
        .par_iter()
        .enumerate()
        .map(|(b, &i)| {
            let cx = Ctx {
                fams: &families,
                max_size,
                budget,
                branch: b,
                best: &best,
            };
            let mut chosen = vec![i];
            let r = rec(&cx, &all.and_not(&families[i]), c - 1, &mut chosen);
            if matches!(r, Dfs::Found(_)) {
                best.fetch_min(b, Ordering::Relaxed);
            }
            r
        })
        .collect();
    let mut stopped = false;
    for r in results {
        match r {
            Dfs::Found(v) => {
                let colors: Vec<Bits> = v.iter().map(|&i| families[i].clone()).collect();
                return (Dfs::Found(flatten(&colors)), String::new());
            }
            Dfs::Stopped => stopped = true,
            Dfs::None => {}
        }
    }
    if stopped {
        (Dfs::Stopped, "budget exhausted".into())
    } else {
        (
            Dfs::None,
            format!("all choices among {} maximal non-trivial families exhausted", families.len()),
        )
    }
}

/// Encodes chosen families as `color index + 1` per set bit, one block per color.
fn flatten(colors: &[Bits]) -> Vec<usize> {
    let mut out = Vec::new();
    for (ci, b) in colors.iter().enumerate() {
        for i in b.iter() {
            out.push(ci);
            out.push(i);
        }
    }
    out
}

struct AssignState<'a> {
    g: &'a SetGraph,
    c: usize,
    symmetry: bool,
    /// Covering mode: a class only has to extend to a non-trivial
    /// intersecting family, using any k-sets.
    covering: bool,
    /// per color: members, common intersection
    members: Vec<Vec<usize>>,
    centers: Vec<u128>,
    assign: Vec<usize>,
}

impl AssignState<'_> {
    /// Sets that may still join color `col` (or, in covering mode, extend it).
    fn compatible(&self, col: usize, from: usize) -> impl Iterator<Item = usize> + '_ {
        let start = if self.covering { 0 } else { from };
        (start..self.g.sets.len())
            .filter(move |&j| self.members[col].iter().all(|&i| self.g.meets[i].get(j)))
    }

    /// A color with a center `x` that no compatible set avoids stays trivial.
    fn hopeless(&self, next: usize) -> bool {
        (0..self.c).any(|col| {
            let centers = self.centers[col];
            if self.members[col].is_empty() || centers == 0 {
                return false;
            }
            let mut rescued = 0u128;
            for j in self.compatible(col, next) {
                rescued |= centers & !self.g.sets[j].bits();
                if rescued == centers {
                    return false;
                }
            }
            rescued != centers
        })
    }

    /// Pairwise-intersecting k-sets, each meeting every member of `col`, that
    /// together avoid each common element of the color.
    fn extension(&self, col: usize) -> Option<Vec<usize>> {
        fn go(st: &AssignState<'_>, cand: &[usize], left: u128, chosen: &mut Vec<usize>) -> bool {
            if left == 0 {
                return true;
            }
            let x = left.trailing_zeros() as usize;
            for &j in cand {
                let s = st.g.sets[j].bits();
                if s >> x & 1 == 1 || !chosen.iter().all(|&t| st.g.meets[t].get(j)) {
                    continue;
                }
                chosen.push(j);
                if go(st, cand, left & s, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let cand: Vec<usize> = self.compatible(col, 0).collect();
        let mut chosen = Vec::new();
        go(self, &cand, self.centers[col], &mut chosen).then_some(chosen)
    }

    fn leaf(&self, used: usize) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for col in 0..used {
            let extra = if self.centers[col] == 0 {
                Vec::new()
            } else if self.covering {
                self.extension(col)?
            } else {
                return None;
            };
            for (i, &a) in self.assign.iter().enumerate() {
                if a == col {
                    out.extend([col, i]);
                }
            }
            for j in extra {
                out.extend([col, j]);
            }
        }
        Some(out)
    }

    fn rec(&mut self, i: usize, used: usize, budget: &Budget) -> Dfs {
        if !budget.tick() {
            return Dfs::Stopped;
        }
        let m = self.g.sets.len();
        if i == m {
            return match self.leaf(used) {
                Some(flat) => Dfs::Found(flat),
                None => Dfs::None,
            };
        }
        if self.hopeless(i) {
            return Dfs::None;
        }
        let s = self.g.sets[i];
        let limit = if self.symmetry { (used + 1).min(self.c) } else { self.c };
        let mut stopped = false;
        for col in 0..limit {
            if !self.members[col].iter().all(|&j| self.g.meets[i].get(j)) {
                continue;
            }
            let saved = self.centers[col];
            self.centers[col] = if self.members[col].is_empty() {
                s.bits()
            } else {
                saved & s.bits()
            };
            self.members[col].push(i);
            self.assign[i] = col;
            let new_used = used.max(col + 1);
            let r = self.rec(i + 1, new_used, budget);
            self.members[col].pop();
            self.centers[col] = saved;
            match r {
                Dfs::Found(v) => return Dfs::Found(v),
                Dfs::Stopped => {
                    stopped = true;
                    break;
                }
                Dfs::None => {}
            }
        }
        if stopped {
            Dfs::Stopped
        } else {
            Dfs::None
        }
    }
}

/// Assigns every k-set one color in colex order. In partition mode each
/// class must end non-trivial; in covering mode each class must extend to a
/// non-trivial intersecting family.
fn search_assignment(g: &SetGraph, inst: &SearchInstance, budget: &Budget) -> (Dfs, String) {
    let m = g.sets.len();
    let mut st = AssignState {
        g,
        c: inst.colors,
        symmetry: inst.symmetry_breaking,
        covering: inst.mode == SearchMode::Covering,
        members: vec![Vec::new(); inst.colors],
        centers: vec![0; inst.colors],
        assign: vec![0; m],
    };
    match st.rec(0, 0, budget) {
        Dfs::Found(flat) => (Dfs::Found(flat), String::new()),
        Dfs::None => (Dfs::None, "assignment tree exhausted".into()),
        Dfs::Stopped => (Dfs::Stopped, "budget exhausted".into()),
    }
}

/// Decides whether `C([n], k)` can be covered (or partitioned) by at most
/// `c` non-trivial intersecting families. A `found` certificate has passed
/// [`verify_cover`] before it is returned.
pub fn search_cover(inst: &SearchInstance) -> Result<SearchOutcome> {
    let u = inst.universe()?;
    let start = Instant::now();
    let g = SetGraph::new(u);
    let budget = Budget {
        nodes: AtomicU64::new(0),
        limit: inst.node_budget,
        deadline: start + inst.time_budget,
        exceeded: AtomicBool::new(false),
    };
    let (result, note) = match inst.mode {
        SearchMode::Covering => search_covering(&g, inst, &budget),
        SearchMode::Partition => search_assignment(&g, inst, &budget),
    };
    let nodes_explored = budget.nodes.load(Ordering::Relaxed).min(inst.node_budget);
    let (status, certificate) = match result {
        Dfs::Found(flat) => {
            let mut buckets: Vec<Vec<ElementSet>> = Vec::new();
            for pair in flat.chunks(2) {
                if buckets.len() <= pair[0] {
                    buckets.resize(pair[0] + 1, Vec::new());
                }
                buckets[pair[0]].push(g.sets[pair[1]]);
            }
            let colors = buckets
                .into_iter()
                .filter(|b| !b.is_empty())
                .map(|b| SetFamily::new(u, b).map(Color::Explicit))
                .collect::<Result<Vec<_>>>()?;
            let cover = LabeledCover::new(u, colors, "search")?;
            let opts = VerifyOptions {
                mode: match inst.mode {
                    SearchMode::Covering => VerifyMode::Covering,
                    SearchMode::Partition => VerifyMode::Partition,
                },
                ..Default::default()
            };
            let report = verify_cover(&cover, &opts);
            let valid = report.coverage_ok()
                && report.all_intersecting()
                && report.all_non_trivial()
                && cover.len() <= inst.colors
                && report.partition.as_ref().is_none_or(|p| p.disjoint);
            if !valid {
                return Err(Error::Hypothesis("search produced an invalid certificate".into()));
            }
            (SearchStatus::Found, Some(cover))
        }
        Dfs::None => (SearchStatus::ExhaustedNone, None),
        Dfs::Stopped => (SearchStatus::Inconclusive, None),
    };
    Ok(SearchOutcome {
        status,
        certificate,
        nodes_explored,
        elapsed: start.elapsed(),
        note,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleStep {
    pub n: usize,
    pub colors: usize,
    pub status: SearchStatus,
    pub nodes: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct NOfKOracle {
    pub k: usize,
    pub value: usize,
    pub steps: Vec<OracleStep>,
    /// First `n` from which `3(n-2) < C(n,2)` holds for good.
    pub counting_from: usize,
}

/// `n(2)`: the largest `n` for which `C([n], 2)` is covered by `n - 2`
/// non-trivial intersecting families. Every such family of 2-sets lies in a
/// triangle, so once `3(n-2) < C(n,2)` (all `n >= 5`) no covering exists.
pub fn n_of_k_oracle(k: usize) -> Result<NOfKOracle> {
    if k != 2 {
        return Err(invalid("oracle implemented for k=2"));
    }
    let fails_by_counting = |n: usize| 3 * (n - 2) < n * (n - 1) / 2;
    let mut steps = Vec::new();
    let mut value = 0;
    let mut n = 3;
    while !fails_by_counting(n) {
        let out = search_cover(&SearchInstance::with_colors(n, 2, n - 2))?;
        if out.status == SearchStatus::Inconclusive {
            return Err(Error::Inconclusive(format!("search at n={n} hit its budget")));
        }
        if out.status == SearchStatus::Found {
            value = n;
        }
        steps.push(OracleStep {
            n,
            colors: n - 2,
            status: out.status,
            nodes: out.nodes_explored,
        });
        n += 1;
    }
    Ok(NOfKOracle {
        k,
        value,
        steps,
        counting_from: n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfStats {
    pub variables: usize,
    pub clauses: usize,
    pub set_variables: usize,
    pub aux_variables: usize,
}

/// DIMACS CNF for the search instance together with its statistics.
///
/// Variable `x(S, c) = r(S) * colors + c + 1`, where `r(S)` is the colex rank
/// of `S` and `c` the 0-based color. Clauses: every set gets a color; two
/// disjoint sets never share a color; for every color and element `v` some
/// set of the color avoids `v` (non-triviality, which also forces the color
/// to be non-empty). Partition mode adds at-most-one-color clauses.
///
/// The formula asks for exactly `colors` non-empty classes. In covering mode
/// that is the same as at most `colors`; in partition mode "at most `c`" is
/// the disjunction of the formulas for `1..=c`.
pub fn sat_encoding(inst: &SearchInstance) -> Result<(String, CnfStats)> {
    let u = inst.universe()?;
    let sets: Vec<ElementSet> = KSets::new(u).collect();
    let c = inst.colors;
    let x = |r: usize, col: usize| (r * c + col + 1) as i64;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    for r in 0..sets.len() {
        clauses.push((0..c).map(|col| x(r, col)).collect());
    }
    for (r, s) in sets.iter().enumerate() {
        for (q, t) in sets.iter().enumerate().skip(r + 1) {
            if s.is_disjoint(t) {
                for col in 0..c {
                    clauses.push(vec![-x(r, col), -x(q, col)]);
                }
            }
        }
    }
    for col in 0..c {
        for v in 1..=u.n {
            clauses.push(
                sets.iter()
                    .enumerate()
                    .filter(|(_, s)| !s.contains(v))
                    .map(|(r, _)| x(r, col))
                    .collect(),
            );
        }
    }
    if inst.mode == SearchMode::Partition {
        for r in 0..sets.len() {
            for a in 0..c {
                for b in a + 1..c {
                    clauses.push(vec![-x(r, a), -x(r, b)]);
                }
            }
        }
    }
    let stats = CnfStats {
        variables: sets.len() * c,
        clauses: clauses.len(),
        set_variables: sets.len() * c,
        aux_variables: 0,
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "c {} of C([{}],{}) by {} non-trivial intersecting families",
        match inst.mode {
            SearchMode::Covering => "covering",
            SearchMode::Partition => "partition",
        },
        u.n,
        u.k,
        c
    );
    let _ = writeln!(out, "c variable rank*{c}+color+1: k-set of that colex rank has that 0-based color");
    for (r, s) in sets.iter().enumerate() {
        let vars: Vec<String> = (0..c).map(|col| x(r, col).to_string()).collect();
        let _ = writeln!(out, "c {} {}", s, vars.join(" "));
    }
    let _ = writeln!(out, "p cnf {} {}", stats.variables, stats.clauses);
    for cl in &clauses {
        for lit in cl {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    Ok((out, stats))
}

pub fn export_sat(inst: &SearchInstance, path: &std::path::Path) -> Result<CnfStats> {
    let (text, stats) = sat_encoding(inst)?;
    crate::io::write_text(path, &text)?;
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget {
            nodes: AtomicU64::new(0),
            limit: DEFAULT_NODE_BUDGET,
            deadline: Instant::now() + DEFAULT_TIME_BUDGET,
            exceeded: AtomicBool::new(false),
        }
    }

    #[test]
    fn assignment_fallback_matches_maximal_families() {
        for (n, k) in [(4, 2), (5, 2), (6, 2), (5, 3), (6, 3), (7, 3)] {
            let g = SetGraph::new(Universe::new(n, k).unwrap());
            for c in 1..=4 {
                let inst = SearchInstance::with_colors(n, k, c);
                let (a, _) = search_covering(&g, &inst, &budget());
                let (b, _) = search_assignment(&g, &inst, &budget());
                assert_eq!(
                    matches!(a, Dfs::Found(_)),
                    matches!(b, Dfs::Found(_)),
                    "n={n} k={k} c={c}"
                );
            }
        }
    }

    #[test]
    fn covering_beyond_family_cap_is_decided() {
        let out = search_cover(&SearchInstance::with_colors(8, 4, 2)).unwrap();
        assert_ne!(out.status, SearchStatus::Inconclusive, "{}", out.note);
    }

    #[test]
    fn maximal_families_small() {
        let f3 = enumerate_maximal_intersecting(3, 2, 100).unwrap();
        assert_eq!(f3.len(), 1);
        assert_eq!(f3[0].len(), 3);
        let f4 = enumerate_maximal_intersecting(4, 2, 100).unwrap();
        assert_eq!(f4.len(), 8);
        let stars = f4.iter().filter(|f| f.is_trivial().unwrap()).count();
        assert_eq!(stars, 4);
        assert!(f4.iter().all(|f| f.len() == 3));
        let f5 = enumerate_maximal_intersecting(5, 2, 100).unwrap();
        assert_eq!(f5.iter().filter(|f| f.len() == 4).count(), 5);
        assert_eq!(f5.iter().filter(|f| f.len() == 3).count(), 10);
        assert_eq!(f5.len(), 15);
        assert!(enumerate_maximal_intersecting(5, 2, 3).is_err());
    }

    #[test]
    fn maximal_families_are_maximal() {
        for (n, k) in [(5, 2), (6, 3), (7, 3)] {
            let u = Universe::new(n, k).unwrap();
            for f in enumerate_maximal_intersecting(n, k, 10_000).unwrap() {
                assert!(f.is_intersecting());
                for s in KSets::new(u) {
                    if !f.contains(&s) {
                        assert!(f.iter().any(|m| m.is_disjoint(&s)));
                    }
                }
            }
        }
    }

    #[test]
    fn n2_instances() {
        for mode in [SearchMode::Covering, SearchMode::Partition] {
            let found = search_cover(&SearchInstance::with_colors(3, 2, 1).mode(mode)).unwrap();
            assert_eq!(found.status, SearchStatus::Found);
            assert_eq!(found.certificate.unwrap().len(), 1);
            for (n, c) in [(4, 2), (5, 3)] {
                let out = search_cover(&SearchInstance::with_colors(n, 2, c).mode(mode)).unwrap();
                assert_eq!(out.status, SearchStatus::ExhaustedNone, "n={n} {mode:?}");
            }
        }
    }

    #[test]
    fn oracle_for_k2() {
        let o = n_of_k_oracle(2).unwrap();
        assert_eq!(o.value, 3);
        assert_eq!(o.counting_from, 5);
        for n in 5u64..1000 {
            assert!(3 * (n - 2) < n * (n - 1) / 2);
        }
        assert!(n_of_k_oracle(3).is_err());
    }

    #[test]
    fn budget_gives_inconclusive() {
        let mut inst = SearchInstance::with_colors(6, 2, 4).mode(SearchMode::Partition);
        inst.node_budget = 10;
        assert_eq!(search_cover(&inst).unwrap().status, SearchStatus::Inconclusive);
    }

    #[test]
    fn cnf_counts() {
        let (text, s) = sat_encoding(&SearchInstance::with_colors(3, 2, 1)).unwrap();
        assert_eq!(s.set_variables, 3);
        assert_eq!(s.clauses, 3 + 3);
        assert!(text.contains("p cnf 3 6\n"));
        let (_, s) = sat_encoding(&SearchInstance::with_colors(4, 2, 2)).unwrap();
        assert_eq!(s.variables, 12);
        // 6 cover clauses, 3 disjoint pairs x 2 colors, 4 elements x 2 colors
        assert_eq!(s.clauses, 6 + 6 + 8);
    }

    #[test]
    fn k2_nontrivial_families_live_in_triangles() {
        for n in 3..=7 {
            for f in enumerate_maximal_intersecting(n, 2, 10_000).unwrap() {
                if !f.is_trivial().unwrap() {
                    assert_eq!(f.len(), 3);
                    assert_eq!(f.support().len(), 3);
                }
            }
        }
    }
}
