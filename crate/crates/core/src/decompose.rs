//! Constructive decompositions behind the upper bounds on `n(k)`:
//! set-covers of an intersecting family by `τ`-sets, the split of a
//! non-trivial intersecting family into an edge-covered part and a part
//! cross-intersecting a family of large cover number, and the level-by-level
//! `(A, B)`-pair decomposition of independent k-sets of a sparse graph.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graphs::SimpleGraph;
use crate::report::{ser_biguint, ser_opt_rational, ser_opt_u128, ser_rational, ser_u128};
use crate::sets::{CoverNumber, CoverOutcome, ElementSet, LabeledCover, SetFamily, Universe};

pub const DEFAULT_MAX_LEVEL: usize = 3;
pub const DEFAULT_PAIR_CAP: usize = 100_000;

fn uniform_k(f: &SetFamily) -> Result<usize> {
    f.uniform()
        .ok_or_else(|| Error::Hypothesis("family must be non-empty and uniform".into()))
}

fn exact_tau(f: &SetFamily, cap: usize) -> Result<CoverNumber> {
    match f.cover_number(Some(cap)) {
        CoverOutcome::Exact(c) => Ok(c),
        CoverOutcome::ExceedsCap { cap } => Err(Error::Inconclusive(format!(
            "cover number exceeds {cap}"
        ))),
        CoverOutcome::Uncoverable => Err(Error::Hypothesis("family contains the empty set".into())),
    }
}

fn require_intersecting(f: &SetFamily) -> Result<()> {
    match f.disjoint_pair() {
        Some((a, b)) => Err(Error::NotIntersecting(a, b)),
        None => Ok(()),
    }
}

/// True iff every member of `f` contains some member of `h`.
pub fn set_covers(h: &SetFamily, f: &SetFamily) -> bool {
    f.iter().all(|m| h.iter().any(|c| c.is_subset(m)))
}

#[derive(Clone, Debug, Serialize)]
pub struct SetCoverResult {
    pub tau: usize,
    /// Minimum cover the construction starts from.
    pub piercing_set: ElementSet,
    pub cover_family: SetFamily,
    /// `τ k^(τ-1)`.
    #[serde(serialize_with = "ser_biguint")]
    pub size_bound: BigUint,
    /// Sizes of the intermediate families `H_1, ..., H_τ` after deduplication.
    pub level_sizes: Vec<usize>,
}

/// Set-covers an intersecting k-uniform family by `τ`-sets: start from the
/// singletons of the lexicographically smallest minimum cover and extend
/// every set `G` by each element of the lexicographically smallest member
/// disjoint from `G`, until the sets have size `τ`.
pub fn set_cover_tau(f: &SetFamily) -> Result<SetCoverResult> {
    let k = uniform_k(f)?;
    if f.is_empty() {
        return Err(Error::NoMembers);
    }
    require_intersecting(f)?;
    let n = f.n();
    let cn = exact_tau(f, k)?;
    let tau = cn.tau;
    let mut level: Vec<ElementSet> = cn
        .witness
        .iter()
        .map(|x| ElementSet::from_elements(n, [x]))
        .collect::<Result<_>>()?;
    let mut level_sizes = vec![level.len()];
    for _ in 1..tau {
        let mut next: Vec<ElementSet> = level
            .par_iter()
            .flat_map_iter(|g| {
                let fg = f
                    .lex_first_where(|m| m.is_disjoint(g))
                    .expect("a set smaller than τ misses some member");
                fg.iter().map(move |i| g.with(i)).collect::<Vec<_>>()
            })
            .collect();
        next.sort_unstable();
        next.dedup();
        level_sizes.push(next.len());
        level = next;
    }
    let cover_family = SetFamily::new(Universe::new(n, tau)?, level)?;
    let size_bound = BigUint::from(tau) * BigUint::from(k).pow(tau as u32 - 1);
    if !set_covers(&cover_family, f) || BigUint::from(cover_family.len()) > size_bound {
        return Err(Error::Hypothesis("set-cover invariants violated".into()));
    }
    Ok(SetCoverResult {
        tau,
        piercing_set: cn.witness,
        cover_family,
        size_bound,
        level_sizes,
    })
}

/// Which branch of the split applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitCase {
    /// `τ^2 >= k`: the family cross-intersects itself.
    A,
    /// Links are cheap to pierce: at most `k` edges set-cover the family.
    B,
    /// One link has `τ(G_i) τ > k`; the family splits along `a_i`.
    C,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitResult {
    pub case: SplitCase,
    pub tau: usize,
    pub piercing_set: ElementSet,
    /// `τ(G_i)` for each piercing element, in increasing element order.
    pub link_taus: Vec<usize>,
    pub g_prime: SetFamily,
    pub g_dprime: SetFamily,
    pub edge_cover: Vec<(usize, usize)>,
    pub g_cross: Option<SetFamily>,
    pub t: Option<usize>,
    pub cross_tau: Option<usize>,
}

impl SplitResult {
    /// Re-checks every postcondition exhaustively.
    pub fn verify(&self, g: &SetFamily) -> bool {
        let k = g.uniform().unwrap_or(0);
        let union_ok = self.g_prime.len() + self.g_dprime.len() == g.len()
            && self.g_prime.iter().all(|m| g.contains(m) && !self.g_dprime.contains(m))
            && self.g_dprime.iter().all(|m| g.contains(m));
        let edges_ok = self.edge_cover.len() <= k
            && self.g_prime.iter().all(|m| {
                self.edge_cover.iter().any(|&(u, v)| m.contains(u) && m.contains(v))
            });
        let edges_ok = edges_ok || self.case != SplitCase::B;
        let cross_ok = match (&self.g_cross, self.cross_tau) {
            (Some(x), Some(ct)) => {
                ct * ct >= k && self.g_dprime.is_cross_intersecting(x).unwrap_or(false)
            }
            (None, None) => self.g_dprime.is_empty(),
            _ => false,
        };
        union_ok && edges_ok && cross_ok
    }
}

/// Splits an intersecting k-uniform family with `τ >= 2` into `G'`, set-covered
/// by at most `k` edges, and `G''`, which cross-intersects a family of `t`-sets
/// (`t ∈ {k-1, k}`) with cover number at least `√k`.
pub fn split_family(g: &SetFamily) -> Result<SplitResult> {
    let k = uniform_k(g)?;
    require_intersecting(g)?;
    let cn = exact_tau(g, k)?;
    let tau = cn.tau;
    if tau < 2 {
        return Err(Error::Hypothesis(format!(
            "split needs τ >= 2, family has τ = {tau}"
        )));
    }
    let empty = SetFamily::new(g.universe(), Vec::new())?;
    let result = if tau * tau >= k {
        SplitResult {
            case: SplitCase::A,
            tau,
            piercing_set: cn.witness,
            link_taus: Vec::new(),
            g_prime: empty,
            g_dprime: g.clone(),
            edge_cover: Vec::new(),
            g_cross: Some(g.clone()),
            t: Some(k),
            cross_tau: Some(tau),
        }
    } else {
        let piercing: Vec<usize> = cn.witness.to_vec();
        let links: Vec<(SetFamily, CoverNumber)> = piercing
            .iter()
            .map(|&a| {
                let l = g.link(a)?;
                let c = exact_tau(&l, k)?;
                Ok((l, c))
            })
            .collect::<Result<_>>()?;
        let link_taus: Vec<usize> = links.iter().map(|(_, c)| c.tau).collect();
        let s: usize = link_taus.iter().sum();
        if s <= k {
            let mut edge_cover: Vec<(usize, usize)> = piercing
                .iter()
                .zip(&links)
                .flat_map(|(&a, (_, c))| c.witness.iter().map(move |x| (a.min(x), a.max(x))))
                .collect();
            edge_cover.sort_unstable();
            edge_cover.dedup();
            SplitResult {
                case: SplitCase::B,
                tau,
                piercing_set: cn.witness,
                link_taus,
                g_prime: g.clone(),
                g_dprime: empty,
                edge_cover,
                g_cross: None,
                t: None,
                cross_tau: None,
            }
        } else {
            let i = link_taus
                .iter()
                .position(|&ti| ti * tau > k)
                .expect("S > k forces some τ(G_i) > k / τ");
            let a = piercing[i];
            let g_prime = g.star_part(a);
            let g_dprime = g.minus(&g_prime);
            SplitResult {
                case: SplitCase::C,
                tau,
                piercing_set: cn.witness,
                g_prime,
                g_dprime,
                edge_cover: Vec::new(),
                g_cross: Some(links[i].0.clone()),
                t: Some(k - 1),
                cross_tau: Some(link_taus[i]),
                link_taus,
            }
        }
    };
    if !result.verify(g) {
        return Err(Error::Hypothesis("split postconditions violated".into()));
    }
    Ok(result)
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitAll {
    pub splits: Vec<SplitResult>,
    /// Union of all edge covers on `[n]`.
    pub graph: SimpleGraph,
    pub edge_bound: usize,
}

/// Splits every color of a cover and collects the edge covers into one graph.
pub fn split_all(cover: &LabeledCover) -> Result<SplitAll> {
    let u = cover.universe();
    let splits = cover
        .colors()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            split_family(&c.materialize()).map_err(|e| Error::Hypothesis(format!("color {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut graph = SimpleGraph::empty(u.n)?;
    for s in &splits {
        for &(a, b) in &s.edge_cover {
            if !graph.has_edge(a, b) {
                graph.add_edge(a, b)?;
            }
        }
    }
    let edge_bound = u.k * cover.len();
    if graph.edge_count() > edge_bound {
        return Err(Error::Hypothesis(format!(
            "{} edges exceed k * colors = {edge_bound}",
            graph.edge_count()
        )));
    }
    Ok(SplitAll {
        splits,
        graph,
        edge_bound,
    })
}

/// One `(A, B)` pair and its counts.
#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub a: ElementSet,
    pub b: ElementSet,
    /// `|F(A, B)|`.
    pub f_count: usize,
    /// `|I(A, B)|`.
    #[serde(serialize_with = "ser_u128")]
    pub i_count: u128,
    /// The fixed member `F_A` of the cross family, when the pair is expanded.
    pub witness: Option<ElementSet>,
    /// `|I(A, B ∪ F_A)|`.
    #[serde(serialize_with = "ser_opt_u128")]
    pub remainder: Option<u128>,
    /// `Σ_j |I(A ∪ {f_j}, B ∪ {f_1..f_j})|` over non-vacuous children.
    #[serde(serialize_with = "ser_opt_u128")]
    pub children_sum: Option<u128>,
    /// `|I(A,B)| = remainder + children_sum`.
    pub identity_holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionLevel {
    pub level: usize,
    /// Nominal pair count `t^ℓ`.
    #[serde(serialize_with = "ser_u128")]
    pub nominal_pairs: u128,
    pub pairs: Vec<PairRecord>,
    /// `Σ |F(A_i, B_i)|`.
    pub f_total: usize,
    pub f_identity_holds: bool,
    /// `|I_ℓ|`.
    #[serde(serialize_with = "ser_u128")]
    pub i_total: u128,
    pub expanded: bool,
    /// Children `(A ∪ {f_j}, ...)` dropped because `f_j ∈ B`; such pairs
    /// restrict to no member of `F(A, B)` or `I(A, B)`.
    pub vacuous_children: usize,
    /// Every pair satisfies the count identity (vacuously true when not expanded).
    pub identity_holds: bool,
    /// Minimum over pairs of `remainder / children_sum`; `None` when the level
    /// is not expanded or every denominator is zero (the ratio is infinite).
    #[serde(serialize_with = "ser_opt_rational")]
    pub c_measured: Option<BigRational>,
    /// `k^(-1/3)`, the constant the asymptotic argument guarantees.
    pub c_analytic: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub cross_tau: usize,
    pub f_size: usize,
    pub levels: Vec<DecompositionLevel>,
    /// `|I_ℓ| >= |I_{ℓ+1}|` for all levels.
    pub monotone: bool,
    /// `|I_ℓ| >= (1 + c_ℓ) |I_{ℓ+1}|` for all expanded levels.
    pub ratio_chain_holds: bool,
    /// `|I_0| >= |I_L| · Π (1 + c_ℓ)`.
    pub product_holds: bool,
    #[serde(serialize_with = "ser_rational")]
    pub product_rhs: BigRational,
}

impl Decomposition {
    pub fn all_hold(&self) -> bool {
        self.monotone
            && self.ratio_chain_holds
            && self.product_holds
            && self
                .levels
                .iter()
                .all(|l| l.f_identity_holds && l.identity_holds)
    }
}

struct Expansion {
    record: PairRecord,
    children: Vec<(ElementSet, ElementSet)>,
    vacuous: usize,
}

fn f_count(f: &SetFamily, a: &ElementSet, b: &ElementSet) -> usize {
    f.iter().filter(|m| m.intersection(b) == *a).count()
}

fn i_count(g: &SimpleGraph, k: usize, a: &ElementSet, b: &ElementSet) -> u128 {
    g.count_independent(k, a, &b.difference(a))
}

/// Builds the pair families `H_0, ..., H_L` for `F ⊆ I(G)` cross-intersecting
/// `G^×`, verifying the disjoint decomposition of `F` and the count identity
/// for `I(A, B)` at every pair, and measuring the ratios `c_ℓ`.
pub fn thmkey_decompose(
    g: &SimpleGraph,
    f: &SetFamily,
    g_cross: &SetFamily,
    max_level: usize,
    pair_cap: usize,
) -> Result<Decomposition> {
    let n = g.n();
    let k = f.universe().k;
    if f.n() != n || g_cross.n() != n {
        return Err(Error::IncompatibleUniverses {
            left: n,
            right: if f.n() != n { f.n() } else { g_cross.n() },
        });
    }
    if let Some(bad) = f.iter().find(|m| m.len() != k || !g.is_independent(m)) {
        return Err(Error::NotIndependent(*bad));
    }
    let t = g_cross
        .uniform()
        .ok_or_else(|| invalid("cross family must be non-empty and uniform"))?;
    if g_cross.is_empty() {
        return Err(invalid("cross family must be non-empty"));
    }
    if let Some((a, b)) = f.cross_disjoint_pair(g_cross)? {
        return Err(Error::Hypothesis(format!(
            "family does not cross-intersect the cross family: {a} and {b} are disjoint"
        )));
    }
    let cross_tau = exact_tau(g_cross, t)?.tau;
    if max_level > cross_tau {
        return Err(invalid(format!(
            "max level {max_level} exceeds τ of the cross family ({cross_tau})"
        )));
    }
    let c_analytic = (k as f64).powf(-1.0 / 3.0);
    let empty = ElementSet::empty(n);
    let mut current = vec![(empty, empty)];
    let mut levels = Vec::new();
    for level in 0..=max_level {
        let expand = level < max_level;
        let expansions: Vec<Expansion> = current
            .par_iter()
            .map(|(a, b)| {
                let mut record = PairRecord {
                    a: *a,
                    b: *b,
                    f_count: f_count(f, a, b),
                    i_count: i_count(g, k, a, b),
                    witness: None,
                    remainder: None,
                    children_sum: None,
                    identity_holds: None,
                };
                let mut children = Vec::new();
                let mut vacuous = 0;
                if expand {
                    let fa = g_cross
                        .lex_first_where(|m| m.is_disjoint(a))
                        .expect("|A| < τ leaves a disjoint member");
                    let mut prefix = *b;
                    let mut sum = 0u128;
                    for fj in fa.iter() {
                        prefix = prefix.with(fj);
                        if b.contains(fj) {
                            vacuous += 1;
                            continue;
                        }
                        let child = (a.with(fj), prefix);
                        sum += i_count(g, k, &child.0, &child.1);
                        children.push(child);
                    }
                    let rem = i_count(g, k, a, &b.union(&fa));
                    record.witness = Some(fa);
                    record.remainder = Some(rem);
                    record.children_sum = Some(sum);
                    record.identity_holds = Some(rem + sum == record.i_count);
                }
                Expansion {
                    record,
                    children,
                    vacuous,
                }
            })
            .collect();
        let pairs: Vec<PairRecord> = expansions.iter().map(|e| e.record.clone()).collect();
        let f_total = pairs.iter().map(|p| p.f_count).sum();
        let i_total = pairs.iter().map(|p| p.i_count).sum();
        let c_measured = pairs
            .iter()
            .filter_map(|p| match (p.remainder, p.children_sum) {
                (Some(r), Some(s)) if s > 0 => {
                    Some(BigRational::new(r.into(), s.into()))
                }
                _ => None,
            })
            .min();
        let next: Vec<(ElementSet, ElementSet)> =
            expansions.iter().flat_map(|e| e.children.iter().copied()).collect();
        levels.push(DecompositionLevel {
            level,
            nominal_pairs: (t as u128).pow(level as u32),
            f_total,
            f_identity_holds: f_total == f.len(),
            i_total,
            expanded: expand,
            vacuous_children: expansions.iter().map(|e| e.vacuous).sum(),
            identity_holds: pairs.iter().all(|p| p.identity_holds != Some(false)),
            c_measured,
            c_analytic,
            pairs,
        });
        if expand && next.len() > pair_cap {
            return Err(Error::Inconclusive(format!(
                "level {} would hold {} pairs, above the cap {pair_cap}",
                level + 1,
                next.len()
            )));
        }
        current = next;
    }
    let monotone = levels.windows(2).all(|w| w[0].i_total >= w[1].i_total);
    let one = BigRational::one();
    let ratio_chain_holds = levels.windows(2).all(|w| {
        let next = BigRational::from_integer(w[1].i_total.into());
        let factor = match &w[0].c_measured {
            Some(c) => &one + c,
            None => {
                return w[1].i_total == 0;
            }
        };
        BigRational::from_integer(w[0].i_total.into()) >= factor * next
    });
    let last = levels.last().expect("level 0 always exists");
    let expanded = &levels[..levels.len() - 1];
    let infinite = expanded.iter().any(|l| l.c_measured.is_none());
    // an infinite ratio means the next level, and hence the last, is empty
    let product_rhs = if infinite {
        BigRational::zero()
    } else {
        expanded.iter().fold(
            BigRational::from_integer(last.i_total.into()),
            |acc, l| acc * (&one + l.c_measured.as_ref().expect("finite")),
        )
    };
    let product_holds = (!infinite || last.i_total == 0)
        && BigRational::from_integer(levels[0].i_total.into()) >= product_rhs;
    Ok(Decomposition {
        n,
        k,
        t,
        cross_tau,
        f_size: f.len(),
        levels,
        monotone,
        ratio_chain_holds,
        product_holds,
        product_rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RhoClaimCheck {
    pub n: u64,
    pub k: u64,
    pub ell: u64,
    pub i: u64,
    /// `n k / (n - k(ℓ+1))^2`, the bound on the edge density `ρ`.
    #[serde(serialize_with = "ser_rational")]
    pub rho_bound: BigRational,
    /// `(k - ℓ - i - 2) ρ_bound`.
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    /// `k^2 / n`.
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    pub holds: bool,
    /// `n >= 2k^2`, under which the claim is guaranteed.
    pub side_condition: bool,
}

/// Evaluates `(k - ℓ - i - 2) ρ <= k^2 / n` with `ρ` replaced by its upper
/// bound `nk / (n - k(ℓ+1))^2`, in exact arithmetic.
pub fn rho_claim_check(n: u64, k: u64, ell: u64, i: u64) -> Result<RhoClaimCheck> {
    if n == 0 || n <= k * (ell + 1) {
        return Err(invalid(format!(
            "need n > k(ℓ+1) = {}",
            k * (ell + 1)
        )));
    }
    let r = |x: i128| BigRational::from_integer(x.into());
    let (nn, kk) = (n as i128, k as i128);
    let d = nn - kk * (ell as i128 + 1);
    let rho_bound = r(nn * kk) / r(d * d);
    let factor = kk - ell as i128 - i as i128 - 2;
    let lhs = r(factor) * &rho_bound;
    let rhs = r(kk * kk) / r(nn);
    Ok(RhoClaimCheck {
        n,
        k,
        ell,
        i,
        holds: lhs <= rhs,
        rho_bound,
        lhs,
        rhs,
        side_condition: n >= 2 * k * k,
    })
}
