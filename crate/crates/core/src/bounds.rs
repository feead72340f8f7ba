//! Exact certification of the closed-form bounds around intersecting
//! families: Erdős–Ko–Rado, Hilton–Milner, the cubic and quadratic upper
//! bounds on `n(k)`, and Spencer's independence inequality (exact form and
//! the randomized deletion experiment behind it).
//!
//! Every comparison is carried out in big integers or big rationals. The only
//! floating-point quantity is `ε = 3 / ln k`, compared with [`EPSILON_TOLERANCE`].

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::report::{ser_bigint, ser_biguint, ser_rational};
use crate::sets::{ElementSet, KSets, SetFamily, Universe};

pub const EPSILON_TOLERANCE: f64 = 1e-9;

/// Exact `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn require_ekr_regime(n: u64, k: u64) -> Result<()> {
    if n < 2 * k {
        return Err(invalid("EKR regime requires n >= 2k"));
    }
    Ok(())
}

/// Largest intersecting family in `C([n], k)`: `C(n-1, k-1)`.
pub fn ekr_bound(n: u64, k: u64) -> Result<BigUint> {
    require_ekr_regime(n, k)?;
    Ok(binomial(n as i64 - 1, k as i64 - 1))
}

/// Largest non-trivial intersecting family: `C(n-1,k-1) - C(n-k-1,k-1) + 1`.
pub fn hm_bound(n: u64, k: u64) -> Result<BigUint> {
    require_ekr_regime(n, k)?;
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + BigUint::one())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicBoundCheck {
    pub k: u64,
    pub n: u64,
    /// `n(n-1) / (k^2 (k-1))`, the colors forced by the Hilton–Milner relaxation.
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    /// `n - 2k + 2`
    #[serde(serialize_with = "ser_bigint")]
    pub rhs: BigInt,
    pub holds: bool,
    #[serde(serialize_with = "ser_biguint")]
    pub hm_value: BigUint,
    /// `k · C(n-2, k-2)`
    #[serde(serialize_with = "ser_biguint")]
    pub hm_relaxation: BigUint,
    pub hm_relaxation_holds: bool,
    /// `C(n,k) / (k · C(n-2,k-2))` equals `lhs`.
    pub ratio_identity_holds: bool,
}

/// At `n = k^3`, covering `C([n],k)` by non-trivial intersecting families needs
/// more than `n - 2k + 2` colors.
pub fn prop12_check(k: u64) -> Result<CubicBoundCheck> {
    if k < 3 {
        return Err(invalid("cubic bound is stated for k >= 3"));
    }
    let n = k * k * k;
    let lhs = BigRational::new(
        BigInt::from(n) * BigInt::from(n - 1),
        BigInt::from(k * k) * BigInt::from(k - 1),
    );
    let rhs = BigInt::from(n) - BigInt::from(2 * k) + BigInt::from(2);
    let holds = lhs > int(rhs.clone());
    let hm_value = hm_bound(n, k)?;
    let hm_relaxation = BigUint::from(k) * binomial(n as i64 - 2, k as i64 - 2);
    let ratio = BigRational::new(
        BigInt::from(binomial(n as i64, k as i64)),
        BigInt::from(hm_relaxation.clone()),
    );
    Ok(CubicBoundCheck {
        k,
        n,
        ratio_identity_holds: ratio == lhs,
        hm_relaxation_holds: hm_value <= hm_relaxation,
        lhs,
        rhs,
        holds,
        hm_value,
        hm_relaxation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticThreshold {
    /// `n^2 / (8 k^2)`
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    /// `m > bound`
    pub holds: bool,
}

/// Any covering of `C([n],k)` by `m` non-trivial intersecting families has
/// `m > n^2 / (8k^2)`; reports whether a given `m` clears that bar.
pub fn thm31_threshold(n: u64, k: u64, m: u64) -> Result<QuadraticThreshold> {
    if n == 0 || k == 0 {
        return Err(invalid("n and k must be positive"));
    }
    let bound = BigRational::new(
        BigInt::from(n) * BigInt::from(n),
        BigInt::from(8u64) * BigInt::from(k) * BigInt::from(k),
    );
    let holds = int(m) > bound;
    Ok(QuadraticThreshold { bound, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticCorollary {
    #[serde(serialize_with = "ser_bigint")]
    pub colors: BigInt,
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    /// `n - 2k + 2 <= n^2/(8k^2)`: no covering with that many colors can avoid stars.
    pub fires: bool,
}

pub fn thm31_corollary(n: u64, k: u64) -> Result<QuadraticCorollary> {
    let colors = BigInt::from(n) - BigInt::from(2 * k) + BigInt::from(2);
    let t = thm31_threshold(n, k, 1)?;
    let fires = int(colors.clone()) <= t.bound;
    Ok(QuadraticCorollary {
        colors,
        bound: t.bound,
        fires,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Regime {
    pub epsilon: f64,
    pub threshold: f64,
    pub in_regime: bool,
}

/// `ε = 3 / ln k` and whether `n >= (2 + ε) k^2`.
pub fn thm13_regime(n: u64, k: u64) -> Result<Regime> {
    if k < 2 {
        return Err(invalid("regime needs k >= 2"));
    }
    let epsilon = 3.0 / (k as f64).ln();
    let threshold = (2.0 + epsilon) * (k * k) as f64;
    let in_regime = n > 0 && n as f64 >= threshold - EPSILON_TOLERANCE;
    Ok(Regime {
        epsilon,
        threshold,
        in_regime,
    })
}

/// A probability `p` with `0 < p < 1`, kept as an exact rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probability(BigRational);

impl Probability {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(invalid("zero denominator"));
        }
        Self::from_rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(p: BigRational) -> Result<Self> {
        if !p.is_positive() || p >= BigRational::one() {
            return Err(invalid(format!(
                "p = {} must lie in (0, 1)",
                crate::report::rational_string(&p)
            )));
        }
        Ok(Self(p))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("finite")
    }
}

impl FromStr for Probability {
    type Err = Error;

    /// Accepts `a/b` or a terminating decimal such as `0.3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let a: i64 = a.trim().parse().map_err(|_| invalid(format!("bad numerator in {s}")))?;
            let b: i64 = b.trim().parse().map_err(|_| invalid(format!("bad denominator in {s}")))?;
            return Self::new(a, b);
        }
        let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
        let digits = format!("{whole}{frac}");
        let numer: BigInt = digits.parse().map_err(|_| invalid(format!("bad probability {s}")))?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        Self::from_rational(BigRational::new(numer, denom))
    }
}

/// Per-cardinality member counts `|H^(i)|`, `i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UniformHypergraphProfile {
    pub counts: BTreeMap<usize, u64>,
}

impl UniformHypergraphProfile {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (i, c) in counts {
            if i < 2 {
                return Err(invalid("profile counts start at cardinality 2"));
            }
            *map.entry(i).or_insert(0) += c;
        }
        Ok(Self { counts: map })
    }

    pub fn of_family(h: &SetFamily) -> Result<Self> {
        Self::from_counts(h.iter().map(|m| (m.len(), 1)))
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpencerCheck {
    /// `Σ |H^(i)| p^i`
    #[serde(serialize_with = "ser_rational")]
    pub lhs: BigRational,
    /// `n p - b`
    #[serde(serialize_with = "ser_rational")]
    pub rhs: BigRational,
    pub holds: bool,
}

/// Evaluates `Σ_i |H^(i)| p^i > np - b` exactly. The caller is responsible for
/// the hypothesis that `H` has no independent set of size `b`
/// (see [`independence_number_ok`]).
pub fn spencer_check(
    profile: &UniformHypergraphProfile,
    n: u64,
    b: u64,
    p: &Probability,
) -> SpencerCheck {
    let p = p.value();
    let lhs = profile
        .counts
        .iter()
        .fold(BigRational::zero(), |acc, (&i, &c)| {
            acc + int(c) * num_traits::pow(p.clone(), i)
        });
    let rhs = int(n) * p - int(b);
    let holds = lhs > rhs;
    SpencerCheck { lhs, rhs, holds }
}

/// Confirms that every b-subset of `[n]` contains a member of `h`, i.e. that
/// `h` has no independent set of size `b`. Returns an independent b-set otherwise.
pub fn independence_number_ok(h: &SetFamily, b: usize) -> Result<()> {
    let n = h.n();
    if b > n {
        return Ok(());
    }
    let members: Vec<u128> = h.iter().map(|m| m.bits()).collect();
    let u = Universe::new(n, b)?;
    let witness = KSets::new(u)
        .par_bridge()
        .filter(|s| !members.iter().any(|&m| m & !s.bits() == 0))
        .min();
    match witness {
        Some(w) => Err(Error::IndependentSet { size: b, witness: w }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpencerExperiment {
    pub trials: u64,
    pub seed: u64,
    pub mean_a: f64,
    pub mean_hits: f64,
    pub expected_a: f64,
    pub expected_hits: f64,
    /// standard deviation of a single `|A|` draw, `sqrt(n p (1-p))`
    pub sd_a: f64,
    /// sample standard deviation of `|H[A]|`
    pub sd_hits: f64,
    /// fraction of trials with `|A| - |H[A]| < b`
    pub bound_ok: f64,
    /// fraction of trials whose deletion result `A'` was independent
    pub deletion_independent: f64,
}

impl SpencerExperiment {
    /// `|mean_A - np| <= 3 sd_A / sqrt(trials)`
    pub fn mean_a_within_3_sigma(&self) -> bool {
        (self.mean_a - self.expected_a).abs() <= 3.0 * self.sd_a / (self.trials as f64).sqrt()
    }

    pub fn mean_hits_within_3_sigma(&self) -> bool {
        (self.mean_hits - self.expected_hits).abs()
            <= 3.0 * self.sd_hits / (self.trials as f64).sqrt()
    }
}

/// Monte-Carlo run of the deletion argument: draw `A` with each element kept
/// independently with probability `p`, delete the smallest element of every
/// member of `H` inside `A`, and record `|A|`, `|H[A]|` and whether
/// `|A| - |H[A]| < b`. Trial `t` uses the seed `seed ^ t`.
pub fn spencer_experiment(
    h: &SetFamily,
    b: usize,
    p: &Probability,
    trials: u64,
    seed: u64,
) -> Result<SpencerExperiment> {
    if trials == 0 {
        return Err(invalid("at least one trial is required"));
    }
    independence_number_ok(h, b)?;
    let n = h.n();
    let pf = p.to_f64();
    let members: Vec<ElementSet> = h.members().to_vec();
    let rows: Vec<(u64, u64, bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ t);
            let mut bits = 0u128;
            for i in 0..n {
                if rng.gen_bool(pf) {
                    bits |= 1u128 << i;
                }
            }
            let a = ElementSet::from_bits(n, bits).expect("in range");
            let mut reduced = a;
            let mut hits = 0u64;
            for m in &members {
                if m.is_subset(&a) {
                    hits += 1;
                    reduced = reduced.without(m.min_element().expect("non-empty member"));
                }
            }
            let independent = members.iter().all(|m| !m.is_subset(&reduced));
            let ok = (a.len() as i64 - hits as i64) < b as i64;
            (a.len() as u64, hits, ok, independent)
        })
        .collect();
    let tf = trials as f64;
    let sum_a: u64 = rows.iter().map(|r| r.0).sum();
    let sum_h: u64 = rows.iter().map(|r| r.1).sum();
    let sum_h2: f64 = rows.iter().map(|r| (r.1 as f64).powi(2)).sum();
    let ok = rows.iter().filter(|r| r.2).count() as f64;
    let indep = rows.iter().filter(|r| r.3).count() as f64;
    let mean_hits = sum_h as f64 / tf;
    let var_hits = if trials > 1 {
        (sum_h2 - tf * mean_hits * mean_hits) / (tf - 1.0)
    } else {
        0.0
    };
    let expected_hits: f64 = h.iter().map(|m| pf.powi(m.len() as i32)).sum();
    Ok(SpencerExperiment {
        trials,
        seed,
        mean_a: sum_a as f64 / tf,
        mean_hits,
        expected_a: n as f64 * pf,
        expected_hits,
        sd_a: (n as f64 * pf * (1.0 - pf)).sqrt(),
        sd_hits: var_hits.max(0.0).sqrt(),
        bound_ok: ok / tf,
        deletion_independent: indep / tf,
    })
}
