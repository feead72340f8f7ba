//! Command-line front end. Every subcommand prints a JSON [`RunReport`] to
//! standard output (or `--report PATH`) and exits with
//! 0 when all checks pass, 1 when a check fails, 2 on usage or I/O errors and
//! 3 when a search or computation ran out of budget.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{
    ekr_bound, hm_bound, independence_number_ok, prop12_check, spencer_check, spencer_experiment,
    thm13_regime, thm31_corollary, thm31_threshold, Probability, UniformHypergraphProfile,
};
use crate::construction::{
    build_cover, cover_to_partition, verify_cover, PartitionStrategy, VerifyMode, VerifyOptions,
    DEFAULT_EXHAUSTIVE_BUDGET, DEFAULT_SAMPLE,
};
use crate::decompose::{
    rho_claim_check, set_cover_tau, split_all, split_family, thmkey_decompose, Decomposition,
    DEFAULT_MAX_LEVEL, DEFAULT_PAIR_CAP,
};
use crate::error::{Error, Result};
use crate::io;
use crate::report::{rational_string, RunReport};
use crate::search::{
    export_sat, n_of_k_oracle, search_cover, SearchInstance, SearchMode, SearchStatus,
};
use crate::sets::{CoverOutcome, LabeledCover, SetFamily};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kneser", version, about = "Coverings of k-subsets by non-trivial intersecting families")]
pub struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Seed for every randomized step.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Omit wall-clock timing so reports are reproducible byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads (default: KNESER_THREADS, else all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the block covering for a given k.
    Construct(ConstructArgs),
    /// Verify a cover file or the built-in construction.
    Verify(VerifyArgs),
    /// Cover number, centers and intersection test of a family file.
    Tau(TauArgs),
    /// Exact evaluations of the counting bounds.
    Bounds(BoundsArgs),
    /// Set-covers, splits and pair decompositions.
    Decompose(DecomposeArgs),
    /// Exhaustive search and CNF export at tiny parameters.
    Search(SearchArgs),
    /// Validate an existing report or print the schema version.
    Report(ReportArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    k: usize,
    /// Cover text output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Convert the covering into a partition first.
    #[arg(long)]
    partition: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::PinWitnesses)]
    strategy: StrategyArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    PinWitnesses,
    LowestIndex,
}

impl From<StrategyArg> for PartitionStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::PinWitnesses => PartitionStrategy::PinWitnesses,
            StrategyArg::LowestIndex => PartitionStrategy::LowestIndex,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Covering,
    Partition,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Cover text file.
    #[arg(long = "in", conflicts_with = "k")]
    input: Option<PathBuf>,
    /// Verify the block construction for this k without a file.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Covering)]
    mode: ModeArg,
    /// Largest C(n,k) checked exhaustively.
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_BUDGET)]
    budget: u128,
    /// Sample size once the budget is exceeded.
    #[arg(long, default_value_t = DEFAULT_SAMPLE)]
    sample: u64,
    /// Sample even when exhaustive checking is affordable.
    #[arg(long)]
    force_sample: bool,
}

#[derive(Args, Debug)]
struct TauArgs {
    /// Family text file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Give up once τ exceeds this value.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum BoundCheck {
    Ekr,
    Hm,
    Prop12,
    Thm31,
    Spencer,
    Regime,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    check: BoundCheck,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    /// Upper end of a k range (prop12).
    #[arg(long)]
    k_max: Option<u64>,
    /// Number of colors (thm31).
    #[arg(long)]
    m: Option<u64>,
    /// Forbidden independent-set size (spencer).
    #[arg(long)]
    b: Option<u64>,
    /// Probability as `a/b` or a decimal (spencer).
    #[arg(long)]
    p: Option<String>,
    /// Hypergraph profile `i:count,...` (spencer).
    #[arg(long)]
    profile: Option<String>,
    /// Hypergraph as a family file; enables the hypothesis check and the experiment (spencer).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Monte-Carlo trials (spencer, requires --in and --seed).
    #[arg(long, default_value_t = 0)]
    trials: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Lemma {
    SetCover,
    Split,
    Thmkey,
    Rho,
}

fn parse_lemma(s: &str) -> std::result::Result<Lemma, String> {
    match s {
        "34" | "set-cover" => Ok(Lemma::SetCover),
        "41" | "split" => Ok(Lemma::Split),
        "thmkey" | "pairs" => Ok(Lemma::Thmkey),
        "rho" => Ok(Lemma::Rho),
        _ => Err(format!("unknown decomposition {s:?} (34|41|thmkey|rho)")),
    }
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    /// `34` (set-cover by τ-sets), `41` (split), `thmkey` (pair decomposition) or `rho`.
    #[arg(long, value_parser = parse_lemma)]
    lemma: Lemma,
    /// Family text file (34, 41, and the decomposed family for thmkey).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Cover text file: split every color (41).
    #[arg(long)]
    cover: Option<PathBuf>,
    /// Graph text file (thmkey).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Cross family text file (thmkey).
    #[arg(long)]
    cross: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_LEVEL)]
    levels: usize,
    #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
    pair_cap: usize,
    /// Per-level table as CSV (thmkey).
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long)]
    i: Option<u64>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: usize,
    /// Number of colors (default n - 2k + 2).
    #[arg(long)]
    colors: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Covering)]
    mode: ModeArg,
    /// Write the DIMACS CNF of the instance here.
    #[arg(long)]
    sat_out: Option<PathBuf>,
    /// Write a found certificate here in cover text format.
    #[arg(long)]
    cert_out: Option<PathBuf>,
    #[arg(long, default_value_t = crate::search::DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    #[arg(long, default_value_t = crate::search::DEFAULT_TIME_BUDGET.as_secs())]
    budget_secs: u64,
    /// Disable first-use color ordering (partition mode).
    #[arg(long)]
    no_symmetry: bool,
    /// Compute n(k) instead of a single instance (k = 2 only).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// Report JSON to validate.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

/// Outcome of a subcommand before it is written out.
struct Run {
    report: RunReport,
    exit: i32,
}

impl Run {
    fn from_checks(report: RunReport) -> Self {
        let exit = if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
        Run { report, exit }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_USAGE,
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required")))
}

fn need_seed(seed: Option<u64>, what: &str) -> Result<u64> {
    seed.ok_or_else(|| Error::InvalidParameter(format!("{what} is randomized: pass --seed")))
}

fn read_family(path: &Path) -> Result<SetFamily> {
    io::parse_family(&io::read_text(path)?)
}

fn read_cover(path: &Path) -> Result<LabeledCover> {
    io::parse_cover(&io::read_text(path)?)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Parses `2:6,3:1` into profile counts.
fn parse_profile(s: &str) -> Result<UniformHypergraphProfile> {
    let pairs = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (i, c) = p
                .split_once(':')
                .ok_or_else(|| Error::InvalidParameter(format!("profile entry {p:?} is not i:count")))?;
            let i: usize = i.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad size {i:?}")))?;
            let c: u64 = c.trim().parse().map_err(|_| Error::InvalidParameter(format!("bad count {c:?}")))?;
            Ok((i, c))
        })
        .collect::<Result<Vec<_>>>()?;
    UniformHypergraphProfile::from_counts(pairs)
}

fn run_construct(a: &ConstructArgs, _seed: Option<u64>) -> Result<Run> {
    let mut r = RunReport::new("construct");
    r.param("k", a.k).param("partition", a.partition);
    let cover = build_cover(a.k)?;
    let u = cover.universe();
    let (cover, flags) = if a.partition {
        let (p, rep) = cover_to_partition(&cover, a.strategy.into())?;
        r.param("strategy", rep.strategy);
        r.check("partition-keeps-colors-non-trivial", "construction.partition", rep.clean(), (!rep.clean()).then(|| to_value(&rep.flags)));
        (p, Some(rep))
    } else {
        (cover, None)
    };
    if let Some(out) = &a.out {
        io::write_text(out, &io::cover_to_string(&cover))?;
    }
    let sizes: Vec<String> = cover.colors().iter().map(|c| c.size().to_string()).collect();
    r.check(
        "color-count-equals-chromatic-number",
        "construction.count",
        cover.len() as i64 == u.kneser_colors(),
        None,
    );
    r.values = json!({
        "n": u.n,
        "k": u.k,
        "colors": cover.len(),
        "color_sizes": sizes,
        "provenance": cover.provenance(),
        "partition": flags.map(|f| to_value(&f)),
    });
    Ok(Run::from_checks(r))
}

fn run_verify(a: &VerifyArgs, seed: Option<u64>) -> Result<Run> {
    let mut r = RunReport::new("verify");
    let cover = match (&a.input, a.k) {
        (Some(p), _) => {
            r.param("in", p.display().to_string());
            read_cover(p)?
        }
        (None, Some(k)) => {
            r.param("k", k);
            build_cover(k)?
        }
        (None, None) => return Err(Error::InvalidParameter("pass --in or --k".into())),
    };
    let u = cover.universe();
    let mode = match a.mode {
        ModeArg::Covering => VerifyMode::Covering,
        ModeArg::Partition => VerifyMode::Partition,
    };
    let sampled = a.force_sample || u.num_ksets() > a.budget;
    let seed = if sampled { Some(need_seed(seed, "sampled verification")?) } else { seed };
    r.seed = seed;
    r.param("mode", mode).param("budget", a.budget.to_string()).param("sample", a.sample);
    let opts = VerifyOptions {
        mode,
        exhaustive_budget: a.budget,
        sample: a.sample,
        force_sample: a.force_sample,
        seed: seed.unwrap_or(0),
    };
    let rep = verify_cover(&cover, &opts);
    r.check(
        "coverage",
        "construction.coverage",
        rep.coverage_ok(),
        rep.coverage.witness.map(|w| to_value(&w)),
    );
    let bad_int = rep.colors.iter().find(|c| !c.intersecting);
    r.check(
        "colors-intersecting",
        "definitions.intersecting",
        bad_int.is_none(),
        bad_int.map(|c| json!({"color": c.index, "disjoint_pair": c.disjoint_pair})),
    );
    let bad_tau = rep.colors.iter().find(|c| !c.non_trivial());
    r.check(
        "colors-non-trivial",
        "definitions.non-trivial",
        bad_tau.is_none(),
        bad_tau.map(|c| json!({"color": c.index, "tau": c.tau, "centers": c.centers})),
    );
    r.check("color-count", "construction.count", rep.count_check.holds, None);
    if let Some(p) = &rep.partition {
        r.check("colors-disjoint", "construction.partition", p.disjoint, p.witness.map(|w| to_value(&w)));
    }
    r.values = to_value(&rep);
    // the color count is informative for arbitrary files; only the construction must hit it
    if a.input.is_some() {
        r.checks.retain(|c| c.name != "color-count");
    }
    Ok(Run::from_checks(r))
}

fn run_tau(a: &TauArgs) -> Result<Run> {
    let mut r = RunReport::new("tau");
    r.param("in", a.input.display().to_string());
    if let Some(cap) = a.cap {
        r.param("cap", cap);
    }
    let f = read_family(&a.input)?;
    let outcome = f.cover_number(a.cap);
    let (tau, witness, exit) = match outcome {
        CoverOutcome::Exact(c) => (json!(c.tau), json!(c.witness), EXIT_OK),
        CoverOutcome::ExceedsCap { cap } => (json!(format!(">{cap}")), Value::Null, EXIT_INCONCLUSIVE),
        CoverOutcome::Uncoverable => (Value::Null, Value::Null, EXIT_OK),
    };
    r.values = json!({
        "n": f.n(),
        "members": f.len(),
        "uniform": f.uniform(),
        "tau": tau,
        "witness": witness,
        "centers": f.centers().ok(),
        "intersecting": f.is_intersecting(),
        "disjoint_pair": f.disjoint_pair(),
    });
    Ok(Run { report: r, exit })
}

fn run_bounds(a: &BoundsArgs, seed: Option<u64>) -> Result<Run> {
    let mut r = RunReport::new("bounds");
    r.param("check", format!("{:?}", a.check).to_lowercase());
    match a.check {
        BoundCheck::Ekr | BoundCheck::Hm => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            r.param("n", n).param("k", k);
            let v = if a.check == BoundCheck::Ekr { ekr_bound(n, k)? } else { hm_bound(n, k)? };
            r.values = json!({ "value": v.to_string() });
        }
        BoundCheck::Prop12 => {
            let k = need(a.k, "k")?;
            let k_max = a.k_max.unwrap_or(k);
            r.param("k", k).param("k_max", k_max);
            let mut rows = Vec::new();
            for k in k..=k_max {
                let c = prop12_check(k)?;
                r.check(&format!("cubic-bound-k{k}"), "bounds.cubic", c.holds, None);
                r.check(
                    &format!("hm-relaxation-k{k}"),
                    "bounds.cubic.hm-relaxation",
                    c.hm_relaxation_holds && c.ratio_identity_holds,
                    None,
                );
                rows.push(to_value(&c));
            }
            r.values = if rows.len() == 1 { rows.remove(0) } else { Value::Array(rows) };
        }
        BoundCheck::Thm31 => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            r.param("n", n).param("k", k);
            let cor = thm31_corollary(n, k)?;
            let mut values = json!({ "corollary": to_value(&cor) });
            if let Some(m) = a.m {
                r.param("m", m);
                values["threshold"] = to_value(&thm31_threshold(n, k, m)?);
            }
            r.values = values;
        }
        BoundCheck::Regime => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            r.param("n", n).param("k", k);
            r.values = to_value(&thm13_regime(n, k)?);
        }
        BoundCheck::Spencer => {
            let b = need(a.b, "b")?;
            let p: Probability = need(a.p.as_deref(), "p")?.parse()?;
            r.param("b", b).param("p", rational_string(p.value()));
            let (profile, n, family) = match (&a.input, &a.profile) {
                (Some(path), _) => {
                    let h = read_family(path)?;
                    (UniformHypergraphProfile::of_family(&h)?, h.n() as u64, Some(h))
                }
                (None, Some(s)) => (parse_profile(s)?, need(a.n, "n")?, None),
                (None, None) => return Err(Error::InvalidParameter("pass --in or --profile".into())),
            };
            r.param("n", n);
            let mut values = json!({ "profile": to_value(&profile) });
            if let Some(h) = &family {
                let hyp = independence_number_ok(h, b as usize);
                let witness = match &hyp {
                    Err(Error::IndependentSet { witness, .. }) => Some(to_value(witness)),
                    _ => None,
                };
                values["hypothesis_holds"] = json!(hyp.is_ok());
                if hyp.is_ok() {
                    let c = spencer_check(&profile, n, b, &p);
                    r.check("inequality", "bounds.spencer", c.holds, None);
                    values["check"] = to_value(&c);
                    if a.trials > 0 {
                        let seed = need_seed(seed, "the deletion experiment")?;
                        r.seed = Some(seed);
                        r.param("trials", a.trials);
                        let e = spencer_experiment(h, b as usize, &p, a.trials, seed)?;
                        r.check("per-trial-deletion-bound", "bounds.spencer.deletion", e.bound_ok == 1.0, None);
                        r.check("mean-size-within-3-sigma", "bounds.spencer.expectation", e.mean_a_within_3_sigma(), None);
                        values["experiment"] = to_value(&e);
                    }
                } else {
                    values["independent_set"] = witness.unwrap_or(Value::Null);
                    values["check"] = to_value(&spencer_check(&profile, n, b, &p));
                }
            } else {
                let c = spencer_check(&profile, n, b, &p);
                values["hypothesis_holds"] = Value::Null;
                values["check"] = to_value(&c);
            }
            r.values = values;
        }
    }
    Ok(Run::from_checks(r))
}

fn levels_csv(d: &Decomposition) -> String {
    let mut out = String::from("level,nominal_pairs,pairs,f_total,i_total,c_measured,c_analytic,identity_holds\n");
    for l in &d.levels {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            l.level,
            l.nominal_pairs,
            l.pairs.len(),
            l.f_total,
            l.i_total,
            match (&l.c_measured, l.expanded) {
                (Some(c), _) => rational_string(c),
                (None, true) => "inf".into(),
                (None, false) => String::new(),
            },
            l.c_analytic,
            l.f_identity_holds && l.identity_holds,
        ));
    }
    out
}

fn run_decompose(a: &DecomposeArgs) -> Result<Run> {
    let mut r = RunReport::new("decompose");
    match a.lemma {
        Lemma::SetCover => {
            r.param("lemma", "34");
            let path = need(a.input.as_ref(), "in")?;
            r.param("in", path.display().to_string());
            let f = read_family(path)?;
            let res = set_cover_tau(&f)?;
            r.check("set-covers-input", "decompose.set-cover", true, None);
            r.check(
                "size-within-bound",
                "decompose.set-cover.size",
                num_bigint::BigUint::from(res.cover_family.len()) <= res.size_bound,
                None,
            );
            r.values = to_value(&res);
        }
        Lemma::Split => {
            r.param("lemma", "41");
            if let Some(path) = &a.cover {
                r.param("cover", path.display().to_string());
                let res = split_all(&read_cover(path)?)?;
                r.check("edges-within-k-per-color", "decompose.split.graph", res.graph.edge_count() <= res.edge_bound, None);
                r.values = json!({
                    "cases": res.splits.iter().map(|s| s.case).collect::<Vec<_>>(),
                    "graph": to_value(&res.graph),
                    "edge_bound": res.edge_bound,
                });
            } else {
                let path = need(a.input.as_ref(), "in")?;
                r.param("in", path.display().to_string());
                let g = read_family(path)?;
                let res = split_family(&g)?;
                r.check("postconditions", "decompose.split", res.verify(&g), None);
                r.values = to_value(&res);
            }
        }
        Lemma::Thmkey => {
            r.param("lemma", "thmkey");
            let gp = need(a.graph.as_ref(), "graph")?;
            let fp = need(a.input.as_ref(), "in")?;
            let cp = need(a.cross.as_ref(), "cross")?;
            r.param("graph", gp.display().to_string())
                .param("in", fp.display().to_string())
                .param("cross", cp.display().to_string())
                .param("levels", a.levels)
                .param("pair_cap", a.pair_cap);
            let g = io::parse_graph(&io::read_text(gp)?)?;
            let d = thmkey_decompose(&g, &read_family(fp)?, &read_family(cp)?, a.levels, a.pair_cap)?;
            r.check("family-decomposes-disjointly", "decompose.pairs.disjoint", d.levels.iter().all(|l| l.f_identity_holds), None);
            r.check("independent-set-identity", "decompose.pairs.identity", d.levels.iter().all(|l| l.identity_holds), None);
            r.check("independent-counts-non-increasing", "decompose.pairs.monotone", d.monotone, None);
            r.check("product-chain", "decompose.pairs.product", d.ratio_chain_holds && d.product_holds, None);
            if let Some(csv) = &a.csv {
                io::write_text(csv, &levels_csv(&d))?;
            }
            let table: Vec<Value> = d
                .levels
                .iter()
                .map(|l| {
                    json!({
                        "level": l.level,
                        "nominal_pairs": l.nominal_pairs.to_string(),
                        "pairs": l.pairs.len(),
                        "i_total": l.i_total.to_string(),
                        "f_total": l.f_total,
                        "c_measured": l.c_measured.as_ref().map(rational_string)
                            .or_else(|| l.expanded.then(|| "inf".to_string())),
                        "c_analytic": l.c_analytic,
                        "vacuous_children": l.vacuous_children,
                    })
                })
                .collect();
            r.values = json!({
                "n": d.n, "k": d.k, "t": d.t, "cross_tau": d.cross_tau, "f_size": d.f_size,
                "levels": table,
                "product_rhs": rational_string(&d.product_rhs),
            });
        }
        Lemma::Rho => {
            r.param("lemma", "rho");
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let (ell, i) = (a.ell.unwrap_or(0), a.i.unwrap_or(0));
            r.param("n", n).param("k", k).param("ell", ell).param("i", i);
            let c = rho_claim_check(n, k, ell, i)?;
            r.check("density-claim", "decompose.pairs.density", c.holds, None);
            r.values = to_value(&c);
        }
    }
    Ok(Run::from_checks(r))
}

fn run_search(a: &SearchArgs) -> Result<Run> {
    let mut r = RunReport::new("search");
    if a.oracle {
        r.param("k", a.k).param("oracle", true);
        let o = n_of_k_oracle(a.k)?;
        r.values = to_value(&o);
        return Ok(Run { report: r, exit: EXIT_OK });
    }
    let n = need(a.n, "n")?;
    let mut inst = match a.colors {
        Some(c) => SearchInstance::with_colors(n, a.k, c),
        None => SearchInstance::new(n, a.k)?,
    };
    inst.mode = match a.mode {
        ModeArg::Covering => SearchMode::Covering,
        ModeArg::Partition => SearchMode::Partition,
    };
    inst.symmetry_breaking = !a.no_symmetry;
    inst.node_budget = a.budget_nodes;
    inst.time_budget = Duration::from_secs(a.budget_secs);
    r.param("n", n)
        .param("k", a.k)
        .param("colors", inst.colors)
        .param("mode", inst.mode)
        .param("symmetry_breaking", inst.symmetry_breaking)
        .param("budget_nodes", a.budget_nodes)
        .param("budget_secs", a.budget_secs);
    let mut values = json!({});
    if let Some(path) = &a.sat_out {
        let stats = export_sat(&inst, path)?;
        values["cnf"] = to_value(&stats);
    }
    let out = search_cover(&inst)?;
    if let (Some(path), Some(cert)) = (&a.cert_out, &out.certificate) {
        io::write_text(path, &io::cover_to_string(cert))?;
    }
    values["status"] = to_value(&out.status);
    values["nodes_explored"] = json!(out.nodes_explored);
    values["note"] = json!(out.note);
    values["certificate"] = match &out.certificate {
        Some(c) => Value::Array(c.colors().iter().map(|col| to_value(&col.materialize())).collect()),
        None => Value::Null,
    };
    r.values = values;
    let exit = if out.status == SearchStatus::Inconclusive { EXIT_INCONCLUSIVE } else { EXIT_OK };
    Ok(Run { report: r, exit })
}

fn run_report(a: &ReportArgs) -> Result<Run> {
    let mut r = RunReport::new("report");
    r.values = json!({ "schema_version": crate::report::report_schema_version() });
    if let Some(path) = &a.input {
        r.param("in", path.display().to_string());
        let text = io::read_text(path)?;
        let parsed = RunReport::from_json(&text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let major = |v: &str| v.split('.').next().map(str::to_string);
        r.check(
            "schema-compatible",
            "report.schema",
            major(&parsed.schema_version) == major(crate::report::SCHEMA_VERSION),
            Some(json!(parsed.schema_version)),
        );
        r.check("source-checks-passed", "report.checks", parsed.all_passed(), None);
        r.values["source"] = json!({
            "subcommand": parsed.subcommand,
            "checks": parsed.checks.len(),
            "failed": parsed.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect::<Vec<_>>(),
        });
    }
    Ok(Run::from_checks(r))
}

fn configure_threads(threads: Option<usize>) -> Result<()> {
    let n = match threads {
        Some(t) => Some(t),
        None => match std::env::var("KNESER_THREADS") {
            Ok(v) => Some(v.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("KNESER_THREADS={v:?} is not a number"))
            })?),
            Err(_) => None,
        },
    };
    if let Some(n) = n {
        // a pool built earlier in the same process keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Runs a parsed command line and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let result = match &cli.command {
        Command::Construct(a) => run_construct(a, cli.seed),
        Command::Verify(a) => run_verify(a, cli.seed),
        Command::Tau(a) => run_tau(a),
        Command::Bounds(a) => run_bounds(a, cli.seed),
        Command::Decompose(a) => run_decompose(a),
        Command::Search(a) => run_search(a),
        Command::Report(a) => run_report(a),
    };
    let mut run = match result {
        Ok(run) => run,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    if run.report.seed.is_none() {
        run.report.seed = cli.seed;
    }
    if !cli.no_timing {
        run.report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let json = run.report.to_json();
    match &cli.report {
        Some(path) => {
            if let Err(e) = io::write_text(path, &(json + "\n")) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
        None => println!("{json}"),
    }
    run.exit
}

/// Parses `args` (including the program name) and runs them.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}

