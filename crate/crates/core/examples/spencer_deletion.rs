//! The deletion argument on a small hypergraph: exact inequality plus a
//! seeded Monte-Carlo run.
//!
//! `cargo run --release --example spencer_deletion -- 10000 1`

use kneser::bounds::{spencer_check, spencer_experiment, Probability, UniformHypergraphProfile};
use kneser::report::rational_string;
use kneser::{SetFamily, Universe};

fn main() -> kneser::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let trials = args.first().copied().unwrap_or(10_000);
    let seed = args.get(1).copied().unwrap_or(1);

    let h = SetFamily::complete(Universe::new(4, 2)?);
    let p = Probability::new(1, 2)?;
    let profile = UniformHypergraphProfile::of_family(&h)?;
    let c = spencer_check(&profile, 4, 2, &p);
    println!(
        "K4 edges, b=2, p=1/2: {} > {} holds={}",
        rational_string(&c.lhs),
        rational_string(&c.rhs),
        c.holds
    );

    let e = spencer_experiment(&h, 2, &p, trials, seed)?;
    println!(
        "{} trials: mean |A| {:.4} (np = {}), mean |H[A]| {:.4}, bound ok {:.3}, within 3σ {}",
        e.trials,
        e.mean_a,
        e.expected_a,
        e.mean_hits,
        e.bound_ok,
        e.mean_a_within_3_sigma()
    );
    Ok(())
}
