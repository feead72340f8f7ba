//! Set-covers by τ-sets and the edge/cross split, applied to every color of
//! the block construction.
//!
//! `cargo run --release --example set_cover_and_split -- 4`

use kneser::construction::build_cover;
use kneser::decompose::{set_cover_tau, split_all, split_family};
use kneser::SetFamily;

fn main() -> kneser::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);

    let fano = SetFamily::from_lists(
        7,
        &[&[1, 2, 4], &[2, 3, 5], &[3, 4, 6], &[4, 5, 7], &[1, 5, 6], &[2, 6, 7], &[1, 3, 7]],
    )?;
    let sc = set_cover_tau(&fano)?;
    println!(
        "Fano: tau={} cover family {} sets (bound {}), levels {:?}",
        sc.tau,
        sc.cover_family.len(),
        sc.size_bound,
        sc.level_sizes
    );
    let sp = split_family(&fano)?;
    println!("Fano split: case {:?}, verified={}", sp.case, sp.verify(&fano));

    let cover = build_cover(k)?.materialized();
    let all = split_all(&cover)?;
    for (i, s) in all.splits.iter().enumerate() {
        println!(
            "color {}: case {:?} tau={} |G'|={} |G''|={} edges={:?} t={:?} cross_tau={:?}",
            i + 1,
            s.case,
            s.tau,
            s.g_prime.len(),
            s.g_dprime.len(),
            s.edge_cover,
            s.t,
            s.cross_tau
        );
    }
    println!(
        "union graph: {} edges (bound {})",
        all.graph.edge_count(),
        all.edge_bound
    );
    Ok(())
}
