//! Level-by-level (A, B)-pair decomposition of the independent 3-sets of a
//! sparse random graph that meet a fixed family of large cover number.
//!
//! `cargo run --release --example pair_decomposition -- 14 11`

use kneser::decompose::{thmkey_decompose, DEFAULT_PAIR_CAP};
use kneser::graphs::SimpleGraph;
use kneser::report::rational_string;
use kneser::{ElementSet, SetFamily, Universe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kneser::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(12) as usize;
    let seed = args.get(1).copied().unwrap_or(7);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = SimpleGraph::random_with_edges(&mut rng, n, n)?;
    let u = Universe::new(n, 3)?;
    let top = ElementSet::interval(n, 1, 3)?;
    let cross = SetFamily::filter_ksets(u, |s| s.intersection(&top).len() >= 2);
    let f = SetFamily::new(
        u,
        g.independent_family(3)?
            .iter()
            .filter(|s| cross.iter().all(|c| c.intersects(s)))
            .copied(),
    )?;
    println!("n={n} |E|={} |f|={} |cross|={}", g.edge_count(), f.len(), cross.len());

    let d = thmkey_decompose(&g, &f, &cross, 2, DEFAULT_PAIR_CAP)?;
    println!("level  pairs  |I_l|  c_measured  c_analytic  identity");
    for l in &d.levels {
        println!(
            "{:<6} {:<6} {:<6} {:<11} {:<11.4} {}",
            l.level,
            l.pairs.len(),
            l.i_total,
            l.c_measured.as_ref().map_or("inf".into(), rational_string),
            l.c_analytic,
            l.identity_holds && l.f_identity_holds
        );
    }
    println!(
        "monotone={} ratio chain={} product={}",
        d.monotone, d.ratio_chain_holds, d.product_holds
    );
    Ok(())
}
