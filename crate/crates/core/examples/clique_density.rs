//! Exact clique-density certificates `N_r >= ((2(r-1)γ - (r-2)) / r) n N_{r-1}`
//! on random graphs and on the complete graph, where it is tight.
//!
//! `cargo run --release --example clique_density`

use kneser::graphs::{knr_check, SimpleGraph};
use kneser::report::rational_string;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kneser::Result<()> {
    let k5 = SimpleGraph::complete(5)?;
    let c = knr_check(&k5, 3)?;
    println!(
        "K5 r=3: N_3={} bound={} equality={}",
        c.lhs,
        c.rhs.as_ref().map_or("-".into(), rational_string),
        c.is_equality()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [0.3, 0.5, 0.7] {
        let g = SimpleGraph::random_gnp(&mut rng, 18, p)?;
        let parts: Vec<String> = (2..=5)
            .map(|r| {
                let c = knr_check(&g, r).expect("r >= 2");
                if c.applicable {
                    format!("r={r}: {} >= {} {}", c.lhs, rational_string(c.rhs.as_ref().unwrap()), c.holds)
                } else {
                    format!("r={r}: n/a")
                }
            })
            .collect();
        println!("G(18,{p}) γ={}: {}", rational_string(&g.density()), parts.join("; "));
    }
    Ok(())
}
