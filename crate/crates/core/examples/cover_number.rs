//! Cover numbers, centers and disjoint pairs of a few small families.
//!
//! `cargo run --example cover_number`

use kneser::sets::random::random_nontrivial_intersecting_family;
use kneser::{SetFamily, Universe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn describe(name: &str, f: &SetFamily) -> kneser::Result<()> {
    let tau = f.cover_number(None).exact();
    println!(
        "{name}: {} sets, intersecting={}, centers={}, tau={:?}, piercing set={:?}",
        f.len(),
        f.is_intersecting(),
        f.centers()?,
        tau.as_ref().map(|c| c.tau),
        tau.map(|c| c.witness),
    );
    Ok(())
}

fn main() -> kneser::Result<()> {
    let fano = SetFamily::from_lists(
        7,
        &[&[1, 2, 4], &[2, 3, 5], &[3, 4, 6], &[4, 5, 7], &[1, 5, 6], &[2, 6, 7], &[1, 3, 7]],
    )?;
    describe("Fano plane", &fano)?;

    let star = SetFamily::filter_ksets(Universe::new(6, 3)?, |s| s.contains(1));
    describe("star at 1", &star)?;

    let triangle = SetFamily::from_lists(5, &[&[1, 2], &[1, 3], &[2, 3]])?;
    describe("triangle", &triangle)?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let u = Universe::new(12, 4)?;
    if let Some(f) = random_nontrivial_intersecting_family(&mut rng, u, 200) {
        describe("random non-trivial (seed 2024)", &f)?;
    }
    Ok(())
}
