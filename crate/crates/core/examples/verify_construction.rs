//! Builds the block covering for a range of k and verifies it.
//!
//! `cargo run --release --example verify_construction -- 3 6`

use std::time::Instant;

use kneser::construction::{build_cover, cover_to_partition, verify_cover, PartitionStrategy, VerifyOptions};

fn main() -> kneser::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args.as_slice() {
        [a, b] => (*a, *b),
        [a] => (*a, *a),
        _ => (3, 5),
    };
    for k in lo..=hi {
        let start = Instant::now();
        let cover = build_cover(k)?;
        let report = verify_cover(&cover, &VerifyOptions::default());
        println!(
            "k={k} n={} colors={} {} checked={} misses={} intersecting={} non-trivial={} passed={} ({:.2?})",
            report.n,
            report.count_check.colors,
            report.coverage.mode,
            report.coverage.checked,
            report.coverage.misses,
            report.all_intersecting(),
            report.all_non_trivial(),
            report.passed(),
            start.elapsed()
        );
        if k <= 5 {
            let start = Instant::now();
            let (_, p) = cover_to_partition(&cover, PartitionStrategy::PinWitnesses)?;
            println!("  partition sizes {:?}, flags {} ({:.2?})", p.sizes, p.flags.len(), start.elapsed());
        }
    }
    Ok(())
}
