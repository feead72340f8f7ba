//! Exhaustive search at tiny parameters: the n(2) oracle, one certificate,
//! and a DIMACS export of a harder instance.
//!
//! `cargo run --release --example small_search`

use kneser::io::cover_to_string;
use kneser::search::{n_of_k_oracle, sat_encoding, search_cover, SearchInstance, SearchMode};

fn main() -> kneser::Result<()> {
    let oracle = n_of_k_oracle(2)?;
    for s in &oracle.steps {
        println!("n={} c={}: {:?} after {} nodes", s.n, s.colors, s.status, s.nodes);
    }
    println!("n(2) = {} (counting argument from n = {})", oracle.value, oracle.counting_from);

    let found = search_cover(&SearchInstance::with_colors(6, 3, 2).mode(SearchMode::Partition))?;
    println!("\nn=6 k=3 c=2 partition: {:?}", found.status);
    if let Some(cert) = &found.certificate {
        print!("{}", cover_to_string(cert));
    }

    let (cnf, stats) = sat_encoding(&SearchInstance::with_colors(7, 3, 3))?;
    println!(
        "\nn=7 k=3 c=3 CNF: {} variables, {} clauses, {} bytes",
        stats.variables,
        stats.clauses,
        cnf.len()
    );
    Ok(())
}
