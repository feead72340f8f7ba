//! Exact tables for the counting bounds: EKR and Hilton–Milner sizes, the
//! cubic-n check, the quadratic threshold and the asymptotic regime.
//!
//! `cargo run --example bounds_table -- 12`

use kneser::bounds::{ekr_bound, hm_bound, prop12_check, thm13_regime, thm31_corollary};
use kneser::report::rational_string;

fn main() -> kneser::Result<()> {
    let k_max: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);

    println!("k  n=k^3  colors needed > n-2k+2   HM <= k C(n-2,k-2)");
    for k in 3..=k_max {
        let c = prop12_check(k)?;
        println!(
            "{k:<2} {:<6} {:>12} > {:<8} {}  {}",
            c.n,
            rational_string(&c.lhs),
            c.rhs,
            c.holds,
            c.hm_relaxation_holds
        );
    }

    println!();
    println!("n=8 k=3: EKR {} HM {}", ekr_bound(8, 3)?, hm_bound(8, 3)?);

    println!();
    println!("k  (2+eps)k^2   n-2k+2 vs n^2/(8k^2) at n=8k^2+2k");
    for k in [4u64, 8, 16, 32, 64] {
        let r = thm13_regime(2 * k * k + k * k, k)?;
        let n = 8 * k * k + 2 * k;
        let q = thm31_corollary(n, k)?;
        println!(
            "{k:<2} {:>10.1}   {} vs {} fires={}",
            r.threshold,
            q.colors,
            rational_string(&q.bound),
            q.fires
        );
    }
    Ok(())
}
