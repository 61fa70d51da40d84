//! Seeded Monte Carlo on the erasure channel: how many coordinates sit in
//! fully surviving repair groups, and how often a random locality-respecting
//! generator keeps full rank after column loss.

use lrcap::experiments::{estimate_l_i, rank_success_rate, square_invertibility_probability};
use lrcap::infofn::Probability;

fn main() {
    let p = Probability::new(0.5).unwrap();

    println!("fraction of coordinates in fully unerased groups (target (1-p)^(r+1))");
    for (n, r) in [(300, 2), (3000, 2), (300, 4)] {
        let report = estimate_l_i(n, r, p, 10_000, 7).unwrap();
        println!(
            "  n = {n:>4}, r = {r}: estimate {:.5} +- {:.5}, target {:.5}",
            report.estimate, report.std_error, report.target
        );
    }

    // n/2 columns survive on average, so rank holds easily at k well below
    // n/2 and collapses near it. The printed floor is the full-rank
    // probability of a square uniform matrix — the worst case.
    println!();
    println!("P(random LRC generator keeps rank k after p = 0.5 column loss)");
    println!("  (floor for a square uniform matrix: {:.4})", square_invertibility_probability(120));
    for k in [60, 92, 120, 135, 150] {
        let report = rank_success_rate(300, k, 2, p, 2000, 7).unwrap();
        println!("  k = {k:>3}: {:.3} +- {:.3}", report.estimate, report.std_error);
    }
}
