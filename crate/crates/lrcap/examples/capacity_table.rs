//! Prints a capacity table across channels and localities: what a repair
//! group of size `r + 1` costs relative to the Shannon limit.

use lrcap::capacity::{cap_bec_lrc, cap_bsc_lrc_bounds, cap_general_bounds};
use lrcap::infofn::Probability;

fn main() {
    println!("BEC: exact capacity and gap to Shannon (1 - p)");
    println!("{:>5} {:>3} {:>10} {:>10} {:>10}", "p", "r", "shannon", "lrc", "gap");
    for &p in &[0.0, 0.1, 0.3, 0.5] {
        for r in [1, 2, 4, 8] {
            let cap = cap_bec_lrc(Probability::new(p).unwrap(), r);
            println!(
                "{p:>5.2} {r:>3} {:>10.6} {:>10.6} {:>10.6}",
                cap.shannon_capacity(),
                cap.value,
                cap.gap()
            );
        }
    }

    println!();
    println!("BSC: bound pair (the truth lies between)");
    println!("{:>5} {:>3} {:>10} {:>10} {:>10}", "p", "r", "shannon", "lower", "upper");
    for &p in &[0.01, 0.05, 0.11] {
        for r in [1, 2, 4] {
            let (lower, upper) = cap_bsc_lrc_bounds(Probability::new(p).unwrap(), r);
            println!(
                "{p:>5.2} {r:>3} {:>10.6} {:>10.6} {:>10.6}",
                lower.shannon_capacity(),
                lower.value,
                upper.value
            );
        }
    }

    println!();
    println!("Arbitrary binary-input channel, known only through its capacity");
    println!("{:>8} {:>3} {:>10} {:>10}", "Cap(W)", "r", "lower", "upper");
    for &capw in &[0.25, 0.5310044064107188, 0.9] {
        for r in [1, 3] {
            let (lower, upper) = cap_general_bounds(capw, r);
            println!("{capw:>8.4} {r:>3} {:>10.6} {:>10.6}", lower.value, upper.value);
        }
    }
}
