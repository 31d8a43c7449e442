//! Exhaustive check over every labeled tree up to `max_n` vertices (default
//! 7): constructions, certificates, oracle α = β, and the case histogram.
//!
//!     cargo run --release --example exhaustive_sweep -- 8

use mpp_coloring::cli::{sweep_command, SweepOptions};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("max_n"));
    let summary = sweep_command(max_n, &SweepOptions::default()).unwrap();
    println!(
        "{:>2} {:>8} {:>8} {:>8} {:>8}  cases",
        "n", "trees", "even", "certs", "α=β"
    );
    for row in &summary.rows {
        println!(
            "{:>2} {:>8} {:>8} {:>8} {:>8}  {:?}",
            row.n,
            row.labeled_trees,
            row.even_leaf_trees,
            row.certificates_passed,
            row.alpha_beta_confirmed,
            row.case_histogram
        );
    }
    println!("failures: {}", summary.failures.len());
}
