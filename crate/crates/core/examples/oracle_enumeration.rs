//! Brute-force λ, α, β on small graphs, including non-trees, and the full
//! list of maximum colorings of P4.

use mpp_coloring::oracle::{enumerate_mpp, oracle_alpha, oracle_beta, oracle_lambda, OracleBudget};
use mpp_coloring::Graph;

fn main() {
    let budget = OracleBudget::default();
    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    for (name, g) in [
        ("P4", Graph::path(4)),
        ("P5", Graph::path(5)),
        ("C5", c5),
        ("K4", k4),
    ] {
        println!(
            "{name}: λ = {}, α = {}, β = {}",
            oracle_lambda(&g, &budget).unwrap(),
            oracle_alpha(&g, &budget).unwrap(),
            oracle_beta(&g, &budget).unwrap()
        );
    }

    let mpp = enumerate_mpp(&Graph::path(4), &budget).unwrap();
    println!(
        "P4 has {} maximum colorings of size {}:",
        mpp.colorings.len(),
        mpp.lambda
    );
    for f in &mpp.colorings {
        println!("  {}", f.to_text().trim_end().replace('\n', ", "));
    }

    let too_big = Graph::path(20);
    println!(
        "P20 with default budget: {:?}",
        oracle_alpha(&too_big, &budget)
    );
}
