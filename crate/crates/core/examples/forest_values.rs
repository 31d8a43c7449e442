//! Exact β and λ on forests, with witnesses, for a few trees and one large
//! random tree.

use std::time::Instant;

use mpp_coloring::forest::{beta_tree, lambda_tree};
use mpp_coloring::generate::random_even_leaf_tree;
use mpp_coloring::Graph;

fn main() {
    let samples = [
        ("P5", Graph::path(5)),
        ("star with 3 leaves", Graph::star(3)),
        ("spider 2,2,2", Graph::spider(&[2, 2, 2])),
        ("spider 4,2,2", Graph::spider(&[4, 2, 2])),
    ];
    for (name, g) in &samples {
        let (beta, matching) = beta_tree(g).unwrap();
        let (lambda, witness) = lambda_tree(g).unwrap();
        let edges: Vec<String> = matching.edges().iter().map(|e| e.to_string()).collect();
        println!("{name}: β = {beta} via {}", edges.join(", "));
        println!(
            "    λ = {lambda}, classes {:?}",
            witness.coloring.class_sizes()
        );
    }

    let big = random_even_leaf_tree(50_000, 3);
    let start = Instant::now();
    let beta = beta_tree(&big).unwrap().0;
    let lambda = lambda_tree(&big).unwrap().0;
    println!(
        "{} vertices: β = {beta}, λ = {lambda} in {:.1?}",
        big.vertex_count(),
        start.elapsed()
    );
}
