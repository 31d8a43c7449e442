#![allow(dead_code)]

use mpp_coloring::graph::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Arbitrary simple graph on 1..=max_n vertices.
pub fn arb_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(a, b)| a != b)).unwrap()
        })
    })
}

/// Arbitrary labeled tree on 1..=max_n vertices, grown by random attachment.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)).prop_map(
            move |picks| {
                let edges = picks
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.index(i + 1), i + 1));
                Graph::from_edges(n, edges).unwrap()
            },
        )
    })
}

/// Seeded random connected graph with at most `max_edges` edges.
pub fn random_connected_graph(seed: u64, max_edges: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=8usize).min(max_edges + 1);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !edges.contains(&(a, b)))
        .collect();
    missing.shuffle(&mut rng);
    let extra = rng.gen_range(0..=(max_edges - edges.len()).min(missing.len()));
    edges.extend(missing.into_iter().take(extra));
    Graph::from_edges(n, edges).unwrap()
}
