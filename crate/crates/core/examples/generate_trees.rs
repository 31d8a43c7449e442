//! Prüfer enumeration and seeded random even-leaf trees.

use mpp_coloring::generate::{
    all_labeled_trees, labeled_tree_count, prufer_at, prufer_decode, random_even_leaf_tree,
    RNG_NAME,
};

fn main() {
    for n in 2..=7 {
        let even = all_labeled_trees(n)
            .unwrap()
            .filter(|g| g.has_even_leaf_distances().unwrap())
            .count();
        println!(
            "n = {n}: {} labeled trees, {even} with even leaf distances",
            labeled_tree_count(n)
        );
    }

    let seq = prufer_at(6, 1000).unwrap();
    let g = prufer_decode(&seq, 6).unwrap();
    let edges: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
    println!("Prüfer {:?} decodes to {}", seq.0, edges.join(", "));

    for seed in 0..3 {
        let g = random_even_leaf_tree(4, seed);
        println!(
            "# cherries=4 seed={seed} rng={RNG_NAME}\n{}",
            g.to_edge_list()
        );
    }
}
