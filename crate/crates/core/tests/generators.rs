use std::collections::BTreeSet;

use mpp_coloring::generate::{
    all_labeled_trees, labeled_tree_count, prufer_decode, random_even_leaf_tree, PruferSequence,
};
use mpp_coloring::graph::Graph;
use proptest::prelude::*;

#[test]
fn enumeration_yields_distinct_trees() {
    for n in 2..=7 {
        let trees: BTreeSet<Vec<_>> = all_labeled_trees(n)
            .unwrap()
            .inspect(|g| assert!(g.is_tree() && g.vertex_count() == n))
            .map(|g| g.edges().to_vec())
            .collect();
        assert_eq!(trees.len(), labeled_tree_count(n));
    }
}

fn leaves_share_distance_parity(g: &Graph) -> bool {
    let leaves = g.leaves();
    let Some(&first) = leaves.first() else {
        return true;
    };
    let d = g.bfs_distances(first).unwrap();
    leaves.iter().all(|&l| d[l].unwrap().is_multiple_of(2))
}

fn leaves_share_bipartition_class(g: &Graph) -> bool {
    let (even, _) = g.bipartition().unwrap();
    let mut in_even = vec![false; g.vertex_count()];
    for v in even {
        in_even[v] = true;
    }
    let leaves = g.leaves();
    leaves.iter().all(|&l| in_even[l]) || leaves.iter().all(|&l| !in_even[l])
}

#[test]
fn even_leaf_filter_at_five_vertices() {
    let by_predicate: Vec<Graph> = all_labeled_trees(5)
        .unwrap()
        .filter(|g| g.has_even_leaf_distances().unwrap())
        .collect();
    let by_distances = all_labeled_trees(5)
        .unwrap()
        .filter(leaves_share_distance_parity)
        .count();
    let by_class = all_labeled_trees(5)
        .unwrap()
        .filter(leaves_share_bipartition_class)
        .count();
    assert_eq!(by_predicate.len(), by_distances);
    assert_eq!(by_predicate.len(), by_class);
    // 60 labeled P5s and the 5 stars K1,4
    assert_eq!(by_predicate.len(), 65);
}

#[test]
fn thousand_random_cherry_trees_stay_in_class() {
    for i in 0..1000u64 {
        let cherries = 1 + (i as usize * 37) % 100;
        let g = random_even_leaf_tree(cherries, i);
        assert_eq!(g.vertex_count(), 2 * cherries + 1);
        assert!(g.is_tree());
        assert!(
            g.has_even_leaf_distances().unwrap(),
            "cherries={cherries} seed={i}"
        );
    }
}

proptest! {
    #[test]
    fn decoding_always_gives_a_tree(n in 2usize..30, raw in prop::collection::vec(any::<usize>(), 28)) {
        let seq = PruferSequence(raw[..n - 2].iter().map(|x| x % n).collect());
        let g = prufer_decode(&seq, n).unwrap();
        prop_assert!(g.is_tree());
        prop_assert_eq!(g.edge_count(), n - 1);
        // a label's degree is its multiplicity in the code plus one
        for v in g.vertices() {
            let count = seq.0.iter().filter(|&&x| x == v).count();
            prop_assert_eq!(g.degree(v).unwrap(), count + 1);
        }
    }

    #[test]
    fn cherry_trees_are_reproducible(cherries in 1usize..100, seed in any::<u64>()) {
        prop_assert_eq!(random_even_leaf_tree(cherries, seed), random_even_leaf_tree(cherries, seed));
    }
}
