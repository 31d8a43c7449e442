mod common;

use common::{arb_graph, arb_tree};
use mpp_coloring::generate::all_labeled_trees;
use mpp_coloring::graph::{parse_edge_list, Graph, GraphError};
use proptest::prelude::*;

proptest! {
    #[test]
    fn edge_list_round_trips(g in arb_graph(12, 30)) {
        prop_assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn bipartition_matches_bfs_parity(g in arb_tree(8)) {
        let (even, odd) = g.bipartition().unwrap();
        let dist = g.bfs_distances(0).unwrap();
        prop_assert_eq!(even.len() + odd.len(), g.vertex_count());
        for v in even {
            prop_assert_eq!(dist[v].unwrap() % 2, 0);
        }
        for v in odd {
            prop_assert_eq!(dist[v].unwrap() % 2, 1);
        }
    }

    #[test]
    fn removal_counts(g in arb_graph(10, 25), mask in prop::collection::vec(any::<bool>(), 10)) {
        let removed: Vec<usize> = g.vertices().filter(|&v| mask[v]).collect();
        let (h, relabel) = g.remove_vertices(&removed).unwrap();
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - removed.len());
        let surviving = g.edges().iter().filter(|e| !mask[e.a()] && !mask[e.b()]).count();
        prop_assert_eq!(h.edge_count(), surviving);
        for e in h.edges() {
            prop_assert!(g.has_edge(relabel.old(e.a()), relabel.old(e.b())));
        }
    }

    #[test]
    fn components_partition_vertices(g in arb_graph(10, 12)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.iter().map(|(c, _)| c.vertex_count()).sum::<usize>(), g.vertex_count());
        prop_assert_eq!(comps.iter().map(|(c, _)| c.edge_count()).sum::<usize>(), g.edge_count());
        prop_assert!(comps.iter().all(|(c, _)| c.is_connected()));
        prop_assert_eq!(comps.len() == 1, g.is_connected());
    }

    #[test]
    fn degrees_sum_to_twice_edges(g in arb_graph(12, 30)) {
        let total: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }
}

fn even_leaf_by_distances(g: &Graph) -> bool {
    let leaves = g.leaves();
    leaves.iter().all(|&a| {
        let d = g.bfs_distances(a).unwrap();
        leaves.iter().all(|&b| d[b].unwrap().is_multiple_of(2))
    })
}

#[test]
fn even_leaf_predicate_matches_pairwise_distances() {
    for n in 2..=7 {
        for g in all_labeled_trees(n).unwrap() {
            assert_eq!(
                g.has_even_leaf_distances().unwrap(),
                even_leaf_by_distances(&g),
                "{g:?}"
            );
        }
    }
}

#[test]
fn non_trees_are_rejected() {
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(c4.has_even_leaf_distances(), Err(GraphError::NotATree));
    assert_eq!(
        Graph::empty(2).has_even_leaf_distances(),
        Err(GraphError::NotATree)
    );
    let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(triangle.bipartition(), Err(GraphError::NotBipartite));
}
