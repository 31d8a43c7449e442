mod common;

use std::collections::BTreeSet;

use common::{arb_graph, random_connected_graph};
use mpp_coloring::coloring::is_proper;
use mpp_coloring::graph::Graph;
use mpp_coloring::oracle::{
    enumerate_mpp, oracle_alpha, oracle_beta, oracle_lambda, OracleBudget, OracleError,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_is_consistent(g in arb_graph(7, 9)) {
        let budget = OracleBudget::default();
        let mpp = enumerate_mpp(&g, &budget).unwrap();
        prop_assert!(!mpp.truncated);
        prop_assert_eq!(mpp.lambda, oracle_lambda(&g, &budget).unwrap());
        let set: BTreeSet<_> = mpp.colorings.iter().cloned().collect();
        prop_assert_eq!(set.len(), mpp.colorings.len());
        for f in &mpp.colorings {
            prop_assert!(is_proper(&g, f).unwrap());
            prop_assert_eq!(f.len(), mpp.lambda);
            // closure under color swap
            prop_assert!(set.contains(&f.swap_colors()));
        }
        let alpha = mpp.colorings.iter().map(|f| f.class_sizes().0).max().unwrap_or(0);
        prop_assert_eq!(alpha, oracle_alpha(&g, &budget).unwrap());
    }

    #[test]
    fn value_relations(g in arb_graph(7, 10)) {
        let budget = OracleBudget::default();
        let b = oracle_beta(&g, &budget).unwrap();
        let l = oracle_lambda(&g, &budget).unwrap();
        let a = oracle_alpha(&g, &budget).unwrap();
        prop_assert!(a <= b);
        prop_assert!(b <= l && l <= 2 * b);
        prop_assert!(2 * a >= l);
    }
}

#[test]
fn random_connected_graphs_respect_alpha_le_beta() {
    let budget = OracleBudget::default();
    for seed in 0..200 {
        let g = random_connected_graph(seed, 12);
        assert!(g.is_connected() && g.edge_count() <= 12);
        assert!(oracle_alpha(&g, &budget).unwrap() <= oracle_beta(&g, &budget).unwrap());
    }
}

#[test]
fn odd_cycles_lose_an_edge() {
    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    let budget = OracleBudget::default();
    assert_eq!(oracle_lambda(&c5, &budget).unwrap(), 4);
    assert_eq!(oracle_alpha(&c5, &budget).unwrap(), 2);
    let c6 = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    assert_eq!(oracle_lambda(&c6, &budget).unwrap(), 6);
    assert_eq!(enumerate_mpp(&c6, &budget).unwrap().colorings.len(), 2);
}

#[test]
fn budget_is_enforced() {
    let g = Graph::path(16);
    let tight = OracleBudget::with_max_edges(10);
    assert_eq!(
        oracle_lambda(&g, &tight),
        Err(OracleError::BudgetExceeded {
            edges: 15,
            max_edges: 10
        })
    );
    assert!(oracle_beta(&g, &OracleBudget::with_max_edges(15)).is_ok());
}
