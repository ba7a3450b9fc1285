mod common;

use proptest::prelude::*;

use cayley_core::cayley::ConnectionSet;
use cayley_core::graph::Graph;
use cayley_core::homcore::{has_proper_colouring, SearchOptions};
use cayley_core::verify::counterexample;
use common::{all_sets, cayley_fixture, fields_up_to, graph_of, oracle, props, small_graph};

/// Every Cayley graph on at most 8 vertices.
fn small_cayley_graphs() -> Vec<(ConnectionSet, Graph)> {
    fields_up_to(8)
        .into_iter()
        .flat_map(all_sets)
        .map(|c| {
            let g = graph_of(&c);
            (c, g)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn endomorphism_search_matches_scan(g in small_graph(7)) {
        props::endomorphism_oracle(&g)?;
    }

    #[test]
    fn core_matches_scan(g in small_graph(7)) {
        props::core_oracle(&g, &SearchOptions::default())?;
    }

    #[test]
    fn colouring_matches_scan(g in small_graph(7), k in 0usize..5) {
        prop_assert_eq!(
            has_proper_colouring(&g, k),
            oracle::colourable(&g, k)
        );
    }

    #[test]
    fn core_order_divides_group_order(c in cayley_fixture()) {
        props::core_order_divides(&c)?;
    }

    #[test]
    fn cayley_cores_are_consistent(c in cayley_fixture()) {
        let g = graph_of(&c);
        props::core_consistency(&g, &SearchOptions::transitive(g.order()))?;
    }

    #[test]
    fn certification_agrees_with_search(c in cayley_fixture()) {
        props::certify_agrees(&graph_of(&c))?;
    }
}

#[test]
fn small_cayley_fixtures_match_scan() {
    for (c, g) in small_cayley_graphs() {
        props::endomorphism_oracle(&g).unwrap_or_else(|e| panic!("{c:?}: {e}"));
        props::core_oracle(&g, &SearchOptions::transitive(8))
            .unwrap_or_else(|e| panic!("{c:?}: {e}"));
    }
}

#[test]
fn every_cayley_graph_up_to_sixteen_vertices() {
    for c in fields_up_to(16).into_iter().flat_map(all_sets) {
        props::core_order_divides(&c).unwrap_or_else(|e| panic!("{c:?}: {e}"));
        props::certify_agrees(&graph_of(&c)).unwrap_or_else(|e| panic!("{c:?}: {e}"));
    }
}

#[test]
fn certification_agrees_on_counterexamples() {
    for p in [2, 3, 5, 7, 11] {
        let x = counterexample(p).unwrap();
        for g in [x.graph().unwrap(), x.complement_graph().unwrap()] {
            props::certify_agrees(&g).unwrap();
        }
    }
}
