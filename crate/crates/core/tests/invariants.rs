//! Property-based invariants over random graphs and partitions, plus
//! determinism of the cross-validation harness.

use proptest::prelude::*;

use indecomp::checkers::{find_shelling, is_shelling_order, is_unmixed, is_vertex_decomposable};
use indecomp::harness::{
    cross_validate, mis_by_subset_filter, shellable_by_permutation_search, Budgets,
};
use indecomp::{independence_complex, maximal_independent_sets, Graph, Partition, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let edges: Vec<(usize, usize)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, &edges).expect("filtered edges are valid")
        })
    })
}

fn partition_strategy(max_total: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=4usize, 1..=5)
        .prop_filter("total within budget", move |parts| {
            parts.iter().sum::<usize>() <= max_total
        })
        .prop_map(|parts| Partition::new(parts).expect("parts are positive"))
}

fn is_canonical_antichain(facets: &[VertexSet]) -> bool {
    for (i, f) in facets.iter().enumerate() {
        for (j, g) in facets.iter().enumerate() {
            if i != j && f.is_subset_of(g) {
                return false;
            }
        }
    }
    facets.windows(2).all(|w| {
        w[1].len() < w[0].len()
            || (w[1].len() == w[0].len() && w[0].lex_cmp(&w[1]) == std::cmp::Ordering::Less)
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_flips_every_pair(g in graph_strategy(8)) {
        let co = g.complement();
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                prop_assert_ne!(g.has_edge(u, v), co.has_edge(u, v));
            }
        }
    }

    #[test]
    fn detect_recovers_the_partition(p in partition_strategy(12)) {
        let g = Graph::complete_multipartite(&p).unwrap();
        prop_assert_eq!(g.detect_multipartite().unwrap(), Some(p));
    }

    #[test]
    fn mis_agrees_with_subset_filter(g in graph_strategy(9)) {
        prop_assert_eq!(
            maximal_independent_sets(&g).unwrap(),
            mis_by_subset_filter(&g).unwrap()
        );
    }

    #[test]
    fn complex_operations_stay_canonical(g in graph_strategy(9)) {
        let c = independence_complex(&g).unwrap();
        prop_assert!(is_canonical_antichain(c.facets()));
        for v in c.support().iter() {
            prop_assert!(is_canonical_antichain(c.delete_vertex(v).unwrap().facets()));
            prop_assert!(is_canonical_antichain(
                c.link(&VertexSet::singleton(v)).unwrap().facets()
            ));
        }
        prop_assert_eq!(c.link(&VertexSet::EMPTY).unwrap(), c);
    }

    #[test]
    fn shelling_search_is_sound_and_complete(g in graph_strategy(7)) {
        let c = independence_complex(&g).unwrap();
        let found = find_shelling(&c).unwrap();
        if let Some(cert) = &found {
            prop_assert!(is_shelling_order(&c, &cert.order).unwrap().is_some());
        }
        if c.facet_count() <= 6 {
            prop_assert_eq!(
                found.is_some(),
                shellable_by_permutation_search(&c).unwrap()
            );
        }
    }

    #[test]
    fn unmixed_iff_pure(g in graph_strategy(9)) {
        prop_assert_eq!(
            is_unmixed(&g).unwrap(),
            independence_complex(&g).unwrap().is_pure()
        );
    }

    #[test]
    fn decomposable_complexes_are_shellable(g in graph_strategy(7)) {
        let c = independence_complex(&g).unwrap();
        if is_vertex_decomposable(&c).unwrap().is_some() {
            prop_assert!(find_shelling(&c).unwrap().is_some());
        }
    }
}

#[test]
fn cross_validation_is_deterministic() {
    let budgets = Budgets {
        max_partition_total: 5,
        max_random_n: 6,
        samples: 60,
        seed: 11,
    };
    let a = serde_json::to_string(&cross_validate(&budgets)).unwrap();
    let b = serde_json::to_string(&cross_validate(&budgets)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cross_validation_passes_at_default_budgets() {
    let report = cross_validate(&Budgets::default());
    let failing: Vec<_> = report.checks.iter().filter(|c| c.failures > 0).collect();
    assert!(report.passed, "failing checks: {failing:#?}");
    assert!(report.checks.iter().all(|c| c.instances > 0));
}
