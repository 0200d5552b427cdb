//! Property tests for the structural invariants.

mod common;

use common::{random_coins, random_connected_graph, random_state};
use dtqw::{
    crw_step, partial_polya, step, ClassicalDistribution, Graph, PolyaForm, TransitionMatrix,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Edge lists over a small label range; builds that violate simplicity
/// are discarded.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (
        2usize..=9,
        proptest::collection::vec((1usize..=9, 1usize..=9), 1..20),
    )
        .prop_filter_map("valid simple graph", |(n, pairs)| {
            let pairs: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|&(i, j)| i <= n && j <= n)
                .collect();
            Graph::build(n, &pairs).ok()
        })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph()) {
        let total: usize = (1..=g.vertex_count()).map(|x| g.degree(x)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn neighbor_labels_strictly_ascend(g in arb_graph()) {
        let table = g.neighbor_table();
        for x in 1..=g.vertex_count() {
            for r in 1..table.degree(x) {
                prop_assert!(table.label(x, r) < table.label(x, r + 1));
            }
            for r in 1..=table.degree(x) {
                prop_assert_eq!(table.coin_index(x, table.label(x, r)), Some(r));
            }
        }
    }

    #[test]
    fn table_incidence_rebuilds_the_graph(g in arb_graph()) {
        prop_assert_eq!(g.neighbor_table().to_graph(), g);
    }

    #[test]
    fn neighbor_symmetry(g in arb_graph()) {
        let table = g.neighbor_table();
        for x in 1..=g.vertex_count() {
            for &y in table.neighbors(x) {
                prop_assert!(table.neighbors(y).contains(&x));
            }
        }
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph()) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn product_polya_is_monotone_and_bounded(
        probs in proptest::collection::vec(0.0f64..=1.0, 1..60)
    ) {
        let mut last = 0.0f64;
        for cut in 1..=probs.len() {
            let value = partial_polya(&probs[..cut], PolyaForm::Product).unwrap();
            prop_assert!((0.0..=1.0).contains(&value));
            prop_assert!(value >= last - 1e-15);
            last = value;
        }
    }

    #[test]
    fn sum_polya_matches_direct_formula(
        probs in proptest::collection::vec(0.001f64..=1.0, 1..40)
    ) {
        let value = partial_polya(&probs, PolyaForm::Sum).unwrap();
        let s: f64 = probs.iter().sum();
        prop_assert!((value - (1.0 - 1.0 / s)).abs() < 1e-12);
    }

    #[test]
    fn quantum_step_conserves_probability_on_random_instances(seed in 0u64..1 << 48) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graph = random_connected_graph(&mut rng, 7);
        let table = Arc::new(graph.neighbor_table());
        let coins = random_coins(&table, &mut rng);
        let mut state = random_state(&table, &mut rng);
        for _ in 0..10 {
            state = step(&state, &coins, &[]).unwrap();
            let total: f64 = state.node_probability().iter().sum();
            prop_assert!((total - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn crw_step_conserves_probability(seed in 0u64..1 << 48) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let graph = random_connected_graph(&mut rng, 9);
        let table = graph.neighbor_table();
        let omega = TransitionMatrix::unbiased(&table).unwrap();
        let mut dist = ClassicalDistribution::delta(graph.vertex_count(), 1).unwrap();
        for _ in 0..50 {
            dist = crw_step(&dist, &omega);
            let total: f64 = dist.probabilities().iter().sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }
    }
}
