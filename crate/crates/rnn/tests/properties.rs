//! Property tests for the structural invariants.

use proptest::prelude::*;
use rnn::colouring::{chromatic_number, SearchBudget};
use rnn::families::{generate, FamilySpec};
use rnn::graph::{emit_graph6, parse_graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            (Just(n), proptest::collection::vec(any::<bool>(), pairs.len()), Just(pairs))
        })
        .prop_map(|(n, picks, pairs)| {
            let edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .zip(picks)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let enc = emit_graph6(&g);
        let back = parse_graph6(&enc).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), enc);
    }

    #[test]
    fn bipartite_iff_chi_at_most_2(g in arb_graph(9)) {
        prop_assume!(g.edge_count() >= 1);
        let chi = chromatic_number(&g, SearchBudget::default());
        prop_assert!(chi.exact);
        prop_assert_eq!(g.is_bipartite(), chi.chi <= 2);
    }

    #[test]
    fn cycles_are_2_regular(n in 3usize..=64) {
        let g = generate(&FamilySpec::cycle(n)).unwrap();
        prop_assert_eq!(g.edge_count(), n);
        prop_assert!((0..n).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn sunlet_and_empty_sun_shapes(n in 3usize..=12) {
        let s = generate(&FamilySpec::sunlet(n)).unwrap();
        prop_assert_eq!((s.n(), s.edge_count()), (2 * n, 2 * n));
        let es = generate(&FamilySpec::empty_sun(n)).unwrap();
        prop_assert_eq!((es.n(), es.edge_count()), (2 * n, 3 * n));
        let inner = es.induced_subgraph(&(0..n).collect::<Vec<_>>());
        let cycle = generate(&FamilySpec::cycle(n)).unwrap();
        prop_assert_eq!(inner.edges().collect::<Vec<_>>(), cycle.edges().collect::<Vec<_>>());
    }
}
