use kmc4_core::{complement, from_graph6, to_graph6, DegreeSequence, SmallGraph};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = SmallGraph> {
    (0usize..=12).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            SmallGraph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_involution(g in graph_strategy()) {
        let c = complement(&g);
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.order() * g.order().saturating_sub(1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn sequence_text_round_trip(v in proptest::collection::vec(0usize..40, 1..20)) {
        let s = DegreeSequence::new(v.iter().copied()).unwrap();
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s.clone());
        prop_assert_eq!(s.power_notation().parse::<DegreeSequence>().unwrap(), s);
    }

    #[test]
    fn realized_graphs_have_graphical_sequences(g in graph_strategy()) {
        if let Some(s) = g.degree_sequence() {
            prop_assert!(s.is_graphical());
        }
    }
}
