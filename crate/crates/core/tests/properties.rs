use czi_core::coloring::{chromatic_number, enumerate_min_colorings, is_proper};
use czi_core::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use czi_core::indices::{chromatic_indices, classical_indices};
use czi_core::stability::{is_chromatically_stable, stable_by_definition};
use czi_core::verify::oracle::naive_extrema;
use czi_core::{extrema_set, ExtremaOptions, ExtremaStatus, Graph, Semantics};
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected bipartite graphs on sides `0..a` and `a..n`.
fn bipartite(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order)
        .prop_flat_map(|n| (Just(n), 1..=n / 2))
        .prop_flat_map(|(n, a)| {
            let cross: Vec<(usize, usize)> =
                (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(any::<bool>(), cross.len()).prop_map(move |keep| {
                let edges = cross.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
                Graph::new(n, edges).unwrap()
            })
        })
        .prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn extrema_match_the_oracle(g in graph(6)) {
        let set = extrema_set(&g, &ExtremaOptions::default());
        let (min, max, count) = naive_extrema(&g);
        prop_assert_eq!(set.status, ExtremaStatus::Exact);
        prop_assert_eq!(set.min, min);
        prop_assert_eq!(set.max, max);
        prop_assert_eq!(set.colorings_examined, count);
    }

    #[test]
    fn witnesses_attain_their_values(g in graph(7)) {
        let set = extrema_set(&g, &ExtremaOptions::default());
        for slot in 0..3 {
            for (c, value) in [(&set.min_witness[slot], set.min[slot]), (&set.max_witness[slot], set.max[slot])] {
                prop_assert!(is_proper(&g, c).unwrap());
                prop_assert_eq!(c.palette_size(), set.chi);
                prop_assert_eq!(chromatic_indices(&g, c).unwrap()[slot], value);
            }
        }
    }

    #[test]
    fn permutation_extrema_lie_inside_all(g in graph(7)) {
        let all = extrema_set(&g, &ExtremaOptions::default());
        let perm = extrema_set(&g, &ExtremaOptions::new(Semantics::Permutation));
        for slot in 0..3 {
            prop_assert!(all.min[slot] <= perm.min[slot]);
            prop_assert!(perm.min[slot] <= perm.max[slot]);
            prop_assert!(perm.max[slot] <= all.max[slot]);
        }
    }

    #[test]
    fn reversal_keeps_cm3_and_properness(g in graph(6)) {
        for c in enumerate_min_colorings(&g, Semantics::All).take(50) {
            let r = c.reversed();
            prop_assert!(is_proper(&g, &r).unwrap());
            prop_assert_eq!(r.reversed(), c.clone());
            prop_assert_eq!(chromatic_indices(&g, &r).unwrap()[2], chromatic_indices(&g, &c).unwrap()[2]);
        }
    }

    #[test]
    fn strengths_sum_to_order(g in graph(7)) {
        for c in enumerate_min_colorings(&g, Semantics::Permutation) {
            prop_assert_eq!(c.strengths().total(), g.order());
        }
    }

    #[test]
    fn same_side_edge_makes_bipartite_graph_three_chromatic(g in bipartite(8)) {
        let sides = g.bipartition().unwrap();
        prop_assert_eq!(chromatic_number(&g), 2);
        for (u, v) in g.non_edges() {
            let chi = chromatic_number(&g.with_edges(&[(u, v)]).unwrap());
            prop_assert_eq!(chi, if sides[u] == sides[v] { 3 } else { 2 });
        }
    }

    #[test]
    fn bipartite_stability_shortcut_agrees(g in bipartite(8)) {
        prop_assert_eq!(is_chromatically_stable(&g), stable_by_definition(&g));
    }

    #[test]
    fn classical_indices_count_edges(g in graph(8)) {
        let [m1, m2, m3] = classical_indices(&g);
        let d = g.degrees();
        prop_assert_eq!(m1, g.edges().iter().map(|&(u, v)| (d[u] + d[v]) as u64).sum::<u64>());
        prop_assert!(m3 <= m1);
        prop_assert!(m2 >= g.size() as u64);
    }

    #[test]
    fn text_formats_round_trip(g in graph(9)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }
}
