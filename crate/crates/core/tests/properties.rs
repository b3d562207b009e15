mod common;

use edgestab::coloring::{chromatic_index, k_edge_colorable, vizing_color};
use edgestab::generators::random_graph;
use edgestab::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use edgestab::matching::{is_matching, maximum_matching};
use edgestab::stability::{
    exact_es, general_bound_set, is_mitigating, mitigate, ExactOptions,
};
use edgestab::{Budget, Edge, Graph};
use proptest::prelude::*;

fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << pairs))
    })
    .prop_map(|(n, mask)| common::graph_from_mask(n, mask))
}

fn with_edges(max_n: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n).prop_filter("needs an edge", |g| g.edge_count() > 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn removing_edges_lowers_exactly_their_endpoints(g in with_edges(8), pick in any::<u64>()) {
        let f: Vec<Edge> = g.edges().iter().enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let h = g.remove_edges(&f).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count() - f.len());
        for v in 0..g.n() {
            let lost = f.iter().filter(|e| e.touches(v)).count();
            prop_assert_eq!(h.degree(v), g.degree(v) - lost);
        }
    }

    #[test]
    fn core_is_induced_by_max_degree_vertices(g in with_edges(8)) {
        let core = g.core();
        let delta = g.max_degree();
        for (i, &w) in core.to_parent.iter().enumerate() {
            prop_assert_eq!(g.degree(w), delta);
            for (j, &x) in core.to_parent.iter().enumerate() {
                prop_assert_eq!(core.graph.has_edge(i, j), g.has_edge(w, x));
            }
        }
        prop_assert_eq!(core.to_parent.len(), (0..g.n()).filter(|&v| g.degree(v) == delta).count());
    }

    #[test]
    fn complement_is_an_involution(g in small_graph(9)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn degree_profile_sums(g in small_graph(9)) {
        let p = g.degree_profile();
        prop_assert_eq!(p.t.values().sum::<usize>(), g.n());
        prop_assert_eq!(p.t.iter().map(|(d, c)| d * c).sum::<usize>(), 2 * g.edge_count());
        prop_assert!(p.s <= p.t_delta_minus_one());
    }

    #[test]
    fn vizing_is_proper_within_delta_plus_one(g in with_edges(9)) {
        let col = vizing_color(&g).unwrap();
        prop_assert!(common::is_proper_coloring(&g, col.assignment()));
        prop_assert!(col.assignment().iter().all(|&(_, c)| c <= g.max_degree()));
    }

    #[test]
    fn chromatic_index_matches_oracle(g in with_edges(6)) {
        let chi = chromatic_index(&g).unwrap();
        prop_assert_eq!(chi, common::chromatic_index(&g));
        prop_assert!(chi == g.max_degree() || chi == g.max_degree() + 1);
    }

    #[test]
    fn exact_coloring_is_a_certificate(g in with_edges(8)) {
        let k = g.max_degree();
        if let Some(col) = k_edge_colorable(&g, k, &mut Budget::unlimited()).unwrap() {
            prop_assert!(common::is_proper_coloring(&g, col.assignment()));
            prop_assert!(col.assignment().iter().all(|&(_, c)| c < k));
        }
    }

    #[test]
    fn chromatic_index_is_monotone_under_edge_removal(g in with_edges(8), i in any::<prop::sample::Index>()) {
        let e = g.edges()[i.index(g.edge_count())];
        let h = g.remove_edges(&[e]).unwrap();
        if h.edge_count() > 0 {
            prop_assert!(chromatic_index(&h).unwrap() <= chromatic_index(&g).unwrap());
        }
    }

    #[test]
    fn blossom_matches_brute_force(g in small_graph(8)) {
        let m = maximum_matching(&g);
        prop_assert!(is_matching(&g, m.edges()).unwrap());
        prop_assert_eq!(m.len(), common::matching_number(&g));
    }

    #[test]
    fn exact_es_matches_oracle(g in with_edges(6).prop_filter("oracle size", |g| g.edge_count() <= 10)) {
        let rep = exact_es(&g, ExactOptions::default(), &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(rep.es, common::edge_stability(&g));
        prop_assert_eq!(rep.witness.len(), rep.es);
        prop_assert!(is_mitigating(&g, &rep.witness.edges).unwrap());
        prop_assert!(rep.es <= rep.bound_value);
    }

    #[test]
    fn constructive_sets_mitigate_within_bound(g in with_edges(8)) {
        let rep = mitigate(&g, &mut Budget::unlimited()).unwrap();
        prop_assert!(is_mitigating(&g, &rep.witness.edges).unwrap());
        prop_assert!(rep.witness.len() <= rep.bound_value);
        let general = general_bound_set(&g, &mut Budget::unlimited()).unwrap();
        prop_assert!(is_mitigating(&g, &general.edges).unwrap());
    }

    #[test]
    fn text_formats_round_trip(g in small_graph(9)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}

#[test]
fn graph6_round_trips_on_a_thousand_random_graphs() {
    for seed in 0..1000u64 {
        // every tenth graph is large enough to need the four-byte header
        let n = if seed % 10 == 0 { 63 + (seed as usize % 40) } else { 2 + seed as usize % 40 };
        let p = [0.1, 0.3, 0.5, 0.8][seed as usize % 4];
        let g = random_graph(n, p, seed).unwrap();
        let line = write_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        assert_eq!(back, g, "seed {seed}");
        assert_eq!(write_graph6(&back), line);
    }
}
