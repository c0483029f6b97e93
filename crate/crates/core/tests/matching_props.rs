mod common;

use colourbias_core::graph::colour_class;
use colourbias_core::matching::{
    component_bounds_check, gallai_edmonds_even_set, max_matching, max_mono_matching, mono_matching_bound,
    tutte_berge_witness,
};
use colourbias_core::{EdgeColouring, Graph};
use common::{brute_matching, coloured_graph, graph, odd_components_without};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn blossom_matches_subset_dp(g in graph(10)) {
        let m = max_matching(&g);
        prop_assert!(m.check_in(&g).is_ok());
        prop_assert_eq!(m.len(), brute_matching(&g));
    }

    #[test]
    fn tutte_berge_witness_is_tight(g in graph(10)) {
        let w = tutte_berge_witness(&g);
        let mu = brute_matching(&g);
        prop_assert_eq!(w.matching_number, mu);
        prop_assert_eq!(w.deficiency, g.n() - 2 * mu);
        // The certificate is checked from scratch: odd(G − U) − |U| is the deficiency.
        let odd = odd_components_without(&g, &w.set);
        prop_assert_eq!(odd, w.odd_components);
        prop_assert_eq!(odd - w.set.len(), w.deficiency);
    }

    #[test]
    fn gallai_edmonds_set_certifies(g in graph(12)) {
        let (m, even) = gallai_edmonds_even_set(&g);
        prop_assert_eq!(m.len(), brute_matching(&g));
        // Every maximum matching misses some vertex of D exactly when deficiency > 0.
        if 2 * m.len() < g.n() {
            prop_assert!(!even.is_empty());
        }
        for v in 0..g.n() {
            if !m.covers(v) {
                prop_assert!(even.contains(v));
            }
        }
    }

    #[test]
    fn colour_classes_partition_edges((g, c) in coloured_graph(10, 4)) {
        let mut total = 0;
        for i in 1..=c.r() {
            let class = colour_class(&g, &c, i).unwrap();
            prop_assert!(class.check_subgraph_of(&g).is_ok());
            total += class.edge_count();
        }
        prop_assert_eq!(total, g.edge_count());
    }

    #[test]
    fn mono_matching_is_the_best_class((g, c) in coloured_graph(10, 4)) {
        let mm = max_mono_matching(&g, &c).unwrap();
        for i in 1..=c.r() {
            prop_assert_eq!(mm.per_colour[i - 1], brute_matching(&colour_class(&g, &c, i).unwrap()));
        }
        prop_assert!(mm.matching.edges().iter().all(|e| c.colour_of(e.u(), e.v()) == Some(mm.colour)));
        let best = *mm.per_colour.iter().max().unwrap();
        prop_assert_eq!(mm.matching.len(), best);
        prop_assert_eq!(mm.colour, mm.per_colour.iter().position(|&x| x == best).unwrap() + 1);
    }

    #[test]
    fn mono_lower_bound((g, c) in coloured_graph(9, 4)) {
        prop_assume!(g.n() >= 2 && g.min_degree() >= 1);
        let bound = mono_matching_bound(g.n(), c.r(), g.min_degree()).unwrap();
        let got = max_mono_matching(&g, &c).unwrap().matching.len();
        prop_assert!(got as i64 >= bound.ceil().to_integer());
    }

    #[test]
    fn component_inequalities(g in graph(12)) {
        prop_assert!(component_bounds_check(&g).holds());
    }
}

/// All 2-colourings of every graph on five vertices with no isolated vertex.
#[test]
fn mono_lower_bound_exhaustive_n5() {
    let n = 5;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut instances = 0;
    for bits in 0u32..1 << pairs.len() {
        let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
        if g.min_degree() == 0 {
            continue;
        }
        let bound = mono_matching_bound(n, 2, g.min_degree()).unwrap().ceil().to_integer() as usize;
        let m = g.edge_count();
        for cbits in 0u32..1 << m {
            let mut k = 0;
            let c = EdgeColouring::from_fn(&g, 2, |_| {
                k += 1;
                1 + (cbits >> (k - 1) & 1) as usize
            })
            .unwrap();
            let best = (1..=2).map(|i| brute_matching(&colour_class(&g, &c, i).unwrap())).max().unwrap();
            assert!(best >= bound, "graph {bits:#x} colouring {cbits:#x}: {best} < {bound}");
            instances += 1;
        }
    }
    assert!(instances > 10_000);
}
