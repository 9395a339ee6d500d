//! Property tests against the brute-force oracles in `common`.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use sb2v::*;

/// A digraph on `1..=n` from a bit per ordered pair.
fn digraph_strategy(max_n: u32) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| (a, b)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let arcs = pairs
                .iter()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(&p, _)| Arc::from(p));
            Digraph::with_vertices(1..=n, arcs).unwrap()
        })
    })
}

fn arcs_of(g: &Digraph) -> Vec<(u32, u32)> {
    g.arcs().iter().map(|a| (a.tail, a.head)).collect()
}

fn two_vsb_strategy() -> impl Strategy<Value = Digraph> {
    (4usize..=8, 0usize..6, any::<u64>())
        .prop_map(|(n, extra, seed)| generate::random_2vsb(n, extra, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn underlying_edge_count_is_between_half_m_and_m(g in digraph_strategy(7)) {
        let e = g.underlying().edge_count();
        prop_assert!(e <= g.m());
        prop_assert!(2 * e >= g.m());
    }

    #[test]
    fn remove_vertex_commutes_with_underlying(g in digraph_strategy(6), pick in any::<prop::sample::Index>()) {
        let v = g.vertices()[pick.index(g.n())];
        let a = g.remove_vertex(v).unwrap().underlying();
        let b = g.underlying().remove_vertex(v).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn edge_list_round_trip(g in digraph_strategy(7)) {
        let text = g.to_edge_list();
        let back = Digraph::from_edge_list(&text).unwrap();
        prop_assert_eq!(back.to_edge_list(), text);
        prop_assert_eq!(back.arcs(), g.arcs());
    }

    #[test]
    fn scc_matches_mutual_reachability(g in digraph_strategy(8)) {
        let expected = common::reachability_classes(g.vertices(), &arcs_of(&g));
        prop_assert_eq!(scc(&g).blocks, expected);
        prop_assert_eq!(is_strongly_connected(&g), common::sc_on(g.vertices(), &arcs_of(&g)));
    }

    #[test]
    fn blocks_partition_edges_and_match_brute_articulation(g in digraph_strategy(8)) {
        let ug = g.underlying();
        let d = blocks(&ug);
        let mut seen = BTreeSet::new();
        for edges in &d.block_edges {
            for e in edges {
                prop_assert!(seen.insert(*e), "edge in two blocks");
            }
        }
        prop_assert_eq!(seen, ug.edge_set());
        for (i, a) in d.blocks.iter().enumerate() {
            for b in &d.blocks[i + 1..] {
                let shared: Vec<_> = a.iter().filter(|v| b.contains(v)).collect();
                prop_assert!(shared.len() <= 1);
                for v in shared {
                    prop_assert!(d.articulation_points.contains(v));
                }
            }
        }
        prop_assert_eq!(&d.articulation_points, &common::brute_articulation(g.vertices(), &arcs_of(&g)));
        prop_assert_eq!(is_biconnected(&ug), common::bicon_on(g.vertices(), &arcs_of(&g)));
    }

    #[test]
    fn predicates_match_brute_force(g in digraph_strategy(6)) {
        prop_assert_eq!(is_strongly_biconnected(&g), common::brute_sb(&g));
        prop_assert_eq!(is_2vc_digraph(&g), common::brute_2vc(&g));
        prop_assert_eq!(is_2vsb(&g), common::brute_2vsb(&g));
    }

    #[test]
    fn degree_consequences(g in digraph_strategy(6)) {
        if is_2vc_digraph(&g) {
            for &v in g.vertices() {
                prop_assert!(g.in_degree(v) >= 2 && g.out_degree(v) >= 2);
            }
        }
        let ug = g.underlying();
        if is_3vc_ugraph(&ug) {
            for &v in ug.vertices() {
                prop_assert!(ug.degree(v) >= 3);
            }
        }
    }

    #[test]
    fn two_vsb_implies_2vc_and_3vc_underlying(g in digraph_strategy(6)) {
        if is_2vsb(&g) {
            prop_assert!(is_2vc_digraph(&g));
            if g.n() >= 4 {
                prop_assert!(is_3vc_ugraph(&g.underlying()));
            }
        }
    }

    #[test]
    fn sbcc_count_for_strongly_connected_graphs(g in digraph_strategy(7)) {
        let d = sbcc(&g);
        if is_strongly_connected(&g) {
            prop_assert_eq!(d.t(), blocks(&g.underlying()).len());
            prop_assert_eq!(d.t() == 1, is_strongly_biconnected(&g));
        }
        // Every intra-SCC arc lies in exactly one component containing both ends.
        let p = scc(&g);
        for a in g.arcs() {
            let intra = p.block_of(a.tail) == p.block_of(a.head);
            prop_assert_eq!(d.arc_component.contains_key(a), intra);
            if let Some(&c) = d.arc_component.get(a) {
                prop_assert!(d.components[c].contains(&a.tail) && d.components[c].contains(&a.head));
            }
        }
    }

    #[test]
    fn adding_an_arc_never_increases_sbcc_count(g in digraph_strategy(7), pick in any::<prop::sample::Index>()) {
        let n = g.n() as u32;
        let missing: Vec<Arc> = (1..=n)
            .flat_map(|a| (1..=n).filter(move |&b| b != a).map(move |b| Arc::new(a, b)))
            .filter(|a| !g.contains_arc(a))
            .collect();
        if !missing.is_empty() {
            let bigger = g.with_arcs_added([missing[pick.index(missing.len())]]).unwrap();
            prop_assert!(sbcc(&bigger).t() <= sbcc(&g).t());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn greedy_results_are_minimal_and_bounded(g in two_vsb_strategy(), seed in any::<u64>()) {
        let n = g.n();
        for order in [DeletionOrder::lexicographic(), DeletionOrder::input(), DeletionOrder::random(seed)] {
            let core = minimal_2vc_subgraph(&g, order).unwrap();
            prop_assert!(core.len() <= 4 * n);
            prop_assert!(is_2vc_digraph(&g.subgraph_with_arcs(&core).unwrap()));
            for arc in &core {
                let mut fewer = core.clone();
                fewer.remove(arc);
                prop_assert!(!is_2vc_digraph(&g.subgraph_with_arcs(&fewer).unwrap()));
            }
            prop_assert_eq!(&core, &minimal_2vc_subgraph(&g, order).unwrap());

            let ug = g.underlying();
            let u = minimal_3vc_subgraph(&ug, order).unwrap();
            prop_assert!(u.len() <= 3 * n);
            for e in &u {
                let mut fewer = u.clone();
                fewer.remove(e);
                prop_assert!(!is_3vc_ugraph(&ug.subgraph_with_edges(&fewer).unwrap()));
            }
        }
    }

    #[test]
    fn approximations_are_feasible_and_within_bounds(g in two_vsb_strategy(), seed in any::<u64>()) {
        let n = g.n();
        let order = DeletionOrder::random(seed);
        let r = approx_m2vsbss_alg1(&g, order).unwrap();
        prop_assert!(common::brute_2vsb(&g.subgraph_with_arcs(&r.arcs).unwrap()));
        prop_assert!(r.arcs.len() >= 2 * n);
        prop_assert!(r.arcs.len() <= r.l * (n - 1) + 4 * n);
        prop_assert!(r.arcs.is_subset(&g.arc_set()));
        let mut added = BTreeSet::new();
        for step in &r.trace {
            prop_assert!(step.added.len() <= n - 2);
            prop_assert!(step.t_history.windows(2).all(|w| w[1] < w[0]));
            for a in &step.added {
                prop_assert!(added.insert(*a));
            }
        }

        let u = union_algorithm(&g, order).unwrap();
        prop_assert!(u.union_arcs.len() <= 7 * n);
        prop_assert!(common::brute_2vsb(&g.subgraph_with_arcs(&u.union_arcs).unwrap()));
    }
}
