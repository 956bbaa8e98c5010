use pancyclic::checks::{
    has_triangle_cover, hamilton_cycle, is_edge_pancyclic, is_pancyclic, is_vertex_pancyclic, CheckOptions,
};
use pancyclic::connectivity::is_k_connected;
use pancyclic::distance::{distance_layers, eccentricity};
use pancyclic::families::{
    a_graph, complete, cycle, fan, g_ring_order, g_ring_size, h_block, join, odd_extremal, path, q_graph,
    sequential_join, wheel, OddKind,
};
use pancyclic::{canonical_code, diameter, emit_graph6, parse_graph6, vertex_connectivity, Graph};
use proptest::prelude::*;

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn dense_graph(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    orders.prop_flat_map(|n| {
        proptest::collection::vec(0u8..10, n * (n - 1) / 2).prop_map(move |w| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if w[i] < 7 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_roundtrip(g in graph(20)) {
        let s = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn min_degree_is_smallest_row_weight(g in graph(20)) {
        let expected = g.rows().iter().map(|r| r.count_ones() as usize).min().unwrap();
        prop_assert_eq!(g.min_degree(), expected);
    }

    #[test]
    fn layers_are_sound(g in graph(14)) {
        prop_assume!(g.is_connected());
        let n = g.order();
        let mut ecc_max = 0;
        for x in 0..n {
            let layers = distance_layers(&g, x).unwrap();
            prop_assert_eq!(layers.sizes().iter().sum::<usize>(), n);
            let level = |v: usize| (0..=layers.eccentricity()).find(|&i| layers.layer(i).contains(&v)).unwrap();
            for e in g.edges() {
                prop_assert!(level(e.u).abs_diff(level(e.v)) <= 1);
            }
            ecc_max = ecc_max.max(eccentricity(&g, x).unwrap());
        }
        prop_assert_eq!(diameter(&g).unwrap(), ecc_max);
    }

    #[test]
    fn connectivity_at_most_min_degree(g in graph(12)) {
        prop_assume!(g.order() >= 2);
        let k = vertex_connectivity(&g).unwrap();
        prop_assert!(k <= g.min_degree());
        for j in 0..=4 {
            prop_assert_eq!(is_k_connected(&g, j), k >= j);
        }
    }

    #[test]
    fn pancyclic_hierarchy(g in dense_graph(3..=9)) {
        let opts = CheckOptions::default();
        let edge = is_edge_pancyclic(&g, opts).unwrap().holds();
        let vertex = is_vertex_pancyclic(&g, opts).unwrap().holds();
        let pan = is_pancyclic(&g, opts).unwrap().holds();
        let ham = hamilton_cycle(&g).is_some();
        prop_assert!(!edge || vertex);
        prop_assert!(!vertex || pan);
        prop_assert!(!pan || ham);
        if edge {
            prop_assert!(has_triangle_cover(&g).holds());
            if g.order() >= 4 {
                prop_assert!(g.min_degree() >= 3);
                prop_assert!(vertex_connectivity(&g).unwrap() >= 2);
            }
        }
    }

    #[test]
    fn join_commutes_up_to_isomorphism(a in graph(6), b in graph(6)) {
        let ab = join(&a, &b).unwrap();
        let ba = join(&b, &a).unwrap();
        prop_assert_eq!(canonical_code(&ab), canonical_code(&ba));
        prop_assert_eq!(ab.size(), a.size() + b.size() + a.order() * b.order());
    }

    #[test]
    fn singleton_sequential_join_is_identity(g in graph(10)) {
        prop_assert_eq!(sequential_join(std::slice::from_ref(&g)).unwrap(), g);
    }
}

#[test]
fn family_sizes_and_lemma_properties() {
    for n in (8..=40).step_by(2) {
        let a = a_graph(n).unwrap().graph;
        assert_eq!((a.order(), a.size()), (n, 3 * n / 2));
        assert!(has_triangle_cover(&a).holds() && is_k_connected(&a, 2));
    }
    for n in (9..=41).step_by(2) {
        for kind in [OddKind::F, OddKind::G, OddKind::H] {
            let g = odd_extremal(kind, n).unwrap().graph;
            assert_eq!((g.order(), g.size()), (n, (3 * n + 1) / 2), "{kind:?} {n}");
            assert!(has_triangle_cover(&g).holds() && is_k_connected(&g, 2));
        }
    }
    for n in 4..=40 {
        let w = wheel(n).unwrap().graph;
        assert_eq!(w.size(), 2 * n - 2);
        assert!(has_triangle_cover(&w).holds() && is_k_connected(&w, 3));
    }
    for s in 2..=30 {
        assert_eq!(fan(s).unwrap().graph.size(), 2 * s - 3);
    }
    for k in 3..=11 {
        let h = h_block(k).unwrap();
        assert_eq!((h.graph().order(), h.graph().size()), (6 * k - 4, 12 * k - 11));
    }
    for k in 3..=6 {
        let n = g_ring_order(k);
        assert_eq!(n, 6 * k * k - 5 * k);
        assert_eq!(g_ring_size(k), 2 * n - k);
    }
    for n in 10..=64 {
        assert_eq!(q_graph(n).unwrap().graph.order(), n);
    }
    assert_eq!(complete(5).unwrap().size(), 10);
    assert_eq!(cycle(7).unwrap().size(), 7);
    assert_eq!(path(7).unwrap().size(), 6);
}

#[test]
fn family_graph6_roundtrip() {
    let mut gs = vec![wheel(20).unwrap().graph, a_graph(20).unwrap().graph, q_graph(20).unwrap().graph];
    gs.push(h_block(3).unwrap().graph().clone());
    gs.push(odd_extremal(OddKind::H, 19).unwrap().graph);
    for g in gs {
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
    }
}
