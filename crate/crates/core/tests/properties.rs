use cozero_core::genus::{
    euler_girth_lower_bound, exact_genus, heuristic_upper, trace_faces, verify_certificate, Budget,
    EmbeddingCertificate, RotationSystem,
};
use cozero_core::graph::{blocks, graph_isomorphic};
use cozero_core::ring::{build_zn, direct_product, FiniteRing};
use cozero_core::SimpleGraph;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::with_vertices(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn connected(g: &SimpleGraph) -> SimpleGraph {
    let comp = g.components().into_iter().max_by_key(Vec::len).unwrap();
    g.induced_subgraph(&comp).unwrap()
}

fn zn_product() -> impl Strategy<Value = FiniteRing> {
    proptest::collection::vec(2u32..=9, 1..=3)
        .prop_filter("order cap", |ns| ns.iter().product::<u32>() <= 96)
        .prop_map(|ns| {
            let parts: Vec<FiniteRing> = ns.iter().map(|&n| build_zn(n).unwrap()).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                direct_product(&parts).unwrap()
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_bracket_and_certificates_verify(g in graph_strategy(7)) {
        let g = connected(&g);
        prop_assume!(g.edge_count() > 0);
        let b = exact_genus(&g, &Budget::quick());
        let upper = b.upper.expect("small graphs always get an embedding");
        prop_assert!(b.lower <= upper);
        prop_assert!(euler_girth_lower_bound(&g) <= b.lower);
        prop_assert!(b.exact, "quick budget settles graphs on 7 vertices");
        if let Some(c) = b.certificate() {
            prop_assert_eq!(verify_certificate(&g, c), Ok(true));
        }
    }

    #[test]
    fn genus_is_additive_over_blocks(g in graph_strategy(7)) {
        let g = connected(&g);
        prop_assume!(g.edge_count() > 0);
        let whole = exact_genus(&g, &Budget::quick());
        let sum: u32 = blocks(&g)
            .iter()
            .map(|b| exact_genus(b, &Budget::quick()).lower)
            .sum();
        prop_assert_eq!(Some(sum), whole.upper);
    }

    #[test]
    fn every_rotation_gives_at_least_the_genus(g in graph_strategy(6), seed in any::<u64>()) {
        let g = connected(&g);
        prop_assume!(g.edge_count() > 0);
        let best = exact_genus(&g, &Budget::quick()).lower;
        let rot = RotationSystem::sorted(&g);
        let trace = trace_faces(&g, &rot).unwrap();
        let chi = g.vertex_count() as i64 - g.edge_count() as i64 + trace.faces.len() as i64;
        prop_assert_eq!((2 - chi) % 2, 0);
        prop_assert!(((2 - chi) / 2) as u32 >= best);
        if let Some(c) = heuristic_upper(&g, 1, 200, seed) {
            prop_assert!(c.genus >= best);
            prop_assert_eq!(verify_certificate(&g, &c), Ok(true));
        }
    }

    #[test]
    fn certificate_json_round_trip(g in graph_strategy(6)) {
        let g = connected(&g);
        prop_assume!(g.edge_count() > 0);
        let c = EmbeddingCertificate::new(&g, RotationSystem::sorted(&g)).unwrap();
        let back = EmbeddingCertificate::from_json(&c.to_json()).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(verify_certificate(&g, &back), Ok(true));
    }

    #[test]
    fn graph_json_round_trip(g in graph_strategy(8)) {
        let back = SimpleGraph::parse_json(&g.export_json()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn relabelled_graphs_are_isomorphic(g in graph_strategy(7), shift in 0usize..7) {
        let n = g.vertex_count();
        let perm: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
        let mut h = SimpleGraph::with_vertices(n);
        for (u, v) in g.edges() {
            h.add_edge(perm[u], perm[v]).unwrap();
        }
        prop_assert!(graph_isomorphic(&g, &h).is_some());
    }

    #[test]
    fn cozero_graph_matches_definition(r in zn_product()) {
        let g = cozero_core::graph::cozero_divisor_graph(&r);
        let units = r.units().len();
        prop_assert_eq!(g.vertex_count(), r.size() - units - 1);
        // x ~ y iff x is not in Ry and y is not in Rx.
        let in_ideal = |x, y| r.elements().any(|t| r.mul(t, y) == x);
        let verts: Vec<_> = r.elements().filter(|&x| x != r.zero() && !r.is_unit(x)).collect();
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                prop_assert_eq!(g.has_edge(i, j), !in_ideal(x, y) && !in_ideal(y, x));
            }
        }
    }

    #[test]
    fn ring_axioms_hold_for_products(r in zn_product()) {
        prop_assert!(r.check_axioms().is_ok());
    }
}
