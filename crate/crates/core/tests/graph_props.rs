use mhc_core::canon::{canonical_form, canonical_labeling};
use mhc_core::constructions::{construct, valid_parameters, Family};
use mhc_core::graph::{Edge, Graph};
use proptest::prelude::*;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(1, max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(g in arb_graph(1, 20)) {
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
            prop_assert!(!g.has_edge(u, u));
        }
    }

    #[test]
    fn handshake(g in arb_graph(1, 30)) {
        prop_assert_eq!(g.degree_profile().degree_sum(), 2 * g.size());
        prop_assert_eq!(g.edges().count(), g.size());
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph(2, 10)) {
        let k = g.vertex_connectivity().unwrap();
        prop_assert!(k <= g.min_degree());
        prop_assert!(g.is_k_connected(k));
        prop_assert!(!g.is_k_connected(k + 1));
    }

    #[test]
    fn edge_removal_is_a_fresh_value(g in arb_graph(2, 12)) {
        if let Some(e) = g.edges().next() {
            let h = g.remove_edge(e).unwrap();
            prop_assert!(g.has_edge(e.lo(), e.hi()));
            prop_assert!(!h.has_edge(e.lo(), e.hi()));
            prop_assert_eq!(h.size() + 1, g.size());
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_relabeled(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_labeling_produces_the_form(g in arb_graph(1, 12)) {
        let (form, order) = canonical_labeling(&g).unwrap();
        // vertex order[p] of g sits at position p of the canonical graph
        let mut perm = vec![0; g.order()];
        for (p, &v) in order.iter().enumerate() {
            perm[v] = p;
        }
        prop_assert_eq!(g.relabel(&perm), form.to_graph());
        prop_assert_eq!(canonical_form(&form.to_graph()).unwrap(), form);
    }
}

#[test]
fn hundred_relabelings_of_constructions() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for (n, delta) in valid_parameters(12) {
        let g = construct(n, delta).unwrap().graph;
        let c = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), c);
        }
    }
}

#[test]
fn constructions_match_closed_forms() {
    for (n, delta) in valid_parameters(20) {
        let lg = construct(n, delta).unwrap();
        let g = &lg.graph;
        assert_eq!((g.order(), g.max_degree()), (n, delta));
        let mut expected = vec![3; n];
        expected[0] = delta;
        let size = match lg.family {
            Family::Wheel => (n - 1) + (n - 1),
            Family::CaseOdd => (delta + 3 * (n - 1)) / 2,
            Family::CaseEven => {
                expected[1] = 4;
                (delta + 3 * n - 2) / 2
            }
        };
        if lg.family == Family::Wheel {
            expected[0] = n - 1;
        }
        expected.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(g.degree_profile().sequence(), expected, "({n}, {delta})");
        assert_eq!(g.size(), size, "({n}, {delta})");
        assert_eq!(g.size() * 2, expected.iter().sum::<usize>());
    }
}

#[test]
fn degree_three_endpoints() {
    for (n, delta) in valid_parameters(20).filter(|&(n, d)| d < n - 1) {
        let lg = construct(n, delta).unwrap();
        let g = &lg.graph;
        let without: Vec<Edge> = g
            .edges()
            .filter(|e| g.degree(e.lo()) != 3 && g.degree(e.hi()) != 3)
            .collect();
        match lg.family {
            Family::CaseOdd => assert!(without.is_empty()),
            _ => {
                let x = lg.vertex_by_label("x").unwrap();
                let z1 = lg.vertex_by_label("z1").unwrap();
                assert_eq!(without, [Edge::new(x, z1)]);
            }
        }
    }
}

#[test]
fn constructions_are_three_connected() {
    for (n, delta) in valid_parameters(14) {
        let g = construct(n, delta).unwrap().graph;
        assert_eq!(g.vertex_connectivity().unwrap(), 3, "({n}, {delta})");
    }
}
