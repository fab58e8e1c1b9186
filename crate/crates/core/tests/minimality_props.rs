use mhc_core::constructions::{build_g, construct, valid_parameters};
use mhc_core::minimality::{fast_minimality_argument, is_minimally_hc, is_minimally_hc_with, Refutation, Strategy};
use mhc_core::solver::{is_hamiltonian_connected_with, Pruning};
use rand::seq::IndexedRandom;
use rand::SeedableRng;

#[test]
fn fast_argument_is_sound() {
    for (n, delta) in valid_parameters(14) {
        let lg = construct(n, delta).unwrap();
        let arg = fast_minimality_argument(&lg).expect("argument applies to every construction");
        assert_eq!(arg.degree_drop.len() + arg.connectivity_drop.len(), lg.graph.size());
        let full = is_minimally_hc_with(&lg.graph, Strategy::FullSolver).unwrap();
        assert!(full.is_minimal, "({n}, {delta})");
    }
}

#[test]
fn cubic_constructions_are_all_degree_drop() {
    for n in (6..=20).step_by(2) {
        let g = build_g(n, 3).unwrap().graph;
        let v = is_minimally_hc(&g).unwrap();
        assert!(v.is_minimal);
        assert!(v.edge_evidence.iter().all(|e| e.reason == Some(Refutation::DegreeDrop)));
    }
}

#[test]
fn evidence_is_exhaustive_and_ordered() {
    for (n, delta) in valid_parameters(12) {
        let g = construct(n, delta).unwrap().graph;
        let v = is_minimally_hc(&g).unwrap();
        let edges: Vec<_> = g.edges().collect();
        let listed: Vec<_> = v.edge_evidence.iter().map(|e| e.edge).collect();
        assert_eq!(listed, edges);
        for e in &v.edge_evidence {
            if e.reason == Some(Refutation::DegreeDrop) {
                assert!(g.degree(e.edge.lo()) == 3 || g.degree(e.edge.hi()) == 3);
            }
            assert_eq!(e.still_hc, e.reason.is_none());
        }
    }
}

#[test]
fn random_edges_are_refuted_again() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (n, delta) in valid_parameters(16) {
        let g = construct(n, delta).unwrap().graph;
        let edges: Vec<_> = g.edges().collect();
        for e in edges.choose_multiple(&mut rng, 5) {
            let h = g.remove_edge(*e).unwrap();
            let r = is_hamiltonian_connected_with(&h, Pruning::None).unwrap();
            assert!(!r.is_hc, "({n}, {delta}) without {e}");
        }
    }
}

#[test]
fn dp_refutations_carry_a_pair() {
    let g = construct(8, 7).unwrap().graph;
    let v = is_minimally_hc_with(&g, Strategy::FullSolver).unwrap();
    for e in &v.edge_evidence {
        let (a, b) = e.refuting_pair.unwrap();
        let h = g.remove_edge(e.edge).unwrap();
        assert!(!mhc_core::solver::hamilton_path_exists(&h, a, b).unwrap());
    }
}
