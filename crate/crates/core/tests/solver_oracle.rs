use mhc_core::graph::Graph;
use mhc_core::solver::{find_hamilton_path, hamilton_path_exists, is_hamiltonian_connected, is_hamiltonian_connected_with, Pruning};
use mhc_core::verify_path;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tries every ordering of the interior vertices.
fn brute_force(g: &Graph, u: usize, v: usize) -> bool {
    fn extend(g: &Graph, cur: usize, v: usize, left: &mut Vec<usize>) -> bool {
        if left.is_empty() {
            return g.has_edge(cur, v);
        }
        for idx in 0..left.len() {
            let w = left.swap_remove(idx);
            let ok = g.has_edge(cur, w) && extend(g, w, v, left);
            left.push(w);
            let last = left.len() - 1;
            left.swap(idx, last);
            if ok {
                return true;
            }
        }
        false
    }
    let mut inner: Vec<usize> = (0..g.order()).filter(|&x| x != u && x != v).collect();
    extend(g, u, v, &mut inner)
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn oracle_brute_force_itself() {
    let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    assert!(brute_force(&c5, 0, 1));
    assert!(!brute_force(&c5, 0, 2));
    assert!(brute_force(&Graph::complete(4).unwrap(), 0, 3));
}

#[test]
fn dp_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 4..=7 {
        for t in 0..1000 {
            let p = 0.3 + 0.5 * (t % 5) as f64 / 4.0;
            let g = random_graph(&mut rng, n, p);
            for u in 0..n {
                for v in u + 1..n {
                    assert_eq!(hamilton_path_exists(&g, u, v).unwrap(), brute_force(&g, u, v), "{g:?} ({u}, {v})");
                }
            }
        }
    }
}

#[test]
fn pruning_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut fired = 0;
    for t in 0..600 {
        let n = 4 + t % 7;
        let g = random_graph(&mut rng, n, 0.55);
        let r = is_hamiltonian_connected(&g).unwrap();
        if r.pruned_by.is_some() {
            fired += 1;
            assert!(!is_hamiltonian_connected_with(&g, Pruning::None).unwrap().is_hc);
        } else {
            assert_eq!(r.is_hc, is_hamiltonian_connected_with(&g, Pruning::None).unwrap().is_hc);
        }
        assert!(!(r.is_hc && r.failing_pair.is_some()));
    }
    assert!(fired > 0);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetric_in_endpoints(g in arb_graph(9)) {
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                prop_assert_eq!(hamilton_path_exists(&g, u, v).unwrap(), hamilton_path_exists(&g, v, u).unwrap());
            }
        }
    }

    #[test]
    fn monotone_under_edge_addition(g in arb_graph(9), a in 0usize..9, b in 0usize..9) {
        let n = g.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let bigger = g.add_edge((a, b)).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if hamilton_path_exists(&g, u, v).unwrap() {
                    prop_assert!(hamilton_path_exists(&bigger, u, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn certificates_verify(g in arb_graph(10)) {
        let n = g.order();
        for u in 0..n {
            for v in u + 1..n {
                match find_hamilton_path(&g, u, v).unwrap() {
                    Some(p) => {
                        prop_assert!(p.verified && verify_path(&g, &p));
                        prop_assert_eq!(p.endpoints, (u, v));
                    }
                    None => prop_assert!(!hamilton_path_exists(&g, u, v).unwrap()),
                }
            }
        }
    }
}
