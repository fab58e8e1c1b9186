//! Exact Hamilton path decisions by subset dynamic programming.
//!
//! State: `reach[S]` is the set of vertices `v` such that some path starting
//! at the source visits exactly `S` and ends at `v`. One sweep from a source
//! decides every target at once by reading `reach[V]`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, full_mask, Graph, GraphError};
use crate::path::HamiltonPath;

/// Largest order the subset DP accepts (`2^24` table entries).
pub const SOLVER_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pruning {
    /// Structural refutations (minimum degree, 3-connectivity) for `n ≥ 4`.
    Structural,
    /// Decide every pair by DP.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PruneReason {
    MinDegree,
    Connectivity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HcResult {
    pub is_hc: bool,
    /// Pairs confirmed to have a Hamilton path before the answer was known.
    pub witness_pairs_checked: usize,
    /// Lexicographically first pair without a Hamilton path, when the DP ran.
    pub failing_pair: Option<(usize, usize)>,
    pub pruned_by: Option<PruneReason>,
}

fn check_order(g: &Graph) -> Result<(), GraphError> {
    if g.order() > SOLVER_MAX_ORDER {
        Err(GraphError::TooLarge {
            what: "Hamilton path solver",
            n: g.order(),
            max: SOLVER_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

fn check_vertices(g: &Graph, u: usize, v: usize) -> Result<(), GraphError> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(GraphError::VertexOutOfRange { v: w, n: g.order() });
        }
    }
    Ok(())
}

/// Reusable DP table.
struct Sweep {
    reach: Vec<u32>,
}

impl Sweep {
    fn new(n: usize) -> Self {
        Sweep {
            reach: vec![0; 1usize << n],
        }
    }

    /// Fills the table for paths starting at `source`; returns the endpoint
    /// set of Hamilton paths.
    fn run(&mut self, g: &Graph, source: usize) -> u32 {
        let n = g.order();
        let full = full_mask(n) as usize;
        self.reach.fill(0);
        self.reach[1 << source] = 1 << source;
        let src_bit = 1usize << source;
        for set in 0..=full {
            let ends = self.reach[set];
            if ends == 0 || set & src_bit == 0 {
                continue;
            }
            for v in bits(u64::from(ends)) {
                for w in bits(g.neighbors(v) & !(set as u64)) {
                    self.reach[set | 1 << w] |= 1 << w;
                }
            }
        }
        self.reach[full]
    }

    /// Rebuilds a path ending at `target` from a filled table.
    fn path_to(&self, g: &Graph, target: usize) -> Vec<usize> {
        let n = g.order();
        let mut set = full_mask(n) as usize;
        let mut cur = target;
        let mut rev = Vec::with_capacity(n);
        rev.push(cur);
        while set.count_ones() > 1 {
            let prev_set = set & !(1 << cur);
            let candidates = u64::from(self.reach[prev_set]) & g.neighbors(cur);
            let prev = candidates.trailing_zeros() as usize;
            debug_assert!(candidates != 0, "broken DP parent chain");
            rev.push(prev);
            set = prev_set;
            cur = prev;
        }
        rev.reverse();
        rev
    }
}

/// Endpoints `v` of Hamilton paths starting at `source`, as a mask.
pub fn hamilton_targets(g: &Graph, source: usize) -> Result<u64, GraphError> {
    check_order(g)?;
    check_vertices(g, source, source)?;
    Ok(u64::from(Sweep::new(g.order()).run(g, source)))
}

/// Whether a Hamilton `(u, v)`-path exists.
pub fn hamilton_path_exists(g: &Graph, u: usize, v: usize) -> Result<bool, GraphError> {
    check_order(g)?;
    check_vertices(g, u, v)?;
    if u == v {
        return Ok(g.order() == 1);
    }
    Ok(hamilton_targets(g, u)? >> v & 1 == 1)
}

/// A Hamilton `(u, v)`-path, if one exists, rebuilt from the DP table.
pub fn find_hamilton_path(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<Option<HamiltonPath>, GraphError> {
    check_order(g)?;
    check_vertices(g, u, v)?;
    if u == v {
        return Ok(None);
    }
    let mut sweep = Sweep::new(g.order());
    if sweep.run(g, u) >> v & 1 == 0 {
        return Ok(None);
    }
    let path = HamiltonPath::certify(g, sweep.path_to(g, v), None);
    debug_assert!(path.verified);
    Ok(Some(path))
}

/// Hamiltonian-connectivity with structural pruning for `n ≥ 4`.
pub fn is_hamiltonian_connected(g: &Graph) -> Result<HcResult, GraphError> {
    is_hamiltonian_connected_with(g, Pruning::Structural)
}

/// Hamiltonian-connectivity. Pairs are decided in lexicographic order, one
/// DP sweep per source.
pub fn is_hamiltonian_connected_with(g: &Graph, pruning: Pruning) -> Result<HcResult, GraphError> {
    check_order(g)?;
    let n = g.order();
    let pruned = |reason| HcResult {
        is_hc: false,
        witness_pairs_checked: 0,
        failing_pair: None,
        pruned_by: Some(reason),
    };
    if n <= 3 {
        // K1, K2, K3 are hamiltonian-connected; nothing smaller on 2 or 3
        // vertices is.
        let complete = g.size() == n * (n - 1) / 2;
        let failing_pair = if complete {
            None
        } else {
            first_non_edge(g)
        };
        return Ok(HcResult {
            is_hc: complete,
            witness_pairs_checked: if complete { n * (n - 1) / 2 } else { 0 },
            failing_pair,
            pruned_by: None,
        });
    }
    if pruning == Pruning::Structural {
        if g.min_degree() < 3 {
            return Ok(pruned(PruneReason::MinDegree));
        }
        if !g.is_k_connected(3) {
            return Ok(pruned(PruneReason::Connectivity));
        }
    }
    let mut sweep = Sweep::new(n);
    let mut checked = 0;
    for u in 0..n - 1 {
        let targets = u64::from(sweep.run(g, u));
        let wanted = full_mask(n) & !full_mask(u + 1);
        let missing = wanted & !targets;
        if missing != 0 {
            let v = missing.trailing_zeros() as usize;
            checked += (targets & wanted & full_mask(v)).count_ones() as usize;
            return Ok(HcResult {
                is_hc: false,
                witness_pairs_checked: checked,
                failing_pair: Some((u, v)),
                pruned_by: None,
            });
        }
        checked += wanted.count_ones() as usize;
    }
    Ok(HcResult {
        is_hc: true,
        witness_pairs_checked: checked,
        failing_pair: None,
        pruned_by: None,
    })
}

/// On at most three vertices a Hamilton `(u, v)`-path exists iff the graph
/// is complete or `{u, v}` ends a spanning path; the first non-edge is then
/// always a failing pair.
fn first_non_edge(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !matches!(hamilton_path_exists(g, u, v), Ok(true)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn complete_graph_pairs() {
        let k4 = Graph::complete(4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert!(hamilton_path_exists(&k4, u, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn cycle_and_star() {
        let c5 = cycle(5);
        assert!(hamilton_path_exists(&c5, 0, 1).unwrap());
        assert!(!hamilton_path_exists(&c5, 0, 2).unwrap());
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!hamilton_path_exists(&star, 1, 2).unwrap());
    }

    #[test]
    fn certificates() {
        let c4 = cycle(4);
        let p = find_hamilton_path(&c4, 0, 1).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 3, 2, 1]);
        assert!(p.verified);

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(find_hamilton_path(&p4, 0, 3).unwrap().unwrap().vertices, vec![0, 1, 2, 3]);
        assert_eq!(find_hamilton_path(&cycle(5), 0, 2).unwrap(), None);
    }

    #[test]
    fn hc_examples() {
        let k4 = is_hamiltonian_connected(&Graph::complete(4).unwrap()).unwrap();
        assert!(k4.is_hc);
        assert_eq!(k4.witness_pairs_checked, 6);

        let c6 = is_hamiltonian_connected(&cycle(6)).unwrap();
        assert!(!c6.is_hc);
        assert_eq!(c6.pruned_by, Some(PruneReason::MinDegree));

        let full = is_hamiltonian_connected_with(&cycle(6), Pruning::None).unwrap();
        assert!(!full.is_hc);
        assert_eq!(full.failing_pair, Some((0, 2)));
        assert_eq!(full.witness_pairs_checked, 1);
    }

    #[test]
    fn connectivity_pruning() {
        // two K4s sharing an edge: δ = 3 but a 2-vertex cut
        let g = Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        assert_eq!(g.min_degree(), 3);
        let r = is_hamiltonian_connected(&g).unwrap();
        assert_eq!(r.pruned_by, Some(PruneReason::Connectivity));
        assert!(!is_hamiltonian_connected_with(&g, Pruning::None).unwrap().is_hc);
    }

    #[test]
    fn tiny_orders() {
        for n in 1..=3 {
            assert!(is_hamiltonian_connected(&Graph::complete(n).unwrap()).unwrap().is_hc);
        }
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let r = is_hamiltonian_connected(&p3).unwrap();
        assert!(!r.is_hc);
        assert_eq!(r.failing_pair, Some((0, 1)));
        assert!(!is_hamiltonian_connected(&Graph::empty(2).unwrap()).unwrap().is_hc);
    }

    #[test]
    fn order_bound() {
        let g = Graph::complete(25).unwrap();
        assert!(matches!(hamilton_path_exists(&g, 0, 1), Err(GraphError::TooLarge { .. })));
        assert!(matches!(is_hamiltonian_connected(&g), Err(GraphError::TooLarge { .. })));
    }
}
