//! Minimality verdicts: does deleting any single edge destroy
//! hamiltonian-connectivity?
//!
//! Two refutations need no path search once `n ≥ 4`, since a
//! hamiltonian-connected graph of that order is 3-connected: an edge with an
//! endpoint of degree 3 leaves a vertex of degree 2, and an edge whose removal
//! leaves a 2-vertex cut. Every other edge is decided by the DP solver.

use alloc::vec::Vec;

use crate::constructions::{Family, LabeledGraph};
use crate::formulas::verify_all_pairs;
use crate::graph::{Edge, Graph, GraphError};
use crate::solver::{is_hamiltonian_connected, is_hamiltonian_connected_with, Pruning, SOLVER_MAX_ORDER};

pub const MIN_ORDER: usize = 4;

/// Why `G − e` is not hamiltonian-connected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refutation {
    /// An endpoint of `e` has degree 3 in `G`.
    DegreeDrop,
    /// `κ(G − e) < 3`.
    ConnectivityDrop,
    /// The solver found a pair without a Hamilton path in `G − e`.
    DpRefuted,
}

impl Refutation {
    pub fn name(self) -> &'static str {
        match self {
            Refutation::DegreeDrop => "DegreeDrop",
            Refutation::ConnectivityDrop => "ConnectivityDrop",
            Refutation::DpRefuted => "DpRefuted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Degree and connectivity refutations first, DP for the rest.
    Fast,
    /// Run the unpruned solver on every `G − e`.
    FullSolver,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeEvidence {
    pub edge: Edge,
    /// `None` exactly when `G − e` is still hamiltonian-connected.
    pub reason: Option<Refutation>,
    pub still_hc: bool,
    /// Lexicographically first pair without a Hamilton path in `G − e`, when
    /// the DP decided the edge.
    pub refuting_pair: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MhcVerdict {
    pub is_hc: bool,
    pub is_minimal: bool,
    /// One record per edge, in lexicographic edge order.
    pub edge_evidence: Vec<EdgeEvidence>,
    pub fast_path_used: bool,
}

impl MhcVerdict {
    /// Edges whose deletion keeps the graph hamiltonian-connected.
    pub fn surviving_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edge_evidence.iter().filter(|e| e.still_hc).map(|e| e.edge)
    }
}

fn check_order(g: &Graph) -> Result<(), GraphError> {
    let n = g.order();
    if n < MIN_ORDER {
        return Err(GraphError::TooSmall {
            what: "minimality check",
            n,
            min: MIN_ORDER,
        });
    }
    if n > SOLVER_MAX_ORDER {
        return Err(GraphError::TooLarge {
            what: "minimality check",
            n,
            max: SOLVER_MAX_ORDER,
        });
    }
    Ok(())
}

fn structural_reason(g: &Graph, e: Edge) -> Option<Refutation> {
    if g.degree(e.lo()) == 3 || g.degree(e.hi()) == 3 {
        return Some(Refutation::DegreeDrop);
    }
    let h = g.remove_edge(e).ok()?;
    (!h.is_k_connected(3)).then_some(Refutation::ConnectivityDrop)
}

fn edge_evidence(g: &Graph, e: Edge, strategy: Strategy) -> Result<EdgeEvidence, GraphError> {
    if strategy == Strategy::Fast {
        if let Some(reason) = structural_reason(g, e) {
            return Ok(EdgeEvidence {
                edge: e,
                reason: Some(reason),
                still_hc: false,
                refuting_pair: None,
            });
        }
    }
    let r = is_hamiltonian_connected_with(&g.remove_edge(e)?, Pruning::None)?;
    Ok(EdgeEvidence {
        edge: e,
        reason: (!r.is_hc).then_some(Refutation::DpRefuted),
        still_hc: r.is_hc,
        refuting_pair: r.failing_pair,
    })
}

/// Minimality verdict with the fast refutations enabled.
pub fn is_minimally_hc(g: &Graph) -> Result<MhcVerdict, GraphError> {
    is_minimally_hc_with(g, Strategy::Fast)
}

/// Minimality verdict; every edge gets an evidence record.
pub fn is_minimally_hc_with(g: &Graph, strategy: Strategy) -> Result<MhcVerdict, GraphError> {
    check_order(g)?;
    let is_hc = is_hamiltonian_connected(g)?.is_hc;
    let edge_evidence = g
        .edges()
        .map(|e| edge_evidence(g, e, strategy))
        .collect::<Result<Vec<_>, _>>()?;
    let fast_path_used = edge_evidence
        .iter()
        .any(|e| matches!(e.reason, Some(Refutation::DegreeDrop | Refutation::ConnectivityDrop)));
    let is_minimal = is_hc && edge_evidence.iter().all(|e| !e.still_hc);
    Ok(MhcVerdict {
        is_hc,
        is_minimal,
        edge_evidence,
        fast_path_used,
    })
}

/// The split of edges behind a purely structural minimality argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastArgument {
    pub degree_drop: Vec<Edge>,
    pub connectivity_drop: Vec<Edge>,
}

/// Applies the structural argument to an arbitrary graph: it must be
/// hamiltonian-connected (checked by the solver) and every edge must fall to
/// a degree or connectivity refutation.
pub fn structural_argument(g: &Graph) -> Result<Option<FastArgument>, GraphError> {
    check_order(g)?;
    if !is_hamiltonian_connected(g)?.is_hc {
        return Ok(None);
    }
    Ok(split_edges(g))
}

fn split_edges(g: &Graph) -> Option<FastArgument> {
    let mut arg = FastArgument {
        degree_drop: Vec::new(),
        connectivity_drop: Vec::new(),
    };
    for e in g.edges() {
        match structural_reason(g, e)? {
            Refutation::DegreeDrop => arg.degree_drop.push(e),
            _ => arg.connectivity_drop.push(e),
        }
    }
    Some(arg)
}

/// The structural argument for a construction. Hamiltonian-connectivity of
/// `G(n, Δ)` and `H(n, Δ)` comes from the certified path templates; the wheel
/// is checked by the solver. Absent when any hypothesis fails.
pub fn fast_minimality_argument(lg: &LabeledGraph) -> Option<FastArgument> {
    let g = &lg.graph;
    if g.order() < MIN_ORDER {
        return None;
    }
    let hc = match lg.family {
        Family::Wheel => is_hamiltonian_connected(g).ok()?.is_hc,
        Family::CaseOdd | Family::CaseEven => verify_all_pairs(lg).ok()?.all_verified(),
    };
    if !hc {
        return None;
    }
    split_edges(g)
}
