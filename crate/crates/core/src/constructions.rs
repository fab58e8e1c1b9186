//! The three extremal families and the `(n, Δ)` validity predicate.
//!
//! A minimally hamiltonian-connected graph of order `n ≥ 4` and maximum
//! degree `Δ` exists iff `3 ≤ Δ ≤ n − 1`, `Δ ≠ n − 2`, and `n` is even when
//! `Δ = 3`. Witnesses:
//!
//! - `Δ = n − 1`: the wheel `W_n = K_1 ∨ C_{n−1}`.
//! - `n − Δ` odd: `G(n, Δ)` with `k = Δ − 2`, `s = (n − Δ + 1) / 2` on
//!   `x_1..x_k, y_1..y_s, z_1..z_{s+1}`.
//! - `n − Δ` even: `H(n, Δ)` with `k = Δ − 1`, `s = (n − Δ − 2) / 2` on
//!   `x, y_1..y_k, z_0..z_s, w_1..w_{s+1}`.
//!
//! Vertex numbering is fixed: the wheel puts the hub at 0 and the rim at
//! `1..n`; `G` numbers `x`, then `y`, then `z`; `H` numbers `x`, then `y`,
//! `z`, `w`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph, GraphError};

/// Construction label of a vertex.
///
/// The wheel uses `Hub` for its centre and `X(1..n)` for the rim; `H(n, Δ)`
/// uses `Hub` for its vertex `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Hub,
    X(usize),
    Y(usize),
    Z(usize),
    W(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Wheel,
    /// `G(n, Δ)`, used when `n − Δ` is odd.
    CaseOdd,
    /// `H(n, Δ)`, used when `n − Δ` is even.
    CaseEven,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Wheel => "wheel",
            Family::CaseOdd => "case-odd",
            Family::CaseEven => "case-even",
        })
    }
}

/// Construction parameters. For the wheel `k` is the rim length and `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub n: usize,
    pub delta: usize,
    pub k: usize,
    pub s: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValidityReason {
    Ok,
    DeltaTooSmall,
    DeltaTooLarge,
    DeltaEqualsNMinus2,
    CubicOddOrder,
}

impl fmt::Display for ValidityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValidityReason::Ok => "OK",
            ValidityReason::DeltaTooSmall => "DeltaTooSmall",
            ValidityReason::DeltaTooLarge => "DeltaTooLarge",
            ValidityReason::DeltaEqualsNMinus2 => "DeltaEqualsNMinus2",
            ValidityReason::CubicOddOrder => "CubicOddOrder",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidityVerdict {
    pub valid: bool,
    pub reason: ValidityReason,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("order {n} is below 4")]
    OrderTooSmall { n: usize },
    #[error("(n, Δ) = ({n}, {delta}) is not realizable: {reason}")]
    Invalid {
        n: usize,
        delta: usize,
        reason: ValidityReason,
    },
    #[error("{family} needs n − Δ {expected}, got ({n}, {delta})")]
    WrongParity {
        family: Family,
        n: usize,
        delta: usize,
        expected: &'static str,
    },
    #[error("{family} needs Δ ≤ n − 3, got ({n}, {delta})")]
    DeltaOutOfCaseRange {
        family: Family,
        n: usize,
        delta: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decides whether some minimally hamiltonian-connected graph of order `n`
/// has maximum degree `delta`.
pub fn validity(n: usize, delta: usize) -> Result<ValidityVerdict, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::OrderTooSmall { n });
    }
    let reason = if delta < 3 {
        ValidityReason::DeltaTooSmall
    } else if delta > n - 1 {
        ValidityReason::DeltaTooLarge
    } else if delta == n - 2 {
        ValidityReason::DeltaEqualsNMinus2
    } else if delta == 3 && n % 2 == 1 {
        ValidityReason::CubicOddOrder
    } else {
        ValidityReason::Ok
    };
    Ok(ValidityVerdict {
        valid: reason == ValidityReason::Ok,
        reason,
    })
}

/// All `Δ` admitted by [`validity`] for order `n`, ascending.
pub fn valid_degrees(n: usize) -> Vec<usize> {
    (0..n)
        .filter(|&d| validity(n, d).is_ok_and(|v| v.valid))
        .collect()
}

fn require_valid(n: usize, delta: usize) -> Result<(), ConstructionError> {
    let verdict = validity(n, delta)?;
    if verdict.valid {
        Ok(())
    } else {
        Err(ConstructionError::Invalid {
            n,
            delta,
            reason: verdict.reason,
        })
    }
}

/// A construction together with its vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `roles[v]` labels vertex `v`; a bijection onto the vertex set.
    pub roles: Vec<Role>,
    pub family: Family,
    pub params: Params,
}

impl LabeledGraph {
    /// Vertex carrying `role`, if the role exists in this construction.
    pub fn vertex(&self, role: Role) -> Option<usize> {
        let Params { n, k, s, .. } = self.params;
        match (self.family, role) {
            (Family::Wheel, Role::Hub) => Some(0),
            (Family::Wheel, Role::X(i)) if (1..n).contains(&i) => Some(i),
            (Family::CaseOdd, Role::X(i)) if (1..=k).contains(&i) => Some(i - 1),
            (Family::CaseOdd, Role::Y(i)) if (1..=s).contains(&i) => Some(k + i - 1),
            (Family::CaseOdd, Role::Z(i)) if (1..=s + 1).contains(&i) => Some(k + s + i - 1),
            (Family::CaseEven, Role::Hub) => Some(0),
            (Family::CaseEven, Role::Y(i)) if (1..=k).contains(&i) => Some(i),
            (Family::CaseEven, Role::Z(i)) if i <= s => Some(k + 1 + i),
            (Family::CaseEven, Role::W(i)) if (1..=s + 1).contains(&i) => Some(k + s + 1 + i),
            _ => None,
        }
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    /// Printable name of vertex `v`, e.g. `x1`, `z0`, or `x` for the centre
    /// of `H(n, Δ)`.
    pub fn label(&self, v: usize) -> String {
        match (self.family, self.roles[v]) {
            (Family::Wheel, Role::Hub) => String::from("hub"),
            (_, Role::Hub) => String::from("x"),
            (_, Role::X(i)) => format!("x{i}"),
            (_, Role::Y(i)) => format!("y{i}"),
            (_, Role::Z(i)) => format!("z{i}"),
            (_, Role::W(i)) => format!("w{i}"),
        }
    }

    /// Vertex with the given printable name.
    pub fn vertex_by_label(&self, name: &str) -> Option<usize> {
        (0..self.graph.order()).find(|&v| self.label(v) == name)
    }
}

/// Collects edges between roles, dropping any pair whose role is absent.
struct EdgeSet<'a> {
    lg: &'a LabeledGraph,
    edges: Vec<Edge>,
}

impl EdgeSet<'_> {
    fn link(&mut self, a: Role, b: Role) {
        if let (Some(u), Some(v)) = (self.lg.vertex(a), self.lg.vertex(b)) {
            self.edges.push(Edge::new(u, v));
        }
    }
}

fn assemble(
    family: Family,
    params: Params,
    roles: Vec<Role>,
    add_edges: impl FnOnce(&mut EdgeSet<'_>),
) -> Result<LabeledGraph, ConstructionError> {
    let mut lg = LabeledGraph {
        graph: Graph::empty(params.n)?,
        roles,
        family,
        params,
    };
    debug_assert!(lg.roles.iter().enumerate().all(|(v, &r)| lg.vertex(r) == Some(v)));
    let mut set = EdgeSet {
        lg: &lg,
        edges: Vec::new(),
    };
    add_edges(&mut set);
    let edges = set.edges;
    lg.graph = Graph::from_edges(params.n, edges)?;
    Ok(lg)
}

/// The wheel `W_n`.
pub fn build_wheel(n: usize) -> Result<LabeledGraph, ConstructionError> {
    if n < 4 {
        return Err(ConstructionError::OrderTooSmall { n });
    }
    let rim = n - 1;
    let params = Params {
        n,
        delta: rim,
        k: rim,
        s: 0,
    };
    let roles = core::iter::once(Role::Hub).chain((1..n).map(Role::X)).collect();
    assemble(Family::Wheel, params, roles, |e| {
        for i in 1..=rim {
            e.link(Role::Hub, Role::X(i));
            e.link(Role::X(i), Role::X(i % rim + 1));
        }
    })
}

/// `G(n, Δ)` for `n − Δ` odd and `3 ≤ Δ ≤ n − 3`.
pub fn build_g(n: usize, delta: usize) -> Result<LabeledGraph, ConstructionError> {
    require_valid(n, delta)?;
    if (n - delta).is_multiple_of(2) {
        return Err(ConstructionError::WrongParity {
            family: Family::CaseOdd,
            n,
            delta,
            expected: "odd",
        });
    }
    if delta > n - 3 {
        return Err(ConstructionError::DeltaOutOfCaseRange {
            family: Family::CaseOdd,
            n,
            delta,
        });
    }
    let k = delta - 2;
    let s = (n - delta).div_ceil(2);
    let roles = (1..=k)
        .map(Role::X)
        .chain((1..=s).map(Role::Y))
        .chain((1..=s + 1).map(Role::Z))
        .collect();
    let params = Params { n, delta, k, s };
    assemble(Family::CaseOdd, params, roles, |e| {
        for i in 1..k {
            e.link(Role::X(i), Role::X(i + 1));
        }
        for i in 1..s {
            e.link(Role::Y(i), Role::Y(i + 1));
        }
        for i in 1..=s {
            e.link(Role::Z(i), Role::Z(i + 1));
        }
        for i in 1..=k {
            e.link(Role::Y(1), Role::X(i));
        }
        for i in 1..=s {
            e.link(Role::Y(i), Role::Z(i));
        }
        e.link(Role::X(1), Role::Z(1));
        e.link(Role::X(k), Role::Z(s + 1));
        e.link(Role::Y(s), Role::Z(s + 1));
    })
}

/// `H(n, Δ)` for `n − Δ` even and `4 ≤ Δ ≤ n − 3`.
pub fn build_h(n: usize, delta: usize) -> Result<LabeledGraph, ConstructionError> {
    require_valid(n, delta)?;
    if (n - delta) % 2 == 1 {
        return Err(ConstructionError::WrongParity {
            family: Family::CaseEven,
            n,
            delta,
            expected: "even",
        });
    }
    if delta > n - 3 {
        return Err(ConstructionError::DeltaOutOfCaseRange {
            family: Family::CaseEven,
            n,
            delta,
        });
    }
    let k = delta - 1;
    let s = (n - delta - 2) / 2;
    let roles = core::iter::once(Role::Hub)
        .chain((1..=k).map(Role::Y))
        .chain((0..=s).map(Role::Z))
        .chain((1..=s + 1).map(Role::W))
        .collect();
    let params = Params { n, delta, k, s };
    assemble(Family::CaseEven, params, roles, |e| {
        for i in 1..k {
            e.link(Role::Y(i), Role::Y(i + 1));
        }
        for i in 0..s {
            e.link(Role::Z(i), Role::Z(i + 1));
        }
        for i in 1..=s {
            e.link(Role::W(i), Role::W(i + 1));
        }
        for i in 1..=k {
            e.link(Role::Hub, Role::Y(i));
        }
        for i in 1..=s {
            e.link(Role::Z(i), Role::W(i));
        }
        e.link(Role::Hub, Role::Z(1));
        e.link(Role::Y(1), Role::Z(0));
        e.link(Role::Z(0), Role::W(1));
        e.link(Role::Y(k), Role::W(s + 1));
        e.link(Role::Z(s), Role::W(s + 1));
    })
}

/// Witness for a valid `(n, Δ)`: the wheel when `Δ = n − 1`, otherwise
/// `G` or `H` by the parity of `n − Δ`.
pub fn construct(n: usize, delta: usize) -> Result<LabeledGraph, ConstructionError> {
    require_valid(n, delta)?;
    if delta == n - 1 {
        build_wheel(n)
    } else if (n - delta) % 2 == 1 {
        build_g(n, delta)
    } else {
        build_h(n, delta)
    }
}

/// Every valid `(n, Δ)` with `4 ≤ n ≤ max_n`, ordered by `n` then `Δ`.
pub fn valid_parameters(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (4..=max_n).flat_map(|n| valid_degrees(n).into_iter().map(move |d| (n, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use alloc::vec;

    #[test]
    fn validity_examples() {
        let v = validity(7, 5).unwrap();
        assert_eq!((v.valid, v.reason), (false, ValidityReason::DeltaEqualsNMinus2));
        assert_eq!(validity(7, 3).unwrap().reason, ValidityReason::CubicOddOrder);
        assert!(validity(6, 3).unwrap().valid);
        assert_eq!(validity(6, 2).unwrap().reason, ValidityReason::DeltaTooSmall);
        assert_eq!(validity(6, 6).unwrap().reason, ValidityReason::DeltaTooLarge);
        assert_eq!(validity(3, 2), Err(ConstructionError::OrderTooSmall { n: 3 }));
    }

    #[test]
    fn valid_degree_sets() {
        assert_eq!(valid_degrees(4), vec![3]);
        assert_eq!(valid_degrees(5), vec![4]);
        assert_eq!(valid_degrees(6), vec![3, 5]);
        assert_eq!(valid_degrees(7), vec![4, 6]);
        assert_eq!(valid_degrees(8), vec![3, 4, 5, 7]);
    }

    #[test]
    fn wheels() {
        let w4 = build_wheel(4).unwrap();
        assert_eq!(w4.graph, Graph::complete(4).unwrap());
        let w6 = build_wheel(6).unwrap();
        assert_eq!(w6.graph.degree_profile().sequence(), vec![5, 3, 3, 3, 3, 3]);
        assert_eq!(w6.graph.size(), 10);
        assert_eq!(w6.label(0), "hub");
        assert!(build_wheel(3).is_err());
    }

    #[test]
    fn g_16_5() {
        let g = build_g(16, 5).unwrap();
        assert_eq!((g.params.k, g.params.s), (3, 6));
        assert_eq!(g.graph.order(), 16);
        assert_eq!(g.graph.size(), 25);
        let mut expected = vec![5];
        expected.extend([3; 15]);
        assert_eq!(g.graph.degree_profile().sequence(), expected);
        assert_eq!(g.graph.degree(g.vertex(Role::Y(1)).unwrap()), 5);
    }

    #[test]
    fn g_6_3_is_the_prism() {
        let g = build_g(6, 3).unwrap();
        assert_eq!((g.params.k, g.params.s), (1, 2));
        assert_eq!(g.graph.size(), 9);
        // K3 □ K2: triangles 012 and 345 joined by a perfect matching
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(canonical_form(&g.graph), canonical_form(&prism));
    }

    #[test]
    fn g_8_5() {
        let g = build_g(8, 5).unwrap();
        assert_eq!((g.params.k, g.params.s), (3, 2));
        assert_eq!(g.graph.size(), 13);
        assert_eq!(g.graph.degree_profile().sequence(), vec![5, 3, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn h_examples() {
        let h = build_h(17, 5).unwrap();
        assert_eq!((h.params.k, h.params.s), (4, 5));
        assert_eq!(h.graph.size(), 27);
        let mut expected = vec![5, 4];
        expected.extend([3; 15]);
        assert_eq!(h.graph.degree_profile().sequence(), expected);
        assert_eq!(h.graph.degree(h.vertex(Role::Z(1)).unwrap()), 4);

        let h = build_h(8, 4).unwrap();
        assert_eq!((h.params.k, h.params.s), (3, 1));
        assert_eq!(h.graph.size(), 13);
        assert_eq!(h.graph.degree_profile().sequence(), vec![4, 4, 3, 3, 3, 3, 3, 3]);

        assert!(matches!(build_h(9, 4), Err(ConstructionError::WrongParity { .. })));
        assert!(matches!(build_g(9, 5), Err(ConstructionError::WrongParity { .. })));
        assert!(matches!(build_g(8, 7), Err(ConstructionError::DeltaOutOfCaseRange { .. })));
    }

    #[test]
    fn construct_dispatch() {
        assert_eq!(construct(10, 9).unwrap().family, Family::Wheel);
        assert_eq!(construct(16, 5).unwrap().family, Family::CaseOdd);
        assert_eq!(construct(16, 6).unwrap().family, Family::CaseEven);
        assert_eq!(
            construct(7, 5),
            Err(ConstructionError::Invalid {
                n: 7,
                delta: 5,
                reason: ValidityReason::DeltaEqualsNMinus2
            })
        );
    }

    #[test]
    fn labels_round_trip() {
        for (n, d) in [(16, 5), (17, 5), (9, 8)] {
            let lg = construct(n, d).unwrap();
            for v in 0..n {
                assert_eq!(lg.vertex(lg.role(v)), Some(v));
                assert_eq!(lg.vertex_by_label(&lg.label(v)), Some(v));
            }
        }
        let h = build_h(17, 5).unwrap();
        assert_eq!(h.label(0), "x");
        assert_eq!(h.vertex_by_label("z1"), Some(6));
    }
}
