//! Explicit Hamilton path templates for `G(n, Δ)` (cases 1.1–1.8) and
//! `H(n, Δ)` (cases 2.1–2.16).
//!
//! Each case is data: a guard on the roles and indices of the two endpoints
//! and a template transcribed term by term. Templates are expanded in two
//! stages.
//!
//! 1. Evaluation turns the template into a *skeleton*: the ordered list of
//!    explicitly named vertices (anchors) and, between consecutive anchors,
//!    either a direct step (the template writes them next to each other) or
//!    a gap (the template writes `…`). Terms whose index leaves its range are
//!    dropped, a same-family range whose direction is inverted (such as
//!    `x_{i−1}, …, x_1` at `i = 1`) drops entirely, and an anchor repeated
//!    back to back collapses into one.
//! 2. Gaps are filled by a deterministic backtracking search that uses only
//!    graph edges and must consume exactly the vertices not named anywhere in
//!    the skeleton. A monotone step inside the target's family is tried
//!    first, so single-family ellipses expand to index walks whenever that
//!    works; mixed or ladder segments become the forced zigzag.
//!
//! The expanded sequence is then checked with [`verify_path`].

use alloc::vec::Vec;
use core::fmt;

use crate::constructions::{Family, LabeledGraph, Params, Role};
use crate::graph::{bits, Graph};
use crate::path::{verify_path, HamiltonPath};

/// Node budget for a single gap-filling search.
const SEARCH_BUDGET: usize = 1 << 22;

/// A template case, e.g. `1.6` or `2.11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseId {
    /// `1` for `G(n, Δ)`, `2` for `H(n, Δ)`.
    pub major: u8,
    pub minor: u8,
}

impl CaseId {
    pub fn family(&self) -> Family {
        if self.major == 1 {
            Family::CaseOdd
        } else {
            Family::CaseEven
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.major, self.minor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("{0} has no path templates")]
    NotACaseFamily(Family),
    #[error("vertex {v} out of range")]
    VertexOutOfRange { v: usize },
    #[error("endpoints coincide ({0})")]
    SameVertex(usize),
    #[error("no case matches the pair ({u}, {v})")]
    NoCase { u: usize, v: usize },
    #[error("{count} cases match the pair ({u}, {v})")]
    Ambiguous { u: usize, v: usize, count: usize },
    #[error("case {case} does not exist")]
    UnknownCase { case: CaseId },
    #[error("case {case} does not apply to ({u}, {v})")]
    GuardViolation { case: CaseId, u: usize, v: usize },
    #[error("case {case}: range endpoint {role:?} does not exist")]
    MissingRangeEnd { case: CaseId, role: Role },
    #[error("case {case}: vertex {vertex} named twice")]
    RepeatedAnchor { case: CaseId, vertex: usize },
    #[error("case {case}: template runs from {first} to {last}, expected ({u}, {v})")]
    EndpointMismatch {
        case: CaseId,
        first: usize,
        last: usize,
        u: usize,
        v: usize,
    },
    #[error("case {case}: no expansion of the template for ({u}, {v})")]
    Unexpandable { case: CaseId, u: usize, v: usize },
    #[error("case {case}: expansion for ({u}, {v}) exceeded the search budget")]
    SearchBudget { case: CaseId, u: usize, v: usize },
    #[error("case {case}: expansion for ({u}, {v}) is not a Hamilton path")]
    NotAPath { case: CaseId, u: usize, v: usize },
}

// ---------------------------------------------------------------------------
// Template language

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Fam {
    Hub,
    X,
    Y,
    Z,
    W,
}

impl Fam {
    fn role(self, idx: usize) -> Role {
        match self {
            Fam::Hub => Role::Hub,
            Fam::X => Role::X(idx),
            Fam::Y => Role::Y(idx),
            Fam::Z => Role::Z(idx),
            Fam::W => Role::W(idx),
        }
    }

    fn of(role: Role) -> (Fam, usize) {
        match role {
            Role::Hub => (Fam::Hub, 0),
            Role::X(i) => (Fam::X, i),
            Role::Y(i) => (Fam::Y, i),
            Role::Z(i) => (Fam::Z, i),
            Role::W(i) => (Fam::W, i),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Base {
    Lit,
    I,
    J,
    K,
    S,
}

/// Index expression `base + offset`.
#[derive(Debug, Clone, Copy)]
struct Ix(Base, i8);

const I: Ix = Ix(Base::I, 0);
const J: Ix = Ix(Base::J, 0);
const K: Ix = Ix(Base::K, 0);
const S: Ix = Ix(Base::S, 0);

const fn c(value: i8) -> Ix {
    Ix(Base::Lit, value)
}

impl Ix {
    const fn p(self, d: i8) -> Ix {
        Ix(self.0, self.1 + d)
    }

    const fn m(self, d: i8) -> Ix {
        Ix(self.0, self.1 - d)
    }
}

#[derive(Debug, Clone, Copy)]
struct Bind {
    i: i64,
    j: i64,
    k: i64,
    s: i64,
}

impl Bind {
    fn eval(&self, ix: Ix) -> i64 {
        let base = match ix.0 {
            Base::Lit => 0,
            Base::I => self.i,
            Base::J => self.j,
            Base::K => self.k,
            Base::S => self.s,
        };
        base + i64::from(ix.1)
    }
}

#[derive(Debug, Clone, Copy)]
enum Cond {
    Le(Ix, Ix),
    Lt(Ix, Ix),
    Eq(Ix, Ix),
}

impl Cond {
    fn holds(&self, b: &Bind) -> bool {
        match *self {
            Cond::Le(x, y) => b.eval(x) <= b.eval(y),
            Cond::Lt(x, y) => b.eval(x) < b.eval(y),
            Cond::Eq(x, y) => b.eval(x) == b.eval(y),
        }
    }
}

const fn le(a: Ix, b: Ix) -> Cond {
    Cond::Le(a, b)
}
const fn lt(a: Ix, b: Ix) -> Cond {
    Cond::Lt(a, b)
}
const fn eq(a: Ix, b: Ix) -> Cond {
    Cond::Eq(a, b)
}

#[derive(Debug, Clone, Copy)]
enum Tok {
    /// A named vertex; dropped when its index is out of range.
    V(Fam, Ix),
    /// `f_a, …, f_b` with `a ≤ b`; dropped when `a > b`.
    Up(Fam, Ix, Ix),
    /// `f_a, …, f_b` with `a ≥ b`; dropped when `a < b`.
    Down(Fam, Ix, Ix),
    /// `…` between terms of different families.
    Gap,
    /// Case-local substitution: `then` when the condition holds.
    Alt(Cond, &'static [Tok], &'static [Tok]),
}

const fn v(f: Fam, ix: Ix) -> Tok {
    Tok::V(f, ix)
}
const fn up(f: Fam, a: Ix, b: Ix) -> Tok {
    Tok::Up(f, a, b)
}
const fn down(f: Fam, a: Ix, b: Ix) -> Tok {
    Tok::Down(f, a, b)
}
const GAP: Tok = Tok::Gap;
const HUB: Tok = Tok::V(Fam::Hub, c(0));

struct CaseSpec {
    minor: u8,
    first: Fam,
    second: Fam,
    /// Conditions on `i` (index of the first endpoint) and `j` (second).
    guard: &'static [Cond],
    template: &'static [Tok],
}

use Fam::{W, X, Y, Z};

#[rustfmt::skip]
static ODD_CASES: [CaseSpec; 8] = [
    // x_i,x_{i+1},…,x_{j−1},y_1,x_{i−1},…,x_1,z_1,z_2,y_2,…,z_{s+1},x_k,…,x_j
    CaseSpec { minor: 1, first: X, second: X,
        guard: &[le(c(1), I), lt(I, J), le(J, K)],
        template: &[v(X, I), up(X, I.p(1), J.m(1)), v(Y, c(1)), down(X, I.m(1), c(1)),
            v(Z, c(1)), v(Z, c(2)), v(Y, c(2)), GAP, v(Z, S.p(1)), down(X, K, J)] },
    // x_i,x_{i+1},…,x_k,z_{s+1},…,y_{j+1},z_{j+1},z_j,…,z_1,x_1,…,x_{i−1},y_1,…,y_j
    CaseSpec { minor: 2, first: X, second: Y,
        guard: &[le(c(1), I), le(I, K), le(c(1), J), le(J, S)],
        template: &[v(X, I), up(X, I.p(1), K), v(Z, S.p(1)), GAP, v(Y, J.p(1)), v(Z, J.p(1)),
            down(Z, J, c(1)), up(X, c(1), I.m(1)), up(Y, c(1), J)] },
    // x_i,x_{i+1},…,x_k,z_{s+1},…,z_{j+1},y_{j+1},y_j,…,y_1,x_{i−1},…,x_1,z_1,…,z_j
    CaseSpec { minor: 3, first: X, second: Z,
        guard: &[le(c(1), I), le(I, K), le(c(1), J), le(J, S)],
        template: &[v(X, I), up(X, I.p(1), K), down(Z, S.p(1), J.p(1)), v(Y, J.p(1)),
            down(Y, J, c(1)), down(X, I.m(1), c(1)), up(Z, c(1), J)] },
    // x_i,x_{i+1},…,x_k,y_1,x_{i−1},…,x_1,z_1,z_2,…,z_{s+1}
    CaseSpec { minor: 4, first: X, second: Z,
        guard: &[le(c(1), I), le(I, K), eq(J, S.p(1))],
        template: &[v(X, I), up(X, I.p(1), K), v(Y, c(1)), down(X, I.m(1), c(1)),
            v(Z, c(1)), up(Z, c(2), S.p(1))] },
    // y_i,y_{i+1},…,y_{j−1},z_{j−1},…,z_i,z_{i−1},…,x_1,x_2,…,x_k,z_{s+1},…,z_j,y_j
    CaseSpec { minor: 5, first: Y, second: Y,
        guard: &[le(c(1), I), lt(I, J), le(J, S)],
        template: &[v(Y, I), up(Y, I.p(1), J.m(1)), down(Z, J.m(1), I), v(Z, I.m(1)), GAP,
            v(X, c(1)), up(X, c(2), K), down(Z, S.p(1), J), v(Y, J)] },
    // y_i,y_{i+1},…,y_{j−1},z_{j−1},…,z_i,z_{i−1},…,x_1,x_2,…,x_k,z_{s+1},…,y_j,z_j
    CaseSpec { minor: 6, first: Y, second: Z,
        guard: &[le(c(1), I), lt(I, J), le(J, S.p(1))],
        template: &[v(Y, I), up(Y, I.p(1), J.m(1)), down(Z, J.m(1), I), v(Z, I.m(1)), GAP,
            v(X, c(1)), up(X, c(2), K), v(Z, S.p(1)), GAP, v(Y, J), v(Z, J)] },
    // y_i,y_{i−1},…,y_j,y_{j−1},z_{j−1},…,x_1,x_2,…,x_k,z_{s+1},…,y_{i+1},z_{i+1},z_i,…,z_j
    CaseSpec { minor: 7, first: Y, second: Z,
        guard: &[le(c(1), J), le(J, I), le(I, S)],
        template: &[v(Y, I), down(Y, I.m(1), J), v(Y, J.m(1)), v(Z, J.m(1)), GAP,
            v(X, c(1)), up(X, c(2), K), v(Z, S.p(1)), GAP, v(Y, I.p(1)), v(Z, I.p(1)),
            down(Z, I, J)] },
    // z_i,z_{i+1},…,z_{j−1},y_{j−1},…,y_i,y_{i−1},z_{i−1},…,x_1,x_2,…,x_k,z_{s+1},…,z_j
    CaseSpec { minor: 8, first: Z, second: Z,
        guard: &[le(c(1), I), lt(I, J), le(J, S.p(1))],
        template: &[v(Z, I), up(Z, I.p(1), J.m(1)), down(Y, J.m(1), I), v(Y, I.m(1)),
            v(Z, I.m(1)), GAP, v(X, c(1)), up(X, c(2), K), down(Z, S.p(1), J)] },
];

#[rustfmt::skip]
static EVEN_CASES: [CaseSpec; 16] = [
    // y_1,…,y_{j−1},x,z_1,z_0,w_1,…,w_{s+1},y_k,…,y_j
    CaseSpec { minor: 1, first: Y, second: Y,
        guard: &[eq(I, c(1)), le(c(2), J), le(J, K)],
        template: &[up(Y, I, J.m(1)), HUB, v(Z, c(1)), v(Z, c(0)), up(W, c(1), S.p(1)),
            down(Y, K, J)] },
    // y_i,y_{i+1},…,y_{j−1},x,y_{i−1},…,y_1,z_0,…,w_{s+1},y_k,…,y_j
    CaseSpec { minor: 2, first: Y, second: Y,
        guard: &[le(c(2), I), lt(I, J), le(J, K)],
        template: &[v(Y, I), up(Y, I.p(1), J.m(1)), HUB, down(Y, I.m(1), c(1)), v(Z, c(0)), GAP,
            v(W, S.p(1)), down(Y, K, J)] },
    // y_1,z_0,…,w_{s+1},y_k,…,y_2,x
    CaseSpec { minor: 3, first: Y, second: Fam::Hub,
        guard: &[eq(I, c(1))],
        template: &[v(Y, c(1)), v(Z, c(0)), GAP, v(W, S.p(1)), down(Y, K, c(2)), HUB] },
    // y_i,y_{i+1},…,y_k,w_{s+1},…,z_0,y_1,…,y_{i−1},x
    CaseSpec { minor: 4, first: Y, second: Fam::Hub,
        guard: &[le(c(2), I), le(I, K)],
        template: &[v(Y, I), up(Y, I.p(1), K), v(W, S.p(1)), GAP, v(Z, c(0)), up(Y, c(1), I.m(1)),
            HUB] },
    // y_i,y_{i−1},…,y_1,x,y_{i+1},…,y_k,w_{s+1},…,z_{j+1},w_{j+1},w_j,…,w_1,z_0,…,z_j
    CaseSpec { minor: 5, first: Y, second: Z,
        guard: &[le(c(1), I), le(I, K.m(1)), le(c(0), J), le(J, S)],
        template: &[v(Y, I), down(Y, I.m(1), c(1)), HUB, up(Y, I.p(1), K), v(W, S.p(1)), GAP,
            v(Z, J.p(1)), v(W, J.p(1)), down(W, J, c(1)), up(Z, c(0), J)] },
    // y_k,y_{k−1},…,y_1,x,z_1,…,z_s,w_{s+1},…,w_1,z_0
    CaseSpec { minor: 6, first: Y, second: Z,
        guard: &[eq(I, K), eq(J, c(0))],
        template: &[v(Y, K), down(Y, K.m(1), c(1)), HUB, up(Z, c(1), S), down(W, S.p(1), c(1)),
            v(Z, c(0))] },
    // y_k,y_{k−1},…,y_2,x,y_1,z_0,…,z_{j−1},w_{j−1},w_j,…,w_{s+1},z_s,…,z_j
    CaseSpec { minor: 7, first: Y, second: Z,
        guard: &[eq(I, K), le(c(1), J), le(J, S)],
        template: &[v(Y, K), down(Y, K.m(1), c(2)), HUB, v(Y, c(1)), up(Z, c(0), J.m(1)),
            v(W, J.m(1)), up(W, J, S.p(1)), down(Z, S, J)] },
    // y_1,z_0,w_1,…,w_{j−1},z_{j−1},…,z_1,x,y_2,…,y_k,w_{s+1},…,w_j
    // (at j = 1 the string w_1,…,w_{j−1},z_{j−1},…,z_1 means z_1)
    CaseSpec { minor: 8, first: Y, second: W,
        guard: &[eq(I, c(1)), le(c(1), J), le(J, S.p(1))],
        template: &[v(Y, c(1)), v(Z, c(0)),
            Tok::Alt(eq(J, c(1)), &[v(Z, c(1))], &[up(W, c(1), J.m(1)), down(Z, J.m(1), c(1))]),
            HUB, up(Y, c(2), K), down(W, S.p(1), J)] },
    // y_i,y_{i+1},…,y_k,x,y_{i−1},…,y_1,z_0,…,w_{j−1},z_{j−1},z_j,…,z_s,w_{s+1},…,w_j
    CaseSpec { minor: 9, first: Y, second: W,
        guard: &[le(c(2), I), le(I, K), le(c(1), J), le(J, S.p(1))],
        template: &[v(Y, I), up(Y, I.p(1), K), HUB, down(Y, I.m(1), c(1)), v(Z, c(0)), GAP,
            v(W, J.m(1)), v(Z, J.m(1)), up(Z, J, S), down(W, S.p(1), J)] },
    // x,y_1,…,y_k,w_{s+1},…,z_{j+1},w_{j+1},w_j,…,w_1,z_0,…,z_j
    CaseSpec { minor: 10, first: Fam::Hub, second: Z,
        guard: &[le(c(0), J), le(J, S)],
        template: &[HUB, up(Y, c(1), K), v(W, S.p(1)), GAP, v(Z, J.p(1)), v(W, J.p(1)),
            down(W, J, c(1)), up(Z, c(0), J)] },
    // x,y_k,…,y_1,z_0,…,w_{j−1},z_{j−1},z_j,…,z_s,w_{s+1},…,w_j
    CaseSpec { minor: 11, first: Fam::Hub, second: W,
        guard: &[le(c(1), J), le(J, S.p(1))],
        template: &[HUB, down(Y, K, c(1)), v(Z, c(0)), GAP, v(W, J.m(1)), v(Z, J.m(1)),
            up(Z, J, S), down(W, S.p(1), J)] },
    // z_i,w_i,w_{i−1},…,z_0,y_1,x,y_2,…,y_k,w_{s+1},…,z_{j+1},w_{j+1},w_j,…,w_{i+1},z_{i+1},…,z_j
    CaseSpec { minor: 12, first: Z, second: Z,
        guard: &[le(c(0), I), lt(I, J), le(J, S)],
        template: &[v(Z, I), v(W, I), v(W, I.m(1)), GAP, v(Z, c(0)), v(Y, c(1)), HUB,
            up(Y, c(2), K), v(W, S.p(1)), GAP, v(Z, J.p(1)), v(W, J.p(1)), down(W, J, I.p(1)),
            up(Z, I.p(1), J)] },
    // z_0,w_1,…,w_{j−1},z_{j−1},…,z_1,x,y_1,…,y_k,w_{s+1},…,w_j
    // (at j = 1 the string w_1,…,w_{j−1},z_{j−1},…,z_1 means z_1)
    CaseSpec { minor: 13, first: Z, second: W,
        guard: &[eq(I, c(0)), le(c(1), J), le(J, S.p(1))],
        template: &[v(Z, c(0)),
            Tok::Alt(eq(J, c(1)), &[v(Z, c(1))], &[up(W, c(1), J.m(1)), down(Z, J.m(1), c(1))]),
            HUB, up(Y, c(1), K), down(W, S.p(1), J)] },
    // z_i,z_{i+1},…,z_{j−1},w_{j−1},w_{j−2},…,w_i,w_{i−1},…,z_0,y_1,x,y_2,…,y_k,w_{s+1},…,z_j,w_j
    CaseSpec { minor: 14, first: Z, second: W,
        guard: &[le(c(1), I), lt(I, J), le(J, S.p(1))],
        template: &[v(Z, I), up(Z, I.p(1), J.m(1)), v(W, J.m(1)), down(W, J.m(2), I),
            v(W, I.m(1)), GAP, v(Z, c(0)), v(Y, c(1)), HUB, up(Y, c(2), K), v(W, S.p(1)), GAP,
            v(Z, J), v(W, J)] },
    // z_i,z_{i−1},…,z_j,z_{j−1},w_{j−1},…,z_0,y_1,x,y_2,…,y_k,w_{s+1},…,z_{i+1},w_{i+1},…,w_j
    CaseSpec { minor: 15, first: Z, second: W,
        guard: &[le(c(1), J), le(J, I), le(I, S)],
        template: &[v(Z, I), down(Z, I.m(1), J), v(Z, J.m(1)), v(W, J.m(1)), GAP, v(Z, c(0)),
            v(Y, c(1)), HUB, up(Y, c(2), K), v(W, S.p(1)), GAP, v(Z, I.p(1)), v(W, I.p(1)),
            down(W, I.p(1), J)] },
    // w_i,w_{i+1},…,w_{j−1},z_{j−1},…,z_i,z_{i−1},w_{i−1},…,z_0,y_1,x,y_2,…,y_k,w_{s+1},…,z_j,w_j
    CaseSpec { minor: 16, first: W, second: W,
        guard: &[le(c(1), I), lt(I, J), le(J, S.p(1))],
        template: &[v(W, I), up(W, I.p(1), J.m(1)), down(Z, J.m(1), I), v(Z, I.m(1)),
            v(W, I.m(1)), GAP, v(Z, c(0)), v(Y, c(1)), HUB, up(Y, c(2), K), v(W, S.p(1)), GAP,
            v(Z, J), v(W, J)] },
];

fn table(family: Family) -> Result<(u8, &'static [CaseSpec]), FormulaError> {
    match family {
        Family::CaseOdd => Ok((1, &ODD_CASES)),
        Family::CaseEven => Ok((2, &EVEN_CASES)),
        Family::Wheel => Err(FormulaError::NotACaseFamily(family)),
    }
}

/// Every case id of a family, in order.
pub fn cases(family: Family) -> Vec<CaseId> {
    table(family)
        .map(|(major, specs)| {
            specs
                .iter()
                .map(|s| CaseId {
                    major,
                    minor: s.minor,
                })
                .collect()
        })
        .unwrap_or_default()
}

fn bind(params: &Params, a: Role, b: Role) -> (Fam, Fam, Bind) {
    let (fa, i) = Fam::of(a);
    let (fb, j) = Fam::of(b);
    let bind = Bind {
        i: i as i64,
        j: j as i64,
        k: params.k as i64,
        s: params.s as i64,
    };
    (fa, fb, bind)
}

fn guard_matches(spec: &CaseSpec, lg: &LabeledGraph, a: usize, b: usize) -> Option<Bind> {
    let (fa, fb, bind) = bind(&lg.params, lg.role(a), lg.role(b));
    (fa == spec.first && fb == spec.second && spec.guard.iter().all(|c| c.holds(&bind)))
        .then_some(bind)
}

fn check_pair(lg: &LabeledGraph, u: usize, v: usize) -> Result<(), FormulaError> {
    for w in [u, v] {
        if w >= lg.graph.order() {
            return Err(FormulaError::VertexOutOfRange { v: w });
        }
    }
    if u == v {
        return Err(FormulaError::SameVertex(u));
    }
    Ok(())
}

/// The case governing an unordered pair, oriented as the case reads it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseMatch {
    pub case: CaseId,
    /// First endpoint of the template.
    pub start: usize,
    /// Last endpoint of the template.
    pub end: usize,
}

/// Finds the unique case whose guard matches `{u, v}` in either orientation.
pub fn dispatch(lg: &LabeledGraph, u: usize, v: usize) -> Result<CaseMatch, FormulaError> {
    let (major, specs) = table(lg.family)?;
    check_pair(lg, u, v)?;
    let mut found = None;
    let mut count = 0;
    for spec in specs {
        for (a, b) in [(u, v), (v, u)] {
            if guard_matches(spec, lg, a, b).is_some() {
                count += 1;
                found = Some(CaseMatch {
                    case: CaseId {
                        major,
                        minor: spec.minor,
                    },
                    start: a,
                    end: b,
                });
            }
        }
    }
    match (count, found) {
        (1, Some(m)) => Ok(m),
        (0, _) => Err(FormulaError::NoCase { u, v }),
        _ => Err(FormulaError::Ambiguous { u, v, count }),
    }
}

// ---------------------------------------------------------------------------
// Expansion

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Direct,
    Gap,
}

/// Anchors with the link type joining each to its predecessor.
#[derive(Debug, Default)]
struct Skeleton {
    anchors: Vec<usize>,
    links: Vec<Link>,
}

struct Evaluator<'a> {
    lg: &'a LabeledGraph,
    case: CaseId,
    bind: Bind,
    sk: Skeleton,
    pending: Link,
}

impl Evaluator<'_> {
    fn push(&mut self, vertex: usize) -> Result<(), FormulaError> {
        let link = core::mem::replace(&mut self.pending, Link::Direct);
        if self.sk.anchors.last() == Some(&vertex) {
            return Ok(());
        }
        if self.sk.anchors.contains(&vertex) {
            return Err(FormulaError::RepeatedAnchor {
                case: self.case,
                vertex,
            });
        }
        self.sk.anchors.push(vertex);
        self.sk.links.push(link);
        Ok(())
    }

    fn lookup(&self, fam: Fam, ix: Ix) -> Option<usize> {
        let idx = self.bind.eval(ix);
        if idx < 0 {
            return None;
        }
        self.lg.vertex(fam.role(idx as usize))
    }

    fn range_end(&self, fam: Fam, ix: Ix) -> Result<usize, FormulaError> {
        self.lookup(fam, ix).ok_or(FormulaError::MissingRangeEnd {
            case: self.case,
            role: fam.role(self.bind.eval(ix).max(0) as usize),
        })
    }

    fn range(&mut self, fam: Fam, from: Ix, to: Ix) -> Result<(), FormulaError> {
        let a = self.range_end(fam, from)?;
        let b = self.range_end(fam, to)?;
        self.push(a)?;
        if b != a {
            self.pending = Link::Gap;
            self.push(b)?;
        }
        Ok(())
    }

    fn run(&mut self, toks: &[Tok]) -> Result<(), FormulaError> {
        for tok in toks {
            match *tok {
                Tok::V(fam, ix) => {
                    if let Some(vertex) = self.lookup(fam, ix) {
                        self.push(vertex)?;
                    }
                }
                Tok::Up(fam, a, b) => {
                    if self.bind.eval(a) <= self.bind.eval(b) {
                        self.range(fam, a, b)?;
                    }
                }
                Tok::Down(fam, a, b) => {
                    if self.bind.eval(a) >= self.bind.eval(b) {
                        self.range(fam, a, b)?;
                    }
                }
                Tok::Gap => self.pending = Link::Gap,
                Tok::Alt(cond, then, otherwise) => {
                    if cond.holds(&self.bind) {
                        self.run(then)?;
                    } else {
                        self.run(otherwise)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn find_spec(lg: &LabeledGraph, case: CaseId) -> Result<&'static CaseSpec, FormulaError> {
    let (major, specs) = table(lg.family)?;
    if case.major != major {
        return Err(FormulaError::UnknownCase { case });
    }
    specs
        .iter()
        .find(|s| s.minor == case.minor)
        .ok_or(FormulaError::UnknownCase { case })
}

/// Orients `{u, v}` for `case` and evaluates its template into a skeleton.
fn skeleton(
    lg: &LabeledGraph,
    case: CaseId,
    u: usize,
    v: usize,
) -> Result<(usize, usize, Skeleton), FormulaError> {
    let spec = find_spec(lg, case)?;
    check_pair(lg, u, v)?;
    let (start, end, bind) = [(u, v), (v, u)]
        .into_iter()
        .find_map(|(a, b)| guard_matches(spec, lg, a, b).map(|bind| (a, b, bind)))
        .ok_or(FormulaError::GuardViolation { case, u, v })?;
    let mut ev = Evaluator {
        lg,
        case,
        bind,
        sk: Skeleton::default(),
        pending: Link::Direct,
    };
    ev.run(spec.template)?;
    let sk = ev.sk;
    let (first, last) = (sk.anchors[0], *sk.anchors.last().unwrap_or(&sk.anchors[0]));
    if first != start || last != end {
        return Err(FormulaError::EndpointMismatch {
            case,
            first,
            last,
            u: start,
            v: end,
        });
    }
    Ok((start, end, sk))
}

/// The explicitly named vertices of the template for `{u, v}`, in template
/// order, after dropping out-of-range terms.
pub fn template_anchors(
    lg: &LabeledGraph,
    case: CaseId,
    u: usize,
    v: usize,
) -> Result<Vec<usize>, FormulaError> {
    skeleton(lg, case, u, v).map(|(_, _, sk)| sk.anchors)
}

struct Filler<'a> {
    g: &'a Graph,
    roles: &'a [Role],
    sk: &'a Skeleton,
    /// `boundary[t]`: anchors at positions `≥ t` adjacent to some gap.
    boundary: Vec<u64>,
    path: Vec<usize>,
    steps: usize,
}

enum Outcome {
    Found,
    Dead,
    Budget,
}

impl Filler<'_> {
    /// `w` continues a monotone walk from `cur` inside `target`'s family.
    fn monotone_step(&self, cur: usize, w: usize, target: usize) -> bool {
        let (fc, ic) = Fam::of(self.roles[cur]);
        let (fw, iw) = Fam::of(self.roles[w]);
        let (ft, it) = Fam::of(self.roles[target]);
        if fc != ft || fw != ft {
            return false;
        }
        (ic < it && iw == ic + 1) || (ic > it && iw + 1 == ic)
    }

    /// Extends from `cur`, which sits after anchor `seg` (possibly inside the
    /// following gap), with `free` still to be placed.
    fn fill(&mut self, seg: usize, cur: usize, free: u64) -> Outcome {
        self.steps += 1;
        if self.steps > SEARCH_BUDGET {
            return Outcome::Budget;
        }
        if seg + 1 == self.sk.anchors.len() {
            return if free == 0 { Outcome::Found } else { Outcome::Dead };
        }
        let target = self.sk.anchors[seg + 1];
        match self.sk.links[seg + 1] {
            Link::Direct => {
                if !self.g.has_edge(cur, target) {
                    return Outcome::Dead;
                }
                self.path.push(target);
                let out = self.fill(seg + 1, target, free);
                if !matches!(out, Outcome::Found) {
                    self.path.pop();
                }
                out
            }
            Link::Gap => {
                // every unplaced vertex still needs two usable neighbours
                let live = free | 1 << cur | self.boundary[seg + 1];
                if bits(free).any(|f| (self.g.neighbors(f) & live).count_ones() < 2) {
                    return Outcome::Dead;
                }
                let mut cands: Vec<(bool, usize)> = bits(self.g.neighbors(cur) & (free | 1 << target))
                    .map(|w| (!self.monotone_step(cur, w, target), w))
                    .collect();
                cands.sort_unstable();
                for (_, w) in cands {
                    self.path.push(w);
                    let out = if w == target {
                        self.fill(seg + 1, w, free)
                    } else {
                        self.fill(seg, w, free & !(1 << w))
                    };
                    match out {
                        Outcome::Found => return Outcome::Found,
                        Outcome::Budget => return Outcome::Budget,
                        Outcome::Dead => {
                            self.path.pop();
                        }
                    }
                }
                Outcome::Dead
            }
        }
    }
}

/// Expands the template of `case` for `{u, v}` into a certified Hamilton
/// path. The path runs from the template's first endpoint to its last.
pub fn emit_path(
    lg: &LabeledGraph,
    case: CaseId,
    u: usize,
    v: usize,
) -> Result<HamiltonPath, FormulaError> {
    let (start, end, sk) = skeleton(lg, case, u, v)?;
    let g = &lg.graph;
    let named = sk.anchors.iter().fold(0u64, |m, &a| m | 1 << a);
    let free = g.vertex_mask() & !named;

    let len = sk.anchors.len();
    let mut boundary = alloc::vec![0u64; len + 1];
    for t in (0..len).rev() {
        let touches_gap =
            sk.links[t] == Link::Gap || (t + 1 < len && sk.links[t + 1] == Link::Gap);
        boundary[t] = boundary[t + 1] | if touches_gap { 1 << sk.anchors[t] } else { 0 };
    }

    let mut filler = Filler {
        g,
        roles: &lg.roles,
        sk: &sk,
        boundary,
        path: alloc::vec![start],
        steps: 0,
    };
    match filler.fill(0, start, free) {
        Outcome::Found => {}
        Outcome::Dead => return Err(FormulaError::Unexpandable { case, u: start, v: end }),
        Outcome::Budget => return Err(FormulaError::SearchBudget { case, u: start, v: end }),
    }
    let path = HamiltonPath {
        vertices: filler.path,
        endpoints: (start, end),
        case: Some(case),
        verified: false,
    };
    if !verify_path(g, &path) {
        return Err(FormulaError::NotAPath { case, u: start, v: end });
    }
    Ok(HamiltonPath {
        verified: true,
        ..path
    })
}

/// Outcome for one vertex pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    /// The pair with `u < v`.
    pub u: usize,
    pub v: usize,
    pub case: Option<CaseId>,
    pub path: Option<HamiltonPath>,
    pub error: Option<FormulaError>,
}

impl PairRecord {
    pub fn verified(&self) -> bool {
        self.path.as_ref().is_some_and(|p| p.verified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaReport {
    pub family: Family,
    pub params: Params,
    pub records: Vec<PairRecord>,
}

impl FormulaReport {
    pub fn pairs(&self) -> usize {
        self.records.len()
    }

    pub fn verified(&self) -> usize {
        self.records.iter().filter(|r| r.verified()).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairRecord> {
        self.records.iter().filter(|r| !r.verified())
    }

    pub fn all_verified(&self) -> bool {
        self.verified() == self.pairs()
    }
}

/// Dispatches, expands and verifies every vertex pair `u < v`.
pub fn verify_all_pairs(lg: &LabeledGraph) -> Result<FormulaReport, FormulaError> {
    table(lg.family)?;
    let n = lg.graph.order();
    let records = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| {
            let result = dispatch(lg, u, v).and_then(|m| emit_path(lg, m.case, u, v).map(|p| (m, p)));
            match result {
                Ok((m, path)) => PairRecord {
                    u,
                    v,
                    case: Some(m.case),
                    path: Some(path),
                    error: None,
                },
                Err(e) => PairRecord {
                    u,
                    v,
                    case: dispatch(lg, u, v).ok().map(|m| m.case),
                    path: None,
                    error: Some(e),
                },
            }
        })
        .collect();
    Ok(FormulaReport {
        family: lg.family,
        params: lg.params,
        records,
    })
}
