//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` row per vertex, so vertex subsets are plain machine
//! words throughout the crate. Every mutating-looking operation returns a new
//! value.

use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the order of a [`Graph`].
pub const MAX_ORDER: usize = 64;

/// Largest order accepted by [`Graph::vertex_connectivity`].
///
/// The separator enumeration costs `O(2^n · n)` in the worst case (complete
/// graphs), which is still interactive at 24 vertices.
pub const CONNECTIVITY_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("order {n} outside the supported range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {v}")]
    Loop { v: usize },
    #[error("edge {0} is not present")]
    MissingEdge(Edge),
    #[error("{what} needs order at least {min}, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{what} supports orders up to {max}, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
}

/// Unordered vertex pair, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Normalizes the pair. Loops are representable here and rejected by the
    /// graph constructors.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.lo, self.hi)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Degree multiset of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// Degree of each vertex, indexed by vertex.
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
}

impl DegreeProfile {
    /// Degrees sorted in non-increasing order (the degree sequence).
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = self.degrees.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Bit mask with the lowest `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { n, max: MAX_ORDER });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges<E>(n: usize, edges: impl IntoIterator<Item = E>) -> Result<Self, GraphError>
    where
        E: Into<Edge>,
    {
        let mut g = Self::empty(n)?;
        for e in edges {
            let e = e.into();
            g.check_vertex(e.hi)?;
            if e.lo == e.hi {
                return Err(GraphError::Loop { v: e.lo });
            }
            g.set(e.lo, e.hi);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, rejecting rows that break symmetry,
    /// contain loops or point past `n`.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let w = (row & !all).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop { v });
            }
            for w in bits(row) {
                if rows[w] >> v & 1 == 0 {
                    return Err(GraphError::MissingEdge(Edge::new(v, w)));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Adjacency rows `0..n`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            bits(self.adj[u] & !full_mask(u + 1)).map(move |v| Edge { lo: u, hi: v })
        })
    }

    /// Copy of the graph without `e`.
    pub fn remove_edge(&self, e: impl Into<Edge>) -> Result<Graph, GraphError> {
        let e = e.into();
        if !self.has_edge(e.lo, e.hi) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.lo] &= !(1 << e.hi);
        g.adj[e.hi] &= !(1 << e.lo);
        Ok(g)
    }

    /// Copy of the graph with `e` added (a no-op if already present).
    pub fn add_edge(&self, e: impl Into<Edge>) -> Result<Graph, GraphError> {
        let e = e.into();
        self.check_vertex(e.hi)?;
        if e.lo == e.hi {
            return Err(GraphError::Loop { v: e.lo });
        }
        let mut g = self.clone();
        g.set(e.lo, e.hi);
        Ok(g)
    }

    /// Graph on `n + 1` vertices: this graph plus a new last vertex joined to
    /// every vertex of `neighbors`.
    pub fn extend_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { n, max: MAX_ORDER });
        }
        if neighbors & !self.vertex_mask() != 0 {
            let v = (neighbors & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let mut g = self.clone();
        g.n = n;
        let new = self.n;
        g.adj[new] = neighbors;
        for v in bits(neighbors) {
            g.adj[v] |= 1 << new;
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen >> p & 1 == 0, "not a permutation");
            seen |= 1 << p;
        }
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for e in self.edges() {
            g.set(perm[e.lo], perm[e.hi]);
        }
        g
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
        }
    }

    pub fn min_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Whether the subgraph induced by `mask` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & mask & !seen;
            seen |= frontier;
        }
        seen == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Whether deleting `cut` leaves a disconnected graph or a single vertex.
    fn separates(&self, cut: u64) -> bool {
        let rest = self.vertex_mask() & !cut;
        rest.count_ones() <= 1 || !self.is_connected_within(rest)
    }

    /// True if no set of fewer than `k` vertices separates the graph and the
    /// graph has more than `k` vertices. Polynomial for fixed `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        (0..k).all(|size| !subsets_of_size(self.n, size).any(|cut| self.separates(cut)))
    }

    /// Vertex connectivity κ: the least number of vertices whose deletion
    /// disconnects the graph or leaves one vertex; `n - 1` for complete
    /// graphs.
    ///
    /// Separators are enumerated by increasing size, so the cost is
    /// `Σ_{s ≤ κ} C(n, s)` connectivity checks.
    pub fn vertex_connectivity(&self) -> Result<usize, GraphError> {
        if self.n > CONNECTIVITY_MAX_ORDER {
            return Err(GraphError::TooLarge {
                what: "vertex connectivity",
                n: self.n,
                max: CONNECTIVITY_MAX_ORDER,
            });
        }
        let kappa = (0..self.n.saturating_sub(1))
            .find(|&size| subsets_of_size(self.n, size).any(|cut| self.separates(cut)))
            .unwrap_or(self.n.saturating_sub(1));
        debug_assert!(kappa <= self.min_degree(), "Whitney: κ ≤ δ");
        Ok(kappa)
    }
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = full_mask(n);
    let mut cur = if size > n {
        None
    } else if size == 0 {
        Some(0u64)
    } else {
        Some(full_mask(size))
    };
    core::iter::from_fn(move || {
        let out = cur?;
        cur = if out == 0 {
            None
        } else {
            // Gosper's hack; stop once the next subset leaves 0..n.
            let c = out & out.wrapping_neg();
            let r = out.checked_add(c);
            match r {
                Some(r) if r != 0 => {
                    let next = (((r ^ out) >> 2) / c) | r;
                    (next & !limit == 0).then_some(next)
                }
                _ => None,
            }
        };
        Some(out)
    })
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}
