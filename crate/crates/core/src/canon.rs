//! Canonical forms for small graphs.
//!
//! The form is the minimum upper-triangle adjacency code over a set of vertex
//! orderings that is guaranteed to contain every ordering of minimum code.
//! Orderings come from an individualization–refinement tree: the ordered
//! partition is refined until equitable (first split is by degree), a vertex
//! of the first non-singleton cell is individualized, and so on down to
//! discrete partitions. Twins inside a target cell are explored only once
//! since swapping two twins is an automorphism fixing everything else.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{bits, Graph, GraphError};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 12;

/// Canonical representative of an isomorphism class.
///
/// Equal forms ⇔ isomorphic graphs. Ordering is by order first, then by code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Serialized form: one byte of order followed by the adjacency code in
    /// big-endian order.
    pub fn to_bytes(&self) -> [u8; 17] {
        let mut out = [0u8; 17];
        out[0] = self.n;
        out[1..].copy_from_slice(&self.code.to_be_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8; 17]) -> Self {
        let mut code = [0u8; 16];
        code.copy_from_slice(&bytes[1..]);
        CanonicalForm {
            n: bytes[0],
            code: u128::from_be_bytes(code),
        }
    }

    /// The canonically labelled graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut rows = vec![0u64; n];
        let mut bit = pairs;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if self.code >> bit & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows(&rows).expect("canonical code decodes to a simple graph")
    }
}

/// Adjacency code of `g` under the ordering `order` (position → vertex):
/// pairs `(0,1), (0,2), …, (n-2,n-1)` from most to least significant bit.
fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for (i, &u) in order.iter().enumerate() {
        let row = g.neighbors(u);
        for &v in &order[i + 1..] {
            code = code << 1 | u128::from(row >> v & 1);
        }
    }
    code
}

/// Refines an ordered partition to the coarsest equitable partition finer
/// than it. Splits depend only on cell positions and neighbour counts, so
/// the result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    'outer: loop {
        for w in 0..cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(cells.len() + 1);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                // neighbour count into the splitter, per vertex
                let mut by_count = [0u64; crate::graph::MAX_ORDER + 1];
                let mut present = 0u128;
                for v in bits(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as usize;
                    by_count[c] |= 1 << v;
                    present |= 1 << c;
                }
                while present != 0 {
                    let c = present.trailing_zeros() as usize;
                    present &= present - 1;
                    next.push(by_count[c]);
                }
            }
            if next.len() != cells.len() {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

/// `u` and `v` have the same neighbours apart from each other.
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !(1u64 << u | 1u64 << v);
    g.neighbors(u) & mask == g.neighbors(v) & mask
}

fn search(g: &Graph, mut cells: Vec<u64>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(pos) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let target = cells[pos];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits(target) {
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..pos]);
        child.push(1 << v);
        child.push(target & !(1 << v));
        child.extend_from_slice(&cells[pos + 1..]);
        search(g, child, best);
    }
}

/// Canonical form and a canonical ordering (`order[pos]` = original vertex).
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(GraphError::TooLarge {
            what: "canonical form",
            n,
            max: CANON_MAX_ORDER,
        });
    }
    let mut best = None;
    search(g, vec![g.vertex_mask()], &mut best);
    let (code, order) = best.expect("search reaches at least one leaf");
    Ok((CanonicalForm { n: n as u8, code }, order))
}

/// Canonical form of `g`; defined for orders up to [`CANON_MAX_ORDER`].
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(form, _)| form)
}
