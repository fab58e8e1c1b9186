//! Hamilton path certificates.

use alloc::vec::Vec;

use crate::formulas::CaseId;
use crate::graph::Graph;

/// A vertex sequence claimed to be a Hamilton `(u, v)`-path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonPath {
    pub vertices: Vec<usize>,
    pub endpoints: (usize, usize),
    /// Template the path was expanded from, if any.
    pub case: Option<CaseId>,
    pub verified: bool,
}

impl HamiltonPath {
    /// Wraps a sequence and checks it against `g`.
    pub fn certify(g: &Graph, vertices: Vec<usize>, case: Option<CaseId>) -> Self {
        let endpoints = (
            vertices.first().copied().unwrap_or(0),
            vertices.last().copied().unwrap_or(0),
        );
        let mut path = HamiltonPath {
            vertices,
            endpoints,
            case,
            verified: false,
        };
        path.verified = verify_path(g, &path);
        path
    }
}

/// True iff `path` starts at `endpoints.0`, ends at `endpoints.1`, visits
/// every vertex of `g` exactly once and only steps along edges.
pub fn verify_path(g: &Graph, path: &HamiltonPath) -> bool {
    let seq = &path.vertices;
    if seq.len() != g.order()
        || seq.first() != Some(&path.endpoints.0)
        || seq.last() != Some(&path.endpoints.1)
    {
        return false;
    }
    let mut seen = 0u64;
    for &v in seq {
        if v >= g.order() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path(vertices: Vec<usize>) -> HamiltonPath {
        let endpoints = (vertices[0], *vertices.last().unwrap());
        HamiltonPath {
            vertices,
            endpoints,
            case: None,
            verified: false,
        }
    }

    #[test]
    fn verify_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert!(verify_path(&k4, &path(vec![0, 1, 2, 3])));

        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(verify_path(&c5, &path(vec![0, 1, 2, 3, 4])));
        assert!(!verify_path(&c5, &path(vec![0, 2, 1, 3, 4])));
    }

    #[test]
    fn verify_rejects_malformed() {
        let k4 = Graph::complete(4).unwrap();
        assert!(!verify_path(&k4, &path(vec![0, 1, 2])));
        assert!(!verify_path(&k4, &path(vec![0, 1, 1, 3])));
        assert!(!verify_path(&k4, &path(vec![0, 1, 2, 7])));
        let mut p = path(vec![0, 1, 2, 3]);
        p.endpoints = (0, 2);
        assert!(!verify_path(&k4, &p));
        assert!(HamiltonPath::certify(&k4, vec![3, 1, 0, 2], None).verified);
    }
}
