//! Exact tooling for minimally hamiltonian-connected graphs.
//!
//! A graph is *hamiltonian-connected* when every pair of distinct vertices is
//! joined by a Hamilton path, and *minimally* so when deleting any single edge
//! destroys that property. This crate provides:
//!
//! - [`graph`]: an immutable bit-mask graph value with degree and
//!   connectivity queries, and [`canon`] for canonical forms.
//! - [`constructions`]: the wheel and the two extremal families `G(n, Δ)` and
//!   `H(n, Δ)` together with the `(n, Δ)` validity predicate.
//! - [`formulas`]: the explicit Hamilton path templates for every vertex pair
//!   of the two families, expanded and certified against the graph.
//! - [`solver`]: subset dynamic programming for fixed-endpoint Hamilton paths
//!   and full hamiltonian-connectivity.
//! - [`minimality`]: minimality verdicts with per-edge evidence.
//! - [`search`]: isomorph-free enumeration of small orders and the per-graph
//!   survey pipeline.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod minimality;
pub mod path;
pub mod search;
pub mod solver;

pub use canon::{canonical_form, CanonicalForm};
pub use constructions::{construct, validity, Family, LabeledGraph, Role, ValidityReason};
pub use graph::{DegreeProfile, Edge, Graph, GraphError, MAX_ORDER};
pub use minimality::{is_minimally_hc, MhcVerdict};
pub use path::{verify_path, HamiltonPath};
pub use solver::{is_hamiltonian_connected, HcResult};
