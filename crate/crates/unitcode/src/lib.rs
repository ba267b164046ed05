//! Linear codes from incidence matrices of unit graphs.
//!
//! The unit graph G(Z_n) has vertex set {0, …, n−1} with distinct x, y
//! adjacent iff (x + y) mod n is a unit. Its |V| × |E| vertex–edge
//! incidence matrix spans a linear code over GF(2) (or an odd prime
//! field), whose exact parameters [n, k, d] this crate computes, along
//! with the graph's edge-connectivity λ — the two are linked: for a
//! connected graph the binary code is [|E|, |V|−1, λ].

mod mincut;

pub mod cli;
pub mod code;
pub mod error;
pub mod gf_linalg;
pub mod modring;
pub mod unitgraph;
pub mod verify;

pub use code::{code_from_incidence, CodeReport, LinearCode, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use gf_linalg::{incidence_matrix, BinMatrix, MatrixDump, PrimeMatrix};
pub use modring::{gcd, is_prime, ResidueRing};
pub use verify::{predict_params, summarize, sweep, verify_theorems, Claim, TheoremReport};
pub use unitgraph::{
    build_unit_graph, predicted_edge_count, Bipartition, ComponentLabeling, CutResult,
    RegularityVerdict, UnitGraph,
};
