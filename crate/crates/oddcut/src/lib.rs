//! Parity-constrained multiway cut toolkit for directed acyclic graphs.
//!
//! Provides an exact fixed-parameter solver for odd multiway node cut in
//! DAGs (shadow containers, parity-preserving torso, odd cycle transversal),
//! a combinatorial 2-approximation for the two-terminal edge blocker, the
//! edge/node reduction transforms and gadget generators, and exact-rational
//! verification of odd-path-cover LP certificates.

pub mod approx;
pub mod flow;
pub mod graph;
pub mod lpcert;
pub mod oct;
pub mod reductions;
pub mod separators;
pub mod shadow;
pub mod solver;
pub mod torso;

pub use graph::{
    double_cover, enumerate_t_paths, has_odd_path, parity_reach, reachable_from, CutKind, Dag,
    Graph, Instance, NodeId, ParityFilter, Path, Rational, UndirGraph,
};
