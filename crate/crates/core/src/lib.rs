//! Combinatorics of contact surgery on fully-decorated plumbing graphs.
//!
//! * [`graph`]: the decorated graph model, validation and consistency.
//! * [`reduce`]: reduction of inconsistent graphs to consistent subgraphs,
//!   with the round 1-handle recorded at each deletion.
//! * [`arith`]: slopes, torus coordinate changes, negative continued
//!   fractions and torus-bundle monodromy words.
//! * [`diagram`]: chains of Legendrian unknots, breaking, counts and Stein
//!   descriptions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

use alloc::vec::Vec;

pub mod arith;
pub mod diagram;
pub mod graph;
pub mod reduce;
mod unknot;

pub use graph::{
    is_consistent, is_extreme, validate_graph, vertex_unknot, Decoration, EdgeSign, Path,
    PlumbingGraph, StructuralError, ValidationReport, VertexId, VertexSign, Violation,
};
pub use reduce::{
    maximal_consistent_subgraphs, minimal_inconsistent_paths, non_extreme_vertices, reduce_to_tree,
    reduction_children, InconsistentPath, ReductionRule, ReductionTree, RoundHandleDatum,
};
pub use unknot::UnknotDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("invalid graph: {0}")]
    InvalidGraph(ValidationReport),
    #[error("invalid decoration b={b} r={r}")]
    InvalidDecoration { b: i64, r: i64 },
    #[error("no Legendrian unknot has tb={tb} rot={rot}")]
    InvalidUnknot { tb: i64, rot: i64 },
    #[error("non-extreme vertices present: {0:?}")]
    NonExtremeVertices(Vec<VertexId>),
    #[error("graph is already consistent")]
    AlreadyConsistent,
    #[error("{vertices} vertices exceeds the limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("need coprime p > q >= 1, got p={p} q={q}")]
    InvalidFraction { p: i64, q: i64 },
    #[error("empty exponent list")]
    EmptyExponents,
    #[error("exponent {value} at index {index} is below {min}")]
    ExponentTooSmall { index: usize, value: i64, min: i64 },
    #[error("chain length must be positive, got {n}")]
    InvalidChainLength { n: i64 },
    #[error("split slope {s} outside 0..={max}", max = .n - 1)]
    SplitSlopeOutOfRange { n: i64, s: i64 },
    #[error("determinant is {det}, expected 1")]
    NotUnimodular { det: i64 },
    #[error("|trace| = |{trace}| is not above 2")]
    NotHyperbolic { trace: i64 },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("rotation {rot} invalid for framing -{a} at index {index}")]
    InvalidRotation { index: usize, a: i64, rot: i64 },
    #[error("empty chain")]
    EmptyChain,
    #[error("interior component {index} is not a max-tb unknot")]
    InteriorNotMaxTb { index: usize },
    #[error("chain is closed")]
    NotLinear,
    #[error("chain is not closed")]
    NotCyclic,
    #[error("chain has a negative linking")]
    NotPositive,
    #[error("vertex sequence is not a path")]
    NotAPath,
    #[error("chain has an interior vertex of degree above 2")]
    NotEligible,
    #[error("graph shape needs the general wrapped-up construction")]
    UnsupportedShape,
}
