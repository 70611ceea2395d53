//! Structural controllability of linear differential-algebraic systems
//! `M(d/dt) w = 0`, decided from the sparsity and degree pattern of `M`
//! through matchings of its weighted bipartite graph, with an exact
//! integer-polynomial oracle for cross-checking.

pub mod bench;
pub mod bigraph;
pub mod decision;
pub mod error;
pub mod generate;
pub mod oracle;
pub mod pattern;
pub mod reduction;
pub mod statespace;

pub use bigraph::{build_graph, max_matching, term_rank, Edge, Matching, WeightedBigraph};
pub use decision::{analyze, analyze_with, AnalysisReport, Verdict};
pub use error::AnalysisError;
pub use pattern::{
    emit_pattern, emit_statespace, parse_pattern, parse_statespace, ParseError, PolyPattern,
    StateSpacePattern,
};
pub use reduction::{remove_redundant_edges, ReducedGraph, ReductionOptions};
