//! Exact computation of global forcing sets for maximal matchings.
//!
//! The crate builds simple graphs and corona products, enumerates maximal
//! matchings, computes the global forcing number `φ_gm` by branch-and-bound
//! over the maximal-matching incidence matrix, evaluates the known corona
//! bounds against exact values, and exports the equivalent 0/1 integer
//! program in LP text format.

pub mod bitset;
pub mod bounds;
pub mod corona;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod ilp;
pub mod matchings;

pub use bitset::BitSet;
pub use bounds::{verify_bounds, BoundsReport};
pub use corona::{corona_product, CoronaGraph, CoronaPartition, EdgePart};
pub use error::{Error, Result};
pub use forcing::{ForcingResult, IncidenceMatrix, SearchLimits};
pub use graph::{ComponentShape, Graph, GraphFamily};
pub use ilp::IlpModel;
pub use matchings::{Matching, MatchingSummary, DEFAULT_BUDGET};
