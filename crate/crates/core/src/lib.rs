//! Exact detour (longest path) computations on small undirected graphs.
//!
//! A detour of a graph is a path of maximum order; a path and its reverse
//! are the same detour. This crate counts and enumerates detours with two
//! independent engines (a subset dynamic program and a branch-and-bound
//! depth-first search), classifies chords relative to a reference path,
//! instantiates the four/six detour constructions built from boundary
//! chords, and constructs the extremal graph families with few detours.
//!
//! The crate is `no_std` and only needs `alloc`. IO, catalog scanning and the
//! command line live in the `detours` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chords;
pub mod engine;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod path;
pub mod psi;

pub use chords::{classify_chord, is_basic_detour, ChordClass};
pub use engine::{
    count_detours_dfs, count_detours_dp, detour_order, detours_through_edge, edge_detour_counts,
    enumerate_detours, omega, DetourReport, DetourSearch, DEFAULT_EMISSION_LIMIT, DP_MAX_ORDER,
};
pub use error::Error;
pub use families::{build, validate_h10, FamilyId, H10Failure, H10Validation};
pub use graph::{Edge, Graph, BRUTE_FORCE_MAX_ORDER, MAX_ORDER};
pub use path::Path;
pub use psi::{low_coverage_edges, psi_detours, psi_edge_appearances};

pub type Result<T, E = Error> = core::result::Result<T, E>;
