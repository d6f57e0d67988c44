//! Potentially K_m − C_4-graphic degree sequences.
//!
//! A degree sequence is potentially H-graphic when at least one of its
//! realizations contains H as a subgraph. This crate decides that property
//! for H = K_m − C_4 by walking the realization space, computes the
//! threshold σ(K_m − C_4, n) exhaustively for small n, and replays the
//! inductive argument for m = 5 constructively.

pub mod error;
pub mod extremal;
pub mod graphs;
pub mod limits;
pub mod proof_replay;
pub mod realizations;
pub mod sequences;

pub use error::{Error, Result};
pub use graphs::{
    canonical_form, complement, complete_graph, contains_subgraph, cycle_graph, delete_vertex,
    disjoint_union, find_embedding, from_graph6, join, km_minus_c4, perfect_matching, to_graph6,
    CanonicalForm, SmallGraph, TargetPattern,
};
pub use limits::Limits;
pub use realizations::{
    enumerate_realizations, havel_hakimi_realize, is_potentially, theorem2_interchange, two_switch,
    InterchangeVertices, RealizationWalk, SwitchOrder, WitnessResult,
};
pub use sequences::{enumerate_graphical_sequences, DegreeSequence};
