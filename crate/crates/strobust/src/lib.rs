//! Toolkit for building ST-robust / depth-robust graph families and checking
//! their combinatorial properties on desk-scale instances.
//!
//! The crate is organized in four layers:
//!
//! - [`graph`]: immutable DAG values with designated input/output lists,
//!   structural queries, and a line-oriented text format.
//! - [`verify`]: exhaustive and Monte-Carlo checkers for depth-robustness,
//!   ST-robustness, superconcentrator / connector / grate properties,
//!   source-to-sink robustness, and challenge hardness. Every check returns
//!   a [`verify::Report`] carrying a witness or counterexample.
//! - [`construct`]: deterministic generators for butterflies,
//!   superconcentrators, certified base graphs, the randomized three-layer
//!   graph, the superconcentrator sandwich, and the copy amplifier.
//! - [`transform`]: the node-replacement reduction with full bookkeeping,
//!   irrepairable-edge accounting, path lifting, the hardness overlay,
//!   greedy path peeling, witness extraction for the three-layer graph,
//!   vertex-disjoint routing, and the permutation codec.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be shared and evaluated across threads freely.

pub mod bits;
pub mod construct;
pub mod graph;
pub mod subsets;
pub mod transform;
pub mod verify;

pub use graph::{GraphError, IoDag, NodeId, PathRec, RemovalSet};
