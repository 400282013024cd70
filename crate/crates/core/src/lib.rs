//! Finite commutative rings, their cozero-divisor graphs and orientable genus
//! certification.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] builds finite commutative rings with unity as operation tables
//!   (integers mod n, Galois fields, polynomial quotients and direct products)
//!   and computes units, principal ideals, maximal ideals and nilpotent
//!   indices. A small catalog of local rings is provided.
//! * [`graph`] turns a ring into its cozero-divisor graph or reduced
//!   cozero-divisor graph and offers the graph machinery the genus engine
//!   relies on (blocks, girth, bicliques, isomorphism, subdivision witnesses,
//!   DOT/JSON export).
//! * [`genus`] computes orientable genus bounds: closed formulas, Euler/girth
//!   bounds, biclique and clique bounds, face tracing over rotation systems,
//!   an exact branch-and-bound embedding search and an annealing heuristic.
//! * [`classify`] drives ring to graph to genus pipelines and reproduces the
//!   genus-two classification with evidence reports.
//! * [`cli`] is the command-line front end used by the `cozero` binary.

pub mod classify;
pub mod cli;
pub mod genus;
pub mod graph;
pub mod ring;

pub use genus::{Budget, EmbeddingCertificate, GenusBound, GenusStatus, RotationSystem};
pub use graph::{SimpleGraph, VertexId};
pub use ring::{ElementId, FiniteRing, Ideal, LocalRingDescriptor, RingSpec};
