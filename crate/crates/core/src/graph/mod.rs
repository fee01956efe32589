//! Graph representations, degeneracy ordering and sorted-set primitives.
//!
//! [`EditableGraph`] is the mutable form global reduction works on;
//! [`compact`] freezes it into a [`CompactGraph`] that the enumeration kernels
//! read concurrently without locking.

mod compact;
mod editable;
mod order;
pub mod setops;

pub use compact::{compact, CompactGraph, DeadVertices};
pub use editable::EditableGraph;
pub use order::{degeneracy_order, DegeneracyOrder, LaterNeighbors};
pub use setops::intersect_sorted;
