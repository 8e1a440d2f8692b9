//! Enumeration and spectral verification of maximal outerplanar graphs.
//!
//! The crate enumerates triangulated polygons up to dihedral symmetry (one per
//! isomorphism class of maximal outerplanar graphs), brackets each graph's
//! spectral radius with certified bounds, and checks which class maximizes it
//! for every order in a range.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod outerplanarity;
pub mod spectral;
pub mod triangulation;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{fan_graph, wheel_graph, SmallGraph};
pub use triangulation::{CanonicalCode, Triangulation};
