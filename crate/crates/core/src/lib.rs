//! Transitive decompositions of graphs.
//!
//! A transitive decomposition is a partition of a graph's edge set whose
//! parts are permuted among themselves, and transitively, by a group of
//! automorphisms. This crate provides the permutation-group machinery, graph
//! constructions and searches, a verifier for such decompositions, the
//! lifting of a decomposition from an imprimitive quotient back to the graph,
//! the correspondence with line-transitive partial linear spaces, and the
//! five-colour transitive 1-decomposition of the dodecahedron.

pub mod decomposition;
pub mod error;
pub mod graph;
pub mod io;
pub mod origami;
pub mod permgroup;
pub mod pls;

pub use decomposition::{EdgePartition, VerificationReport};
pub use error::{Error, Result};
pub use graph::{BlockSystem, Edge, Graph};
pub use permgroup::{PermGroup, Permutation};
pub use pls::PartialLinearSpace;
