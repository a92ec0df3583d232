//! Colouring squares of claw-free graphs.
//!
//! The crate follows the reduction from claw-free graphs to quasi-line
//! graphs to line graphs of multigraphs: [`selector`] finds the vertex that
//! can be removed at each step, [`coloring::main_square_coloring`] runs the
//! recursion, and the verifier module checks the counting bounds that back it.

pub mod coloring;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod recognition;
pub mod selector;
pub mod verifier;

pub use coloring::{ColoringResult, Method};
pub use error::{Error, Result};
pub use graph::{Coloring, EdgeLabel, LineGraph, Multigraph, SimpleGraph, Vertex};
pub use selector::{SelectorVariant, SelectorWitness, TwoPathDiagnostic};
