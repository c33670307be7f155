//! Simplicial complexes, partial-coloring whiskering, and an exact decision
//! procedure for vertex decomposability.
//!
//! The crate is organised around [`SimplicialComplex`], an immutable value
//! stored by its facets. [`PartialColoring::whisker`] builds the whiskered
//! complex `Δ_χ`, [`Decider`] decides vertex decomposability with
//! certificates, [`Graph`] covers independence complexes and chordality, and
//! [`verify`] checks the characterization theorems on generated instances.

pub mod bits;
pub mod coloring;
pub mod complex;
pub mod decomp;
pub mod error;
pub mod graph;
pub mod io;
pub mod label;
pub mod verify;

pub use bits::VertexSet;
pub use coloring::{ColoringDocument, PartialColoring};
pub use complex::{Properties, SimplicialComplex};
pub use decomp::{
    certify, is_shedding_vertex, is_vertex_decomposable, verify_certificate, Decider,
    DeciderConfig, MemoTable, VdCertificate,
};
pub use error::{Error, ErrorKind, Result};
pub use graph::{Graph, WhiskerCondition};
