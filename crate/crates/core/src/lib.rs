//! Construction, verification and stress-testing of r-ample and r-conic
//! simplicial complexes.
//!
//! * [`complex`]: the simplicial-complex data model, set-level operations and
//!   canonical file formats.
//! * [`ampleness`]: exact r-ampleness and r-conicity verdicts, witness search,
//!   embedding extension and reduced Dedekind numbers.
//! * [`constructions`]: Paley, medial-regime random, Rado and Barmak towers and
//!   small named fixtures.
//! * [`topology`]: exact homology, torsion, disc filling and the topological
//!   complexity bound arithmetic.
//! * [`experiments`]: removal families, resilience and other seeded batch runs.

pub mod ampleness;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod topology;

pub use complex::{AmbientContext, Simplex, SimplicialComplex, Vertex, VertexSet};
pub use error::{Error, Result};
