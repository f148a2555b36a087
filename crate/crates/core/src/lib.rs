//! Quasitriangular structures on cyclic group algebras, the braided
//! R-matrices they induce, and exact checks of the resulting braid-group
//! representations and their action on entangled two-qubit states.
//!
//! Everything is computed over exact cyclotomic arithmetic
//! ([`scalar::Cyclotomic`]); a complex float backend mirrors the matrix
//! layer for cross-checks.

pub mod braidrep;
pub mod error;
pub mod groupalg;
pub mod linalg;
pub mod quantum;
pub mod scalar;

pub use error::{Error, Result};
