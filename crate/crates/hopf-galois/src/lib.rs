//! Exact Galois theory for finite-dimensional Hopf algebra extensions.

pub mod builders;
pub mod corings;
pub mod error;
pub mod hopf;
pub mod lattice;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod scalar;
pub mod subobjects;
pub mod extensions;

pub use error::{Error, Result};

/// Library version, also stamped into every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub use linalg::{Mat, QuotientSpace, SVec, Subspace};
pub use scalar::{Field, Scalar};
