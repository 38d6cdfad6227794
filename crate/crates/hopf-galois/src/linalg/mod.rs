//! Exact linear algebra: dense matrices, canonical subspaces, quotients and
//! sparse helpers.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

mod echelon;
mod mat;
pub mod sparse;
mod subspace;

pub use echelon::{kernel_of_columns, sparse_rank, Echelon, SparseQuotient};
pub use mat::{Mat, Rref};
pub use sparse::{Acc, SVec, SparseMap};
pub use subspace::{QuotientSpace, Subspace};

/// Default ambient-dimension guard.
pub const DEFAULT_DIM_CAP: usize = 4096;

static DIM_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_DIM_CAP);

pub fn dimension_cap() -> usize {
    DIM_CAP.load(Ordering::Relaxed)
}

pub fn set_dimension_cap(cap: usize) {
    DIM_CAP.store(cap, Ordering::Relaxed);
}

/// Fails when an ambient dimension exceeds the guard.
pub fn guard(needed: usize) -> Result<()> {
    let cap = dimension_cap();
    if needed > cap {
        return Err(Error::Guard { needed, cap });
    }
    Ok(())
}
