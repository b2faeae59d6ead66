//! Enumeration of the integer curvatures occurring in a generalized sphere
//! packing below a bound.
//!
//! The packing generated by an integral octuple is the orbit of its root
//! under the five involutions `A₁..A₅`; the curvature set of the packing is
//! the set of quadruple entries occurring across that orbit. This crate
//! walks the orbit as a canonical spanning tree — each octuple is produced
//! exactly once, with no visited set — records every entry at or below the
//! requested bound into a [`CurvatureTable`], and prunes subtrees that can
//! no longer contribute. An independent exhaustive breadth-first oracle
//! ([`enumerate_exhaustive`]) cross-checks the pruned traversal at small
//! bounds.

mod enumerate;
mod oracle;
mod table;
mod traverse;

use octuple_algebra::OctupleError;
use thiserror::Error;

pub use enumerate::{enumerate_curvatures, OrbitOptions};
pub use oracle::{enumerate_exhaustive, oracle_curvature_set, MAX_ORACLE_DEPTH};
pub use table::{CurvatureTable, BITMAP_MAGIC};
pub use traverse::{child_accepted, children, expansion_floor};

/// Errors from enumeration entry points.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    /// The curvature bound must be a positive integer.
    #[error("curvature bound must be at least 1, got {bound}")]
    InvalidBound {
        /// The rejected bound.
        bound: i64,
    },

    /// The exhaustive oracle refuses depths past its explosion guard.
    #[error("exhaustive oracle depth {depth} exceeds the guard ({max})")]
    DepthTooLarge {
        /// The requested depth.
        depth: u8,
        /// The maximum accepted depth.
        max: u8,
    },

    /// The tables needed for this bound do not fit the configured budget.
    #[error(
        "enumerating to bound {bound} needs about {required_mib} MiB of table \
         memory, over the configured budget of {budget_mib} MiB"
    )]
    MemoryBudget {
        /// The requested bound.
        bound: i64,
        /// Estimated table memory for this run, in MiB (rounded up).
        required_mib: u64,
        /// The configured budget in MiB.
        budget_mib: u64,
    },

    /// The worker pool could not be constructed.
    #[error("worker pool construction failed: {reason}")]
    ThreadPool {
        /// Human-readable cause.
        reason: String,
    },

    /// The seed octuple was rejected by the algebra layer.
    #[error(transparent)]
    Seed(#[from] OctupleError),
}

/// Convenience alias for enumeration results.
pub type Result<T> = std::result::Result<T, EnumerationError>;
