//! Exact computations with finite-dimensional graded algebras presented by
//! quivers with relations: minimal resolutions, Ext groups, Iwanaga-Gorenstein
//! tests, stable categories of Cohen-Macaulay modules, and silting/tilting
//! verification for the canonical candidate module attached to such algebras.
//!
//! All linear algebra is exact (arbitrary-precision rationals or a prime
//! field) and every search is deterministic given the same seed, so reports
//! are byte-for-byte reproducible.

pub mod scalar;
pub mod linalg;
pub mod quiver;
pub mod algebra;
pub mod module;
pub mod homology;
pub mod coxeter;
pub mod tilting;
pub mod input;
pub mod report;

pub use scalar::{Field, Scalar};

/// Error type shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("algebra is not finite-dimensional up to length {0} (cap reached)")]
    NotFiniteDimensional(usize),
    #[error("computation exceeded cap: {0}")]
    CapExceeded(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
