//! Exact homological invariants of small Lie algebras and their
//! enveloping algebras.
//!
//! The crate computes, over arbitrary-precision rationals:
//!
//! * Chevalley-Eilenberg (co)homology of finite-dimensional modules,
//! * PBW normal forms and filtered automorphisms of enveloping algebras,
//! * Hochschild (co)homology of `U(g)` for k-central bimodules, with the
//!   Poincare-duality twist by the top exterior power,
//! * filtration-truncated Ext groups against `U(g)`, with stabilization
//!   ladders and an associated-graded cross-check,
//!
//! and packages the identities relating them as machine-checkable
//! verdicts over a catalog of built-in algebras (see [`catalog`] and
//! [`checks`]). All arithmetic is exact; every asserted equality is an
//! equality of integers computed by rank.

pub mod catalog;
pub mod ce;
pub mod checks;
mod combinat;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod pbw;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod trunc;

pub use scalar::{binomial, Rat, Scalar};

use std::sync::Arc;

/// Shared handle to an algebra; every derived object keeps one.
pub type AlgRef<F> = Arc<lie::LieAlgebra<F>>;

/// Umbrella error for the verification entry points.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error(transparent)]
    Lie(#[from] lie::LieError),
    #[error(transparent)]
    Pbw(#[from] pbw::PbwError),
    #[error(transparent)]
    Ce(#[from] ce::CeError),
    #[error(transparent)]
    Trunc(#[from] trunc::TruncError),
    #[error(transparent)]
    Io(#[from] io::IoError),
}

pub type Result<T> = std::result::Result<T, Error>;
