//! Deciding existence of, computing, and independently verifying
//! fremdervectors — vectors orthogonal to their image under a matrix — and
//! fremdervalues, the shifts `z` for which `zI - A` has such a vector.
//!
//! The crate is organized as:
//!
//! - [`core`]: matrix types, the Hermitian/skew-Hermitian split, definiteness
//!   classification, kernels, and the triviality taxonomy;
//! - [`structured`]: constructive solvers for Hermitian, skew-Hermitian, and
//!   normal matrices, plus the projected eigenproblem for a semi-definite
//!   skew part;
//! - [`general`]: the search for arbitrary matrices, fremdervalue rectangle
//!   bounds, and the fremdervalue membership decision;
//! - [`oracle`]: slow, independent verifiers used by tests and screens;
//! - [`io`] / [`report`]: file formats and the CLI report schema.

pub mod config;
pub mod core;
pub mod error;
pub mod general;
pub mod io;
pub mod oracle;
pub mod report;
mod sampling;
pub mod structured;

pub use config::SolverConfig;
pub use error::FremderError;
