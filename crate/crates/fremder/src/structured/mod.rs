//! Constructive solvers for the structured classes: Hermitian,
//! skew-Hermitian, normal, and matrices with a semi-definite skew part.

mod geneig;
mod hermitian;
mod normal;
mod simplex;

pub use geneig::{solve_semidefinite_skew, GeneigResult};
pub use hermitian::{solve_hermitian, solve_skew_hermitian};
pub use normal::solve_normal;
pub use simplex::{simplex_weights, SimplexWeights};
