//! Matrix representations, the Hermitian/skew-Hermitian split, definiteness
//! classification, kernel extraction, and the triviality taxonomy.

mod classify;
mod matrix;
mod solution;
mod spectrum;

pub use classify::{classify_definiteness, kernel_basis, DefinitenessClass, MatrixKind};
pub(crate) use classify::hermitian_eigen;
pub use matrix::{
    fremder_residual, hermitian_parts, ComplexMatrix, HermitianParts, NORMALITY_TOL, STRUCTURE_TOL,
};
pub use solution::{classify_solution, FremderSolution, SolutionClass, SolutionKind};
pub use spectrum::{spectrum, Spectrum};
