use nalgebra::DVector;
use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::{
    fremder_residual, hermitian_eigen, ComplexMatrix, FremderSolution, SolutionKind, STRUCTURE_TOL,
};
use crate::error::FremderError;

/// Constructive solver for Hermitian matrices. A nontrivial fremdervector
/// exists exactly when the matrix is indefinite; it is built from the
/// most-positive and most-negative eigenpairs so the two quadratic-form terms
/// cancel.
pub fn solve_hermitian(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<Option<FremderSolution>, FremderError> {
    cfg.validate()?;
    if !a.is_hermitian_within(STRUCTURE_TOL) {
        return Err(FremderError::Structure("expected a Hermitian matrix"));
    }
    let (values, vectors) = hermitian_eigen(a.as_inner());
    let n = a.dim();
    let threshold = cfg.zero_tol * a.norm();
    let lambda_min = values[0];
    let lambda_max = values[n - 1];
    if !(lambda_min < -threshold && lambda_max > threshold) {
        return Ok(None);
    }
    // x = sqrt(-lambda_min) phi_max + sqrt(lambda_max) phi_min, normalized.
    let cp = (-lambda_min).sqrt();
    let cn = lambda_max.sqrt();
    let scale = (lambda_max - lambda_min).sqrt();
    let phi_max = DVector::from(vectors.column(n - 1));
    let phi_min = DVector::from(vectors.column(0));
    let mut x =
        (phi_max * Complex64::new(cp / scale, 0.0)) + (phi_min * Complex64::new(cn / scale, 0.0));
    let norm = x.norm();
    x /= Complex64::new(norm, 0.0);
    let residual = fremder_residual(a, &x)?;
    Ok(Some(FremderSolution {
        vector: x,
        residual,
        kind: SolutionKind::Nontrivial,
        coefficients: None,
    }))
}

/// Skew-Hermitian solver by reduction: `<x, Ax> = 0` iff `<x, (iA)x> = 0` and
/// `iA` is Hermitian.
pub fn solve_skew_hermitian(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<Option<FremderSolution>, FremderError> {
    cfg.validate()?;
    if !a.is_skew_hermitian_within(STRUCTURE_TOL) {
        return Err(FremderError::Structure("expected a skew-Hermitian matrix"));
    }
    match solve_hermitian(&a.times_i(), cfg)? {
        None => Ok(None),
        Some(sol) => {
            let residual = fremder_residual(a, &sol.vector)?;
            Ok(Some(FremderSolution {
                vector: sol.vector,
                residual,
                kind: SolutionKind::Nontrivial,
                coefficients: None,
            }))
        }
    }
}
