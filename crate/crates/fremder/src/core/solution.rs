use nalgebra::DVector;
use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::matrix::{fremder_residual, ComplexMatrix};
use crate::error::FremderError;

/// Triviality taxonomy of a confirmed solution. Kernel membership is checked
/// before adjoint-kernel membership, so a vector in both is tagged
/// `TrivialKernel`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionKind {
    Nontrivial,
    TrivialKernel,
    TrivialAdjointKernel,
}

impl SolutionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionKind::Nontrivial => "Nontrivial",
            SolutionKind::TrivialKernel => "TrivialKernel",
            SolutionKind::TrivialAdjointKernel => "TrivialAdjointKernel",
        }
    }
}

/// Verdict of `classify_solution`: either a solution kind or a rejection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionClass {
    Nontrivial,
    TrivialKernel,
    TrivialAdjointKernel,
    NotFremder,
}

impl SolutionClass {
    pub fn is_fremder(self) -> bool {
        self != SolutionClass::NotFremder
    }

    pub fn kind(self) -> Option<SolutionKind> {
        match self {
            SolutionClass::Nontrivial => Some(SolutionKind::Nontrivial),
            SolutionClass::TrivialKernel => Some(SolutionKind::TrivialKernel),
            SolutionClass::TrivialAdjointKernel => Some(SolutionKind::TrivialAdjointKernel),
            SolutionClass::NotFremder => None,
        }
    }
}

/// A candidate vector together with its residual `<x, Ax>` and, when produced
/// by the normal-matrix solver, the simplex weights that generated it.
#[derive(Debug, Clone)]
pub struct FremderSolution {
    pub vector: DVector<Complex64>,
    pub residual: Complex64,
    pub kind: SolutionKind,
    pub coefficients: Option<Vec<f64>>,
}

/// Decides whether `x` is a fremdervector of `a` and, if so, whether it is
/// trivial. Thresholds are relative: residual against
/// `residual_tol * ||A|| * ||x||^2`, kernel membership against
/// `zero_tol * ||A|| * ||x||`.
pub fn classify_solution(
    a: &ComplexMatrix,
    x: &DVector<Complex64>,
    cfg: &SolverConfig,
) -> Result<SolutionClass, FremderError> {
    cfg.validate()?;
    let x_norm = x.norm();
    if x_norm == 0.0 {
        return Err(FremderError::ZeroVector);
    }
    let residual = fremder_residual(a, x)?;
    let a_norm = a.norm();
    if residual.norm() > cfg.residual_tol * a_norm * x_norm * x_norm {
        return Ok(SolutionClass::NotFremder);
    }
    let kernel_threshold = cfg.zero_tol * a_norm * x_norm;
    let ax = a.mul_vec(x)?;
    if ax.norm() <= kernel_threshold {
        return Ok(SolutionClass::TrivialKernel);
    }
    let adjx = a.adjoint().mul_vec(x)?;
    if adjx.norm() <= kernel_threshold {
        return Ok(SolutionClass::TrivialAdjointKernel);
    }
    Ok(SolutionClass::Nontrivial)
}
