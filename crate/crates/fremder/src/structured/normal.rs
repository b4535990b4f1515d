use nalgebra::DVector;
use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::{
    fremder_residual, spectrum, ComplexMatrix, FremderSolution, SolutionKind, Spectrum,
};
use crate::error::FremderError;
use crate::structured::simplex::{simplex_weights, SimplexWeights};

/// Solver for normal matrices: the origin-in-convex-hull problem over the
/// eigenvalues, lifted back to a vector through the orthonormal eigenbasis.
///
/// A combination supported on nonzero eigenvalues is preferred, so a
/// nontrivial fremdervector is returned whenever one exists; a solution
/// supported only on numerically zero eigenvalues is tagged trivial.
pub fn solve_normal(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<Option<FremderSolution>, FremderError> {
    cfg.validate()?;
    let sp = spectrum(a, cfg)?;
    let threshold = cfg.zero_tol * a.norm();
    let nonzero: Vec<usize> = (0..sp.values.len())
        .filter(|&j| sp.values[j].norm() > threshold)
        .collect();

    if !nonzero.is_empty() {
        let pts: Vec<Complex64> = nonzero.iter().map(|&j| sp.values[j]).collect();
        if let Some(w) = simplex_weights(&pts)? {
            let mut full = vec![0.0; sp.values.len()];
            for (local, &j) in nonzero.iter().enumerate() {
                full[j] = w.weights[local];
            }
            return Ok(Some(build_solution(
                a,
                &sp,
                full,
                SolutionKind::Nontrivial,
            )?));
        }
    }

    match simplex_weights(&sp.values)? {
        None => Ok(None),
        Some(SimplexWeights { weights, support }) => {
            // Reaching this branch means the nonzero eigenvalues alone were
            // infeasible, so the support consists of zero eigenvalues only and
            // the vector lies in the kernel (which equals the adjoint kernel
            // for a normal matrix).
            debug_assert!(support.iter().all(|&j| sp.values[j].norm() <= threshold));
            Ok(Some(build_solution(
                a,
                &sp,
                weights,
                SolutionKind::TrivialKernel,
            )?))
        }
    }
}

fn build_solution(
    a: &ComplexMatrix,
    sp: &Spectrum,
    weights: Vec<f64>,
    kind: SolutionKind,
) -> Result<FremderSolution, FremderError> {
    let n = a.dim();
    let mut x = DVector::from_element(n, Complex64::new(0.0, 0.0));
    for (j, &d) in weights.iter().enumerate() {
        if d > 0.0 {
            x += DVector::from(sp.vectors.column(j)) * Complex64::new(d.sqrt(), 0.0);
        }
    }
    let norm = x.norm();
    x /= Complex64::new(norm, 0.0);
    let residual = fremder_residual(a, &x)?;
    Ok(FremderSolution {
        vector: x,
        residual,
        kind,
        coefficients: Some(weights),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{classify_solution, SolutionClass};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn eigenvalues_summing_to_zero() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 1.0), c(-1.0, -1.0)]);
        let sol = solve_normal(&a, &cfg()).unwrap().unwrap();
        assert!(sol.residual.norm() <= 1e-12 * a.norm());
        assert_eq!(sol.kind, SolutionKind::Nontrivial);
        let s = 3.0f64.sqrt();
        for j in 0..3 {
            assert!((sol.vector[j].norm() - 1.0 / s).abs() <= 1e-10);
        }
        let d = sol.coefficients.unwrap();
        assert!((d.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn infeasible_hull() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 2.0)]);
        assert!(solve_normal(&a, &cfg()).unwrap().is_none());
    }

    #[test]
    fn kernel_only_solution_is_trivial() {
        let a = ComplexMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]);
        let sol = solve_normal(&a, &cfg()).unwrap().unwrap();
        assert_eq!(sol.kind, SolutionKind::TrivialKernel);
        assert!((sol.vector[0].norm() - 1.0).abs() <= 1e-12);
        assert_eq!(
            classify_solution(&a, &sol.vector, &cfg()).unwrap(),
            SolutionClass::TrivialKernel
        );
    }

    #[test]
    fn nontrivial_preferred_over_kernel() {
        // Both e1 (kernel) and the (1,-1) pair solve the hull problem; the
        // nonzero pair must win.
        let a = ComplexMatrix::diagonal(&[c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
        let sol = solve_normal(&a, &cfg()).unwrap().unwrap();
        assert_eq!(sol.kind, SolutionKind::Nontrivial);
        assert!(sol.vector[0].norm() <= 1e-12);
    }

    #[test]
    fn rejects_non_normal() {
        let a = ComplexMatrix::from_real_rows(2, &[1.0, 2.0, 0.0, -1.0]).unwrap();
        assert!(solve_normal(&a, &cfg()).is_err());
    }
}
