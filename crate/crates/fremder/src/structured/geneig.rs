use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::{
    classify_definiteness, hermitian_eigen, hermitian_parts, kernel_basis, ComplexMatrix,
    MatrixKind,
};
use crate::error::FremderError;

/// Fremdervalue/fremdervector pairs obtained by restricting the Hermitian
/// part to the kernel of a semi-definite skew part.
#[derive(Debug, Clone)]
pub struct GeneigResult {
    /// `(z, x)` with `z` real and `x` a unit vector in `ker(C)`; each `z` is a
    /// fremdervalue of the input and `x` a fremdervector of `zI - A`.
    pub pairs: Vec<(f64, DVector<Complex64>)>,
    /// Dimension of `ker(C)`.
    pub projector_rank: usize,
}

/// Solves the projected eigenproblem on `ker(C)`: with `Q` an orthonormal
/// kernel basis, the `k x k` Hermitian problem `(Q'BQ) y = z y` yields pairs
/// `(z, Qy)`.
///
/// Requires the skew part `C` to be positive or negative semi-definite. The
/// dual case with `B` semi-definite reduces to this one applied to `iA`, whose
/// Hermitian and skew parts are `iC` and `iB`; the fremdervalues of the
/// original matrix are then `-iz`.
pub fn solve_semidefinite_skew(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<GeneigResult, FremderError> {
    cfg.validate()?;
    let parts = hermitian_parts(a);
    let class = classify_definiteness(&parts.c, MatrixKind::SkewHermitian, cfg)?;
    if class.is_indefinite() {
        return Err(FremderError::Hypothesis(format!(
            "the skew-Hermitian part must be positive or negative semi-definite, got {}",
            class.as_str()
        )));
    }
    let kernel = kernel_basis(&parts.c, cfg)?;
    let k = kernel.len();
    if k == 0 {
        return Ok(GeneigResult {
            pairs: Vec::new(),
            projector_rank: 0,
        });
    }
    let n = a.dim();
    let mut q = DMatrix::zeros(n, k);
    for (j, v) in kernel.iter().enumerate() {
        q.set_column(j, v);
    }
    let restricted = q.adjoint() * parts.b.as_inner() * &q;
    let (values, vectors) = hermitian_eigen(&restricted);
    let mut pairs = Vec::with_capacity(k);
    for j in 0..k {
        let mut x = &q * DVector::from(vectors.column(j));
        let norm = x.norm();
        x /= Complex64::new(norm, 0.0);
        pairs.push((values[j], x));
    }
    Ok(GeneigResult {
        pairs,
        projector_rank: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::fremder_residual;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn two_dimensional_restriction() {
        // B = [[1,1,0],[1,3,0],[0,0,5]], C = diag(0,0,-2i): the restriction of
        // B to ker(C) is [[1,1],[1,3]] with eigenvalues 2 -/+ sqrt(2).
        let mut m = DMatrix::zeros(3, 3);
        m[(0, 0)] = c(1.0, 0.0);
        m[(0, 1)] = c(1.0, 0.0);
        m[(1, 0)] = c(1.0, 0.0);
        m[(1, 1)] = c(3.0, 0.0);
        m[(2, 2)] = c(5.0, -2.0);
        let a = ComplexMatrix::new(m).unwrap();
        let result = solve_semidefinite_skew(&a, &cfg()).unwrap();
        assert_eq!(result.projector_rank, 2);
        assert_eq!(result.pairs.len(), 2);
        let r2 = 2.0f64.sqrt();
        assert!((result.pairs[0].0 - (2.0 - r2)).abs() <= 1e-12);
        assert!((result.pairs[1].0 - (2.0 + r2)).abs() <= 1e-12);
        for (z, x) in &result.pairs {
            let pencil = a.pencil(c(*z, 0.0));
            let res = fremder_residual(&pencil, x).unwrap();
            assert!(res.norm() <= 1e-10 * pencil.norm());
            assert!(x[2].norm() <= 1e-12);
        }
    }

    #[test]
    fn hermitian_input_yields_full_eigendecomposition() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(4.0, 0.0)]);
        let result = solve_semidefinite_skew(&a, &cfg()).unwrap();
        assert_eq!(result.projector_rank, 2);
        let zs: Vec<f64> = result.pairs.iter().map(|(z, _)| *z).collect();
        assert!((zs[0] - 1.0).abs() <= 1e-12);
        assert!((zs[1] - 4.0).abs() <= 1e-12);
    }

    #[test]
    fn one_dimensional_kernel() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, -2.0)]);
        let result = solve_semidefinite_skew(&a, &cfg()).unwrap();
        assert_eq!(result.projector_rank, 1);
        assert_eq!(result.pairs.len(), 1);
        assert!((result.pairs[0].0 - 1.0).abs() <= 1e-12);
        assert!((result.pairs[0].1[0].norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn indefinite_skew_part_is_rejected() {
        let a = ComplexMatrix::diagonal(&[c(0.0, 1.0), c(0.0, -1.0)]);
        assert!(matches!(
            solve_semidefinite_skew(&a, &cfg()),
            Err(FremderError::Hypothesis(_))
        ));
    }

    #[test]
    fn trivial_kernel_gives_empty_result() {
        let a = ComplexMatrix::diagonal(&[c(1.0, -1.0), c(2.0, -3.0)]);
        let result = solve_semidefinite_skew(&a, &cfg()).unwrap();
        assert_eq!(result.projector_rank, 0);
        assert!(result.pairs.is_empty());
    }

    #[test]
    fn dual_case_through_i_a() {
        // B = diag(1, 1) is definite, C = diag(i, -i) indefinite: iA has skew
        // part iB which is semi-definite, so the dual reduction applies.
        let a = ComplexMatrix::diagonal(&[c(1.0, 1.0), c(1.0, -1.0)]);
        let result = solve_semidefinite_skew(&a.times_i(), &cfg()).unwrap();
        assert_eq!(result.projector_rank, 0);
        assert!(result.pairs.is_empty());
    }
}
