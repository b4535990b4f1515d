use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::FremderError;

/// Relative tolerance for structural checks (Hermitian within, skew within,
/// declared-kind preconditions).
pub const STRUCTURE_TOL: f64 = 1e-12;

/// Relative tolerance for the normality test `||AA' - A'A|| <= tol * ||A||^2`.
pub const NORMALITY_TOL: f64 = 1e-10;

/// A dense square complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<Complex64>,
}

impl ComplexMatrix {
    pub fn new(inner: DMatrix<Complex64>) -> Result<Self, FremderError> {
        if inner.nrows() != inner.ncols() || inner.nrows() == 0 {
            return Err(FremderError::NonSquare {
                rows: inner.nrows(),
                cols: inner.ncols(),
            });
        }
        if inner.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(FremderError::NonFinite);
        }
        Ok(ComplexMatrix { inner })
    }

    pub fn from_row_slice(n: usize, entries: &[Complex64]) -> Result<Self, FremderError> {
        if entries.len() != n * n {
            return Err(FremderError::NonSquare {
                rows: n,
                cols: entries.len().checked_div(n).unwrap_or(0),
            });
        }
        Self::new(DMatrix::from_row_slice(n, n, entries))
    }

    pub fn from_real_rows(n: usize, entries: &[f64]) -> Result<Self, FremderError> {
        let complex: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_row_slice(n, &complex)
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        let mut m = DMatrix::zeros(n, n);
        for (j, &z) in entries.iter().enumerate() {
            m[(j, j)] = z;
        }
        ComplexMatrix { inner: m }
    }

    pub fn identity(n: usize) -> Self {
        ComplexMatrix {
            inner: DMatrix::identity(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn as_inner(&self) -> &DMatrix<Complex64> {
        &self.inner
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.inner
    }

    /// Frobenius norm; the reference scale for all relative tolerances.
    pub fn norm(&self) -> f64 {
        self.inner.norm()
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix {
            inner: self.inner.adjoint(),
        }
    }

    pub fn scaled(&self, z: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            inner: self.inner.map(|a| a * z),
        }
    }

    /// `i * A`; maps skew-Hermitian matrices to Hermitian ones and vice versa.
    pub fn times_i(&self) -> ComplexMatrix {
        self.scaled(Complex64::new(0.0, 1.0))
    }

    /// The pencil `zI - A`.
    pub fn pencil(&self, z: Complex64) -> ComplexMatrix {
        let n = self.dim();
        let mut m = self.inner.map(|a| -a);
        for j in 0..n {
            m[(j, j)] += z;
        }
        ComplexMatrix { inner: m }
    }

    pub fn mul_vec(&self, x: &DVector<Complex64>) -> Result<DVector<Complex64>, FremderError> {
        if x.len() != self.dim() {
            return Err(FremderError::DimensionMismatch {
                dim: self.dim(),
                len: x.len(),
            });
        }
        Ok(&self.inner * x)
    }

    pub fn is_hermitian_within(&self, rel_tol: f64) -> bool {
        let c = (&self.inner - self.inner.adjoint()).norm() / 2.0;
        c <= rel_tol * self.norm().max(f64::MIN_POSITIVE)
    }

    pub fn is_skew_hermitian_within(&self, rel_tol: f64) -> bool {
        let b = (&self.inner + self.inner.adjoint()).norm() / 2.0;
        b <= rel_tol * self.norm().max(f64::MIN_POSITIVE)
    }

    pub fn is_normal_within(&self, rel_tol: f64) -> bool {
        let a = &self.inner;
        let comm = a * a.adjoint() - a.adjoint() * a;
        comm.norm() <= rel_tol * self.norm().powi(2).max(f64::MIN_POSITIVE)
    }
}

/// The additive split `A = B + C` with `B` Hermitian and `C` skew-Hermitian.
#[derive(Debug, Clone)]
pub struct HermitianParts {
    pub b: ComplexMatrix,
    pub c: ComplexMatrix,
}

/// Splits `a` into `B = (A + A')/2` and `C = (A - A')/2`.
pub fn hermitian_parts(a: &ComplexMatrix) -> HermitianParts {
    let adj = a.as_inner().adjoint();
    let half = Complex64::new(0.5, 0.0);
    let b = (a.as_inner() + &adj).map(|z| z * half);
    let c = (a.as_inner() - &adj).map(|z| z * half);
    HermitianParts {
        b: ComplexMatrix { inner: b },
        c: ComplexMatrix { inner: c },
    }
}

/// Evaluates `<x, Ax>` with the inner product conjugate-linear in the first
/// argument. No normalization is applied.
pub fn fremder_residual(
    a: &ComplexMatrix,
    x: &DVector<Complex64>,
) -> Result<Complex64, FremderError> {
    let ax = a.mul_vec(x)?;
    Ok(x.dotc(&ax))
}
