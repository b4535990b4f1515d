use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::matrix::{ComplexMatrix, STRUCTURE_TOL};
use crate::error::FremderError;

/// Sign pattern of a Hermitian (or, via imaginary parts, skew-Hermitian)
/// spectrum after thresholding small eigenvalues to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefinitenessClass {
    PositiveDefinite,
    PositiveSemiDefinite,
    NegativeDefinite,
    NegativeSemiDefinite,
    Indefinite,
    Zero,
}

impl DefinitenessClass {
    pub fn is_indefinite(self) -> bool {
        self == DefinitenessClass::Indefinite
    }

    /// Positive or negative semi-definite, including the zero matrix.
    pub fn is_semi_definite(self) -> bool {
        matches!(
            self,
            DefinitenessClass::PositiveSemiDefinite
                | DefinitenessClass::NegativeSemiDefinite
                | DefinitenessClass::Zero
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DefinitenessClass::PositiveDefinite => "PositiveDefinite",
            DefinitenessClass::PositiveSemiDefinite => "PositiveSemiDefinite",
            DefinitenessClass::NegativeDefinite => "NegativeDefinite",
            DefinitenessClass::NegativeSemiDefinite => "NegativeSemiDefinite",
            DefinitenessClass::Indefinite => "Indefinite",
            DefinitenessClass::Zero => "Zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Hermitian,
    SkewHermitian,
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// The input is symmetrized first so rounding in the caller cannot leak into
/// the solver. Columns of the returned matrix are the eigenvectors.
pub(crate) fn hermitian_eigen(m: &DMatrix<Complex64>) -> (DVector<f64>, DMatrix<Complex64>) {
    let half = Complex64::new(0.5, 0.0);
    let sym = (m + m.adjoint()).map(|z| z * half);
    let eig = sym.symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

fn sign_pattern_class(values: &[f64], zero_threshold: f64) -> DefinitenessClass {
    let mut pos = 0usize;
    let mut neg = 0usize;
    let mut zero = 0usize;
    for &v in values {
        if v.abs() <= zero_threshold {
            zero += 1;
        } else if v > 0.0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    match (pos, neg, zero) {
        (0, 0, _) => DefinitenessClass::Zero,
        (p, 0, 0) if p > 0 => DefinitenessClass::PositiveDefinite,
        (p, 0, _) if p > 0 => DefinitenessClass::PositiveSemiDefinite,
        (0, n, 0) if n > 0 => DefinitenessClass::NegativeDefinite,
        (0, n, _) if n > 0 => DefinitenessClass::NegativeSemiDefinite,
        _ => DefinitenessClass::Indefinite,
    }
}

/// Classifies a Hermitian matrix by the signs of its eigenvalues, or a
/// skew-Hermitian matrix by the signs of the eigenvalues' imaginary parts.
/// Eigenvalues with `|lambda| <= zero_tol * ||m||` count as zero.
pub fn classify_definiteness(
    m: &ComplexMatrix,
    kind: MatrixKind,
    cfg: &SolverConfig,
) -> Result<DefinitenessClass, FremderError> {
    cfg.validate()?;
    let real_spectrum = match kind {
        MatrixKind::Hermitian => {
            if !m.is_hermitian_within(STRUCTURE_TOL) {
                return Err(FremderError::Structure("expected a Hermitian matrix"));
            }
            hermitian_eigen(m.as_inner()).0
        }
        MatrixKind::SkewHermitian => {
            if !m.is_skew_hermitian_within(STRUCTURE_TOL) {
                return Err(FremderError::Structure("expected a skew-Hermitian matrix"));
            }
            // (-i)m is Hermitian; its eigenvalues are the imaginary parts of
            // the eigenvalues of m.
            hermitian_eigen(m.scaled(Complex64::new(0.0, -1.0)).as_inner()).0
        }
    };
    let threshold = cfg.zero_tol * m.norm();
    Ok(sign_pattern_class(real_spectrum.as_slice(), threshold))
}

/// Orthonormal basis of the numerical null space: right singular vectors with
/// `sigma <= zero_tol * sigma_max`. Empty for a numerically nonsingular matrix.
pub fn kernel_basis(
    m: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<Vec<DVector<Complex64>>, FremderError> {
    cfg.validate()?;
    let svd = m.as_inner().clone().svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let v = v_t.adjoint();
    let sigma_max = svd.singular_values.max();
    let threshold = cfg.zero_tol * sigma_max;
    let mut basis = Vec::new();
    for (j, &sigma) in svd.singular_values.iter().enumerate() {
        if sigma <= threshold {
            basis.push(DVector::from(v.column(j)));
        }
    }
    Ok(basis)
}
