use num_complex::Complex64;

use crate::config::SolverConfig;
use crate::core::{hermitian_eigen, hermitian_parts, ComplexMatrix, STRUCTURE_TOL};
use crate::error::FremderError;

/// Rectangle bounds for fremdervalues: real parts within the eigenvalue range
/// of the Hermitian part, imaginary parts within the range of the skew part's
/// imaginary eigenvalue parts. Attaining a bound in one coordinate forces
/// strict interiority in the other; for (skew-)Hermitian input the rectangle
/// degenerates to an exact open interval.
#[derive(Debug, Clone, Copy)]
pub struct FremdervalueRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub corner_rule: bool,
    pub exact: bool,
}

impl FremdervalueRegion {
    /// Whether `z` survives the rectangle, corner, and exactness exclusions.
    /// `attain_tol` is the absolute tolerance for counting a coordinate as
    /// sitting on a bound.
    pub fn admits(&self, z: Complex64, attain_tol: f64) -> bool {
        let re = z.re;
        let im = z.im;
        if re < self.re_min - attain_tol
            || re > self.re_max + attain_tol
            || im < self.im_min - attain_tol
            || im > self.im_max + attain_tol
        {
            return false;
        }
        let re_attained =
            (re - self.re_min).abs() <= attain_tol || (re - self.re_max).abs() <= attain_tol;
        let im_attained =
            (im - self.im_min).abs() <= attain_tol || (im - self.im_max).abs() <= attain_tol;
        if self.exact {
            // Degenerate coordinate must sit on the (zero-width) bound and the
            // other must be strictly interior.
            let re_degenerate = (self.re_max - self.re_min) <= (self.im_max - self.im_min);
            if re_degenerate {
                return re_attained && !im_attained;
            }
            return im_attained && !re_attained;
        }
        if self.corner_rule && re_attained && im_attained {
            return false;
        }
        true
    }
}

/// Eigenvalue-range rectangle of the Hermitian and skew parts.
pub fn fremdervalue_region(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<FremdervalueRegion, FremderError> {
    cfg.validate()?;
    let parts = hermitian_parts(a);
    let (beta, _) = hermitian_eigen(parts.b.as_inner());
    let (gamma, _) = hermitian_eigen(parts.c.scaled(Complex64::new(0.0, -1.0)).as_inner());
    let n = a.dim();
    let exact =
        a.is_hermitian_within(STRUCTURE_TOL) || a.is_skew_hermitian_within(STRUCTURE_TOL);
    Ok(FremdervalueRegion {
        re_min: beta[0],
        re_max: beta[n - 1],
        im_min: gamma[0],
        im_max: gamma[n - 1],
        corner_rule: true,
        exact,
    })
}
