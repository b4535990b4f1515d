use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::core::ComplexMatrix;

const MAX_ITERATIONS: usize = 300;
const GRADIENT_TOL: f64 = 1e-12;

/// Outcome of one local descent run.
pub(crate) struct LocalRun {
    pub x: DVector<Complex64>,
    /// `|<x, Ax>|` at the final iterate.
    pub residual: f64,
}

/// Splits the residual into its two real quadratic forms: `r = <x, Bx>` and
/// `s = <x, (-iC)x>`, so that `<x, Ax> = r + is`.
pub(crate) struct QuadraticForms {
    b: DMatrix<Complex64>,
    m: DMatrix<Complex64>,
}

impl QuadraticForms {
    pub fn new(a: &ComplexMatrix) -> Self {
        let parts = crate::core::hermitian_parts(a);
        QuadraticForms {
            b: parts.b.as_inner().clone(),
            m: parts
                .c
                .scaled(Complex64::new(0.0, -1.0))
                .as_inner()
                .clone(),
        }
    }

    fn evaluate(&self, x: &DVector<Complex64>) -> (f64, f64, DVector<Complex64>, DVector<Complex64>) {
        let bx = &self.b * x;
        let mx = &self.m * x;
        let r = x.dotc(&bx).re;
        let s = x.dotc(&mx).re;
        (r, s, bx, mx)
    }
}

fn real_dot(u: &DVector<Complex64>, v: &DVector<Complex64>) -> f64 {
    u.dotc(v).re
}

/// Damped Gauss-Newton on the two-component residual `(r, s)` over the unit
/// sphere. The minimum-norm step lives in the real span of `Bx` and `Mx`;
/// renormalizing after each step keeps the iterate on the sphere (the residual
/// classification is scale-invariant, so the retraction is harmless).
pub(crate) fn descend(
    forms: &QuadraticForms,
    start: DVector<Complex64>,
    accept_sq: f64,
) -> LocalRun {
    let mut x = start;
    let (mut r, mut s, mut bx, mut mx) = forms.evaluate(&x);
    for _ in 0..MAX_ITERATIONS {
        let f = r * r + s * s;
        if f <= accept_sq {
            break;
        }
        // Projected gradient of f on the sphere; used only for termination.
        let mut grad = &bx * Complex64::new(4.0 * r, 0.0) + &mx * Complex64::new(4.0 * s, 0.0);
        let radial = x.dotc(&grad);
        grad -= &x * radial;
        if grad.norm() <= GRADIENT_TOL {
            break;
        }

        // Solve the 2x2 Gram system for the step delta = alpha*Bx + beta*Mx
        // with 2 G [alpha, beta]^T = -[r, s]^T. When the Gram matrix is
        // (near-)singular -- one form degenerate, or Bx and Mx parallel --
        // fall back to a 1-d step along the combined gradient direction.
        let g11 = real_dot(&bx, &bx);
        let g12 = real_dot(&bx, &mx);
        let g22 = real_dot(&mx, &mx);
        let det = g11 * g22 - g12 * g12;
        let (alpha, beta) = if det > 1e-24 * (g11 + g22).powi(2) {
            (
                (-r * g22 + s * g12) / (2.0 * det),
                (r * g12 - s * g11) / (2.0 * det),
            )
        } else {
            let jb = r * g11 + s * g12;
            let jm = r * g12 + s * g22;
            let denom = jb * jb + jm * jm;
            if denom <= 1e-300 {
                break;
            }
            let t = -(r * jb + s * jm) / (2.0 * denom);
            (t * r, t * s)
        };
        let delta = &bx * Complex64::new(alpha, 0.0) + &mx * Complex64::new(beta, 0.0);

        // Backtracking on the squared residual norm.
        let mut step = 1.0f64;
        let mut improved = false;
        for _ in 0..40 {
            let mut candidate = &x + &delta * Complex64::new(step, 0.0);
            let norm = candidate.norm();
            if norm > 0.0 {
                candidate /= Complex64::new(norm, 0.0);
                let (rc, sc, bxc, mxc) = forms.evaluate(&candidate);
                if rc * rc + sc * sc < f {
                    x = candidate;
                    r = rc;
                    s = sc;
                    bx = bxc;
                    mx = mxc;
                    improved = true;
                    break;
                }
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    let residual = (r * r + s * s).sqrt();
    LocalRun { x, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::random_unit_vector;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn converges_on_indefinite_hermitian() {
        let a = ComplexMatrix::diagonal(&[
            Complex64::new(2.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(5.0, 0.0),
        ]);
        let forms = QuadraticForms::new(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let start = random_unit_vector(&mut rng, 3);
        let run = descend(&forms, start, (1e-10 * a.norm()).powi(2));
        assert!(run.residual <= 1e-10 * a.norm());
        assert!((run.x.norm() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn stalls_on_definite_matrix() {
        let a = ComplexMatrix::identity(3);
        let forms = QuadraticForms::new(&a);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let start = random_unit_vector(&mut rng, 3);
        let run = descend(&forms, start, (1e-10 * a.norm()).powi(2));
        // <x, x> = 1 for any unit vector; nothing to minimize.
        assert!((run.residual - 1.0).abs() <= 1e-10);
    }
}
