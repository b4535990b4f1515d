#![allow(dead_code)]

use fremder::core::ComplexMatrix;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_unit_vector<R: Rng>(rng: &mut R, n: usize) -> DVector<Complex64> {
    let x = DVector::from_fn(n, |_, _| random_complex(rng));
    let norm = x.norm();
    x / Complex64::new(norm, 0.0)
}

/// Dense matrix with independent complex-normal entries.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    ComplexMatrix::new(DMatrix::from_fn(n, n, |_, _| random_complex(rng))).unwrap()
}

pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(n, n, |_, _| random_complex(rng));
    g.qr().q()
}

/// Hermitian matrix with the given (planted, exactly known) real spectrum.
pub fn hermitian_with_spectrum<R: Rng>(rng: &mut R, eigenvalues: &[f64]) -> ComplexMatrix {
    let n = eigenvalues.len();
    let u = random_unitary(rng, n);
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(eigenvalues[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    ComplexMatrix::new(&u * d * u.adjoint()).unwrap()
}

/// Normal matrix with the given complex spectrum.
pub fn normal_with_spectrum<R: Rng>(rng: &mut R, eigenvalues: &[Complex64]) -> ComplexMatrix {
    let n = eigenvalues.len();
    let u = random_unitary(rng, n);
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            eigenvalues[i]
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    ComplexMatrix::new(&u * d * u.adjoint()).unwrap()
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let half = Complex64::new(0.5, 0.0);
    ComplexMatrix::new((g.as_inner() + g.as_inner().adjoint()).map(|z| z * half)).unwrap()
}

pub fn random_skew_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = random_matrix(rng, n);
    let half = Complex64::new(0.5, 0.0);
    ComplexMatrix::new((g.as_inner() - g.as_inner().adjoint()).map(|z| z * half)).unwrap()
}

pub fn random_normal<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let eigenvalues: Vec<Complex64> = (0..n).map(|_| random_complex(rng)).collect();
    normal_with_spectrum(rng, &eigenvalues)
}

/// Instance with a planted fremdervector: `A = A0 - <u, A0 u> u u'` makes the
/// unit vector `u` satisfy `<u, Au> = 0`.
pub fn planted_instance<R: Rng>(rng: &mut R, n: usize) -> (ComplexMatrix, DVector<Complex64>) {
    let a0 = random_matrix(rng, n);
    let u = random_unit_vector(rng, n);
    let shift = u.dotc(&(a0.as_inner() * &u));
    let outer = &u * u.adjoint();
    let a = ComplexMatrix::new(a0.as_inner() - outer.map(|z| z * shift)).unwrap();
    (a, u)
}
