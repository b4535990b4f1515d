use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Unit vector drawn uniformly from the complex sphere.
pub(crate) fn random_unit_vector<R: Rng>(rng: &mut R, n: usize) -> DVector<Complex64> {
    loop {
        let x = DVector::from_fn(n, |_, _| {
            Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        let norm = x.norm();
        if norm > 1e-8 {
            return x / Complex64::new(norm, 0.0);
        }
    }
}
