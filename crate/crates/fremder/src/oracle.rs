//! Independent, slow verifiers used in tests and as screens: numerical-range
//! membership, brute-force simplex search, and random sampling.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::SolverConfig;
use crate::core::{fremder_residual, hermitian_eigen, ComplexMatrix};
use crate::error::FremderError;
use crate::sampling::random_unit_vector;
use crate::structured::SimplexWeights;

/// Verdict of the supporting half-plane test for the numerical range.
#[derive(Debug, Clone, Copy)]
pub struct MembershipVerdict {
    pub inside: bool,
    /// Minimum over the angle grid of the largest eigenvalue of the Hermitian
    /// part of `e^{-i theta}(A - zI)`. Strictly negative values certify that
    /// `z` lies outside the (convex) numerical range.
    pub margin: f64,
    pub theta_samples: u32,
}

/// Supporting half-plane membership test: `z` lies in the numerical range iff
/// `h(theta) >= 0` for every direction, where `h` is the largest eigenvalue of
/// the Hermitian part of `e^{-i theta}(A - zI)`. A uniform grid of
/// `cfg.theta_samples` angles is scanned and the minimum is reported.
pub fn numerical_range_contains(
    a: &ComplexMatrix,
    z: Complex64,
    cfg: &SolverConfig,
) -> Result<MembershipVerdict, FremderError> {
    cfg.validate()?;
    let shifted = a.pencil(z).scaled(Complex64::new(-1.0, 0.0)); // A - zI
    let n = a.dim();
    let mut margin = f64::INFINITY;
    for k in 0..cfg.theta_samples {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (cfg.theta_samples as f64);
        let phase = Complex64::new(0.0, -theta).exp();
        let rotated = shifted.scaled(phase);
        let (values, _) = hermitian_eigen(rotated.as_inner());
        margin = margin.min(values[n - 1]);
    }
    Ok(MembershipVerdict {
        inside: margin >= 0.0,
        margin,
        theta_samples: cfg.theta_samples,
    })
}

/// Exhaustive scan of the weight simplex on a lattice with spacing `1/grid`.
/// Returns the lattice point minimizing `|sum_j d_j p_j|` when that minimum is
/// within `2 * diameter / grid`, the resolution-limited feasibility slack.
pub fn brute_force_simplex(
    points: &[Complex64],
    grid: u32,
) -> Result<Option<SimplexWeights>, FremderError> {
    if points.is_empty() {
        return Err(FremderError::EmptyInput);
    }
    if points.len() > 4 {
        return Err(FremderError::Scale(format!(
            "brute-force simplex scan supports at most 4 points, got {}",
            points.len()
        )));
    }
    if grid < 10 {
        return Err(FremderError::Config("grid must be at least 10".into()));
    }
    let n = points.len();
    let g = grid as usize;
    let mut best_value = f64::INFINITY;
    let mut best_counts = vec![0usize; n];
    let mut counts = vec![0usize; n];
    scan(
        points,
        g,
        g,
        0,
        Complex64::new(0.0, 0.0),
        &mut counts,
        &mut |value, counts| {
            if value < best_value {
                best_value = value;
                best_counts.copy_from_slice(counts);
            }
        },
    );

    let mut diameter = 0.0f64;
    for j in 0..n {
        for k in (j + 1)..n {
            diameter = diameter.max((points[j] - points[k]).norm());
        }
    }
    if best_value <= 2.0 * diameter / grid as f64 {
        let weights: Vec<f64> = best_counts.iter().map(|&k| k as f64 / grid as f64).collect();
        let support: Vec<usize> = (0..n).filter(|&j| weights[j] > 0.0).collect();
        Ok(Some(SimplexWeights { weights, support }))
    } else {
        Ok(None)
    }
}

// `partial` carries the unnormalized sum of `counts[j] * p_j`; the visitor
// receives `|sum| / grid`.
fn scan(
    points: &[Complex64],
    grid: usize,
    remaining: usize,
    index: usize,
    partial: Complex64,
    counts: &mut Vec<usize>,
    visit: &mut impl FnMut(f64, &[usize]),
) {
    let n = points.len();
    if index == n - 1 {
        counts[index] = remaining;
        let sum = partial + points[index] * remaining as f64;
        visit(sum.norm() / grid as f64, counts);
        return;
    }
    for k in 0..=remaining {
        counts[index] = k;
        scan(
            points,
            grid,
            remaining - k,
            index + 1,
            partial + points[index] * k as f64,
            counts,
            visit,
        );
    }
}

/// Samples `trials` unit vectors deterministically from `cfg.seed` and returns
/// the one minimizing `|<x, Ax>|` together with that minimum.
pub fn random_search(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
    trials: u32,
) -> Result<(DVector<Complex64>, f64), FremderError> {
    cfg.validate()?;
    if trials == 0 {
        return Err(FremderError::Config("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best_x = None;
    let mut best_residual = f64::INFINITY;
    for _ in 0..trials {
        let x = random_unit_vector(&mut rng, a.dim());
        let residual = fremder_residual(a, &x)?.norm();
        if residual < best_residual {
            best_residual = residual;
            best_x = Some(x);
        }
    }
    Ok((best_x.expect("at least one trial"), best_residual))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn membership_midpoint_of_real_segment() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        let verdict = numerical_range_contains(&a, c(0.0, 0.0), &cfg()).unwrap();
        assert!(verdict.inside);
    }

    #[test]
    fn membership_outside_positive_segment() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(2.0, 0.0)]);
        let verdict = numerical_range_contains(&a, c(0.0, 0.0), &cfg()).unwrap();
        assert!(!verdict.inside);
        assert!(verdict.margin < 0.0);
    }

    #[test]
    fn membership_midpoint_of_complex_segment() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]);
        let verdict = numerical_range_contains(&a, c(0.5, 0.5), &cfg()).unwrap();
        assert!(verdict.inside);
    }

    #[test]
    fn brute_force_recovers_uniform_weights() {
        let pts = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, -1.0)];
        let w = brute_force_simplex(&pts, 30).unwrap().unwrap();
        for &d in &w.weights {
            assert!((d - 1.0 / 3.0).abs() <= 0.05);
        }
    }

    #[test]
    fn brute_force_rejects_infeasible_segment() {
        let pts = [c(1.0, 0.0), c(0.0, 2.0)];
        assert!(brute_force_simplex(&pts, 100).unwrap().is_none());
    }

    #[test]
    fn brute_force_symmetric_pair() {
        let pts = [c(-1.0, 0.0), c(1.0, 0.0)];
        let w = brute_force_simplex(&pts, 10).unwrap().unwrap();
        assert!((w.weights[0] - 0.5).abs() <= 1e-12);
        assert!((w.weights[1] - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn brute_force_scale_limit() {
        let pts = [c(1.0, 0.0); 5];
        assert!(matches!(
            brute_force_simplex(&pts, 20),
            Err(FremderError::Scale(_))
        ));
    }

    #[test]
    fn random_search_on_identity_is_stuck_at_one() {
        let a = ComplexMatrix::identity(3);
        let (_, best) = random_search(&a, &cfg(), 100).unwrap();
        assert!((best - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn random_search_on_zero_matrix() {
        let a = ComplexMatrix::diagonal(&[c(0.0, 0.0), c(0.0, 0.0)]);
        let (_, best) = random_search(&a, &cfg(), 10).unwrap();
        assert_eq!(best, 0.0);
    }

    #[test]
    fn random_search_indefinite_gets_close() {
        let a = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        let (_, best) = random_search(&a, &cfg(), 10_000).unwrap();
        assert!(best <= 0.02, "best residual {best}");
    }
}
