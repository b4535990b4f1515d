use crate::error::FremderError;

/// Tolerances and search budgets shared by all solvers.
///
/// `zero_tol` and `residual_tol` are relative thresholds: an eigenvalue is
/// treated as zero when `|lambda| <= zero_tol * ||A||`, and a candidate is
/// accepted when `|<x, Ax>| <= residual_tol * ||A||` for unit `x`. Norms are
/// Frobenius throughout.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub zero_tol: f64,
    pub residual_tol: f64,
    pub restarts: u32,
    pub seed: u64,
    pub theta_samples: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            zero_tol: 1e-10,
            residual_tol: 1e-10,
            restarts: 32,
            seed: 0,
            theta_samples: 720,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), FremderError> {
        let positive = |t: f64| t.is_finite() && t > 0.0;
        if !positive(self.zero_tol) || !positive(self.residual_tol) {
            return Err(FremderError::Config(
                "tolerances must be strictly positive".into(),
            ));
        }
        if self.restarts < 1 {
            return Err(FremderError::Config("restarts must be at least 1".into()));
        }
        if self.theta_samples < 1 {
            return Err(FremderError::Config(
                "theta_samples must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        SolverConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_zero_tolerance() {
        let cfg = SolverConfig {
            residual_tol: 0.0,
            ..SolverConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
