//! Fremdervector search for arbitrary matrices, fremdervalue rectangle
//! bounds, and the fremdervalue membership decision.

mod optimize;
mod region;

pub use region::{fremdervalue_region, FremdervalueRegion};

use nalgebra::DVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::SolverConfig;
use crate::core::{
    classify_definiteness, classify_solution, fremder_residual, hermitian_parts, ComplexMatrix,
    DefinitenessClass, FremderSolution, MatrixKind, SolutionClass, SolutionKind, NORMALITY_TOL,
    STRUCTURE_TOL,
};
use crate::error::FremderError;
use crate::oracle::numerical_range_contains;
use crate::sampling::random_unit_vector;
use crate::structured::{solve_hermitian, solve_normal, solve_skew_hermitian};

/// Definiteness classes of the Hermitian and skew parts, and whether a
/// nontrivial fremdervector can exist at all: it requires at least one of the
/// two parts to be indefinite.
#[derive(Debug, Clone, Copy)]
pub struct NecessaryConditionsReport {
    pub b_class: DefinitenessClass,
    pub c_class: DefinitenessClass,
    pub admissible: bool,
}

pub fn necessary_conditions(
    a: &ComplexMatrix,
    cfg: &SolverConfig,
) -> Result<NecessaryConditionsReport, FremderError> {
    cfg.validate()?;
    let parts = hermitian_parts(a);
    let b_class = classify_definiteness(&parts.b, MatrixKind::Hermitian, cfg)?;
    let c_class = classify_definiteness(&parts.c, MatrixKind::SkewHermitian, cfg)?;
    Ok(NecessaryConditionsReport {
        b_class,
        c_class,
        admissible: b_class.is_indefinite() || c_class.is_indefinite(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Found,
    NotFound,
    ProvedNone,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Found => "Found",
            SolveStatus::NotFound => "NotFound",
            SolveStatus::ProvedNone => "ProvedNone",
        }
    }
}

/// Result of a nontrivial-fremdervector search. `ProvedNone` is only emitted
/// when a theorem applies (structured classes, failed necessary conditions, or
/// a fremdervalue screen); optimizer exhaustion reports `NotFound`, which is
/// not a nonexistence proof.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub solution: Option<FremderSolution>,
    pub restarts_used: u32,
    pub best_residual: f64,
}

impl SolveOutcome {
    fn found(solution: FremderSolution, restarts_used: u32) -> Self {
        let best_residual = solution.residual.norm();
        SolveOutcome {
            status: SolveStatus::Found,
            solution: Some(solution),
            restarts_used,
            best_residual,
        }
    }

    fn proved_none() -> Self {
        SolveOutcome {
            status: SolveStatus::ProvedNone,
            solution: None,
            restarts_used: 0,
            best_residual: f64::INFINITY,
        }
    }
}

/// Searches for a nontrivial fremdervector of `a`.
///
/// Dispatch ladder: structured classes are decided exactly by their theorems;
/// otherwise the necessary conditions may certify nonexistence; otherwise a
/// restarted local descent hunts for a point on the intersection of the two
/// quadric hypersurfaces `<x, Bx> = 0` and `<x, Cx> = 0`.
pub fn solve_general(a: &ComplexMatrix, cfg: &SolverConfig) -> Result<SolveOutcome, FremderError> {
    cfg.validate()?;

    if a.is_hermitian_within(STRUCTURE_TOL) {
        return Ok(match solve_hermitian(a, cfg)? {
            Some(sol) => SolveOutcome::found(sol, 0),
            None => SolveOutcome::proved_none(),
        });
    }
    if a.is_skew_hermitian_within(STRUCTURE_TOL) {
        return Ok(match solve_skew_hermitian(a, cfg)? {
            Some(sol) => SolveOutcome::found(sol, 0),
            None => SolveOutcome::proved_none(),
        });
    }
    if a.is_normal_within(NORMALITY_TOL) {
        // The normal solver prefers nontrivial combinations, so a trivial or
        // absent answer certifies that no nontrivial fremdervector exists.
        return Ok(match solve_normal(a, cfg)? {
            Some(sol) if sol.kind == SolutionKind::Nontrivial => SolveOutcome::found(sol, 0),
            _ => SolveOutcome::proved_none(),
        });
    }

    let report = necessary_conditions(a, cfg)?;
    if !report.admissible {
        return Ok(SolveOutcome::proved_none());
    }

    let accept = cfg.residual_tol * a.norm();
    let forms = optimize::QuadraticForms::new(a);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut best_residual = f64::INFINITY;
    let mut best_x: Option<DVector<Complex64>> = None;
    for restart in 0..cfg.restarts {
        let start = random_unit_vector(&mut rng, a.dim());
        let run = optimize::descend(&forms, start, accept * accept);
        if run.residual < best_residual {
            best_residual = run.residual;
            best_x = Some(run.x.clone());
        }
        if run.residual <= accept
            && classify_solution(a, &run.x, cfg)? == SolutionClass::Nontrivial
        {
            let residual = fremder_residual(a, &run.x)?;
            return Ok(SolveOutcome::found(
                FremderSolution {
                    vector: run.x,
                    residual,
                    kind: SolutionKind::Nontrivial,
                    coefficients: None,
                },
                restart + 1,
            ));
        }
    }
    Ok(SolveOutcome {
        status: SolveStatus::NotFound,
        solution: best_x.map(|x| {
            let residual = fremder_residual(a, &x).expect("dimensions agree");
            FremderSolution {
                vector: x,
                residual,
                kind: SolutionKind::Nontrivial,
                coefficients: None,
            }
        }),
        restarts_used: cfg.restarts,
        best_residual,
    })
}

/// Decides whether `z` is a fremdervalue of `a`: pre-screens with the
/// rectangle bounds and the numerical-range membership oracle (a grid angle
/// with a strictly negative support margin certifies `z` outside the range,
/// hence not attainable as `<x, Ax>` for unit `x`), then searches `zI - a`.
pub fn is_fremdervalue(
    a: &ComplexMatrix,
    z: Complex64,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, FremderError> {
    cfg.validate()?;
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(FremderError::NonFinite);
    }
    let region = fremdervalue_region(a, cfg)?;
    let attain_tol = cfg.zero_tol * a.norm();
    if !region.admits(z, attain_tol) {
        return Ok(SolveOutcome::proved_none());
    }
    let membership = numerical_range_contains(a, z, cfg)?;
    if membership.margin < 0.0 {
        return Ok(SolveOutcome::proved_none());
    }
    solve_general(&a.pencil(z), cfg)
}
