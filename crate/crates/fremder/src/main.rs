use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use fremder::core::{classify_solution, ComplexMatrix, SolutionClass, NORMALITY_TOL};
use fremder::general::{
    fremdervalue_region, is_fremdervalue, necessary_conditions, solve_general, SolveStatus,
};
use fremder::io::{matrix_digest, read_matrix_file};
use fremder::report::{vector_entries, PairReport, RegionReport, Report, SolutionReport};
use fremder::structured::solve_semidefinite_skew;
use fremder::{FremderError, SolverConfig};

const EXIT_OK: u8 = 0;
const EXIT_NOT_FOUND: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_HYPOTHESIS_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fremder",
    about = "Find and verify vectors orthogonal to their image under a complex matrix"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Matrix file: Matrix Market or minimal text format
    path: PathBuf,
    /// Relative residual acceptance threshold
    #[arg(long = "tol", default_value_t = 1e-10)]
    tol: f64,
    /// Relative eigenvalue-zero threshold
    #[arg(long = "zero-tol", default_value_t = 1e-10)]
    zero_tol: f64,
    /// Random restart budget for the general solver
    #[arg(long, default_value_t = 32)]
    restarts: u32,
    /// RNG seed; falls back to the FREMDER_SEED environment variable, then 0
    #[arg(long)]
    seed: Option<u64>,
    /// Angle grid resolution for numerical-range membership
    #[arg(long = "theta-samples", default_value_t = 720)]
    theta_samples: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Report definiteness classes of the Hermitian and skew parts, normality,
    /// and whether a nontrivial fremdervector can exist
    Classify(CommonOpts),
    /// Search for a fremdervector of the matrix itself
    Fremdervector(CommonOpts),
    /// Fremdervalue bounds (--region) or a membership decision (--z)
    Fremdervalue {
        #[command(flatten)]
        opts: CommonOpts,
        /// Candidate shift as `re,im`
        #[arg(long, conflicts_with = "region")]
        z: Option<String>,
        /// Emit the rectangle bounds instead of deciding a single shift
        #[arg(long)]
        region: bool,
    },
    /// Fremdervalue/fremdervector pairs from the kernel of a semi-definite
    /// skew part
    Geneig(CommonOpts),
}

fn solver_config(opts: &CommonOpts) -> SolverConfig {
    let seed = opts.seed.unwrap_or_else(|| {
        std::env::var("FREMDER_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    });
    SolverConfig {
        zero_tol: opts.zero_tol,
        residual_tol: opts.tol,
        restarts: opts.restarts,
        seed,
        theta_samples: opts.theta_samples,
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
}

fn load(opts: &CommonOpts) -> Result<(ComplexMatrix, SolverConfig), FremderError> {
    let matrix = read_matrix_file(&opts.path)?;
    let cfg = solver_config(opts);
    cfg.validate()?;
    Ok((matrix, cfg))
}

fn base_diagnostics(report: &mut Report, cfg: &SolverConfig) {
    let d = &mut report.diagnostics;
    d.insert("residual_tol".into(), format!("{:e}", cfg.residual_tol));
    d.insert("zero_tol".into(), format!("{:e}", cfg.zero_tol));
    d.insert("seed".into(), cfg.seed.to_string());
}

fn solution_report(
    a: &ComplexMatrix,
    solution: &fremder::core::FremderSolution,
) -> SolutionReport {
    let _ = a;
    SolutionReport {
        vector: vector_entries(&solution.vector),
        residual: [solution.residual.re, solution.residual.im],
        kind: solution.kind.as_str().to_string(),
    }
}

fn cmd_classify(opts: &CommonOpts) -> Result<(Report, u8), FremderError> {
    let (matrix, cfg) = load(opts)?;
    let report_data = necessary_conditions(&matrix, &cfg)?;
    let mut report = Report::new("classify", matrix_digest(&matrix), "ok");
    base_diagnostics(&mut report, &cfg);
    let d = &mut report.diagnostics;
    d.insert("b_class".into(), report_data.b_class.as_str().into());
    d.insert("c_class".into(), report_data.c_class.as_str().into());
    d.insert("admissible".into(), report_data.admissible.to_string());
    d.insert(
        "normal".into(),
        matrix.is_normal_within(NORMALITY_TOL).to_string(),
    );
    Ok((report, EXIT_OK))
}

fn cmd_fremdervector(opts: &CommonOpts) -> Result<(Report, u8), FremderError> {
    let (matrix, cfg) = load(opts)?;
    let outcome = solve_general(&matrix, &cfg)?;
    let mut report = Report::new(
        "fremdervector",
        matrix_digest(&matrix),
        outcome.status.as_str(),
    );
    base_diagnostics(&mut report, &cfg);
    report
        .diagnostics
        .insert("restarts_used".into(), outcome.restarts_used.to_string());
    report.diagnostics.insert(
        "best_residual".into(),
        format!("{:.16e}", outcome.best_residual),
    );
    let code = match outcome.status {
        SolveStatus::Found => {
            let sol = outcome.solution.as_ref().expect("Found carries a solution");
            report.solution = Some(solution_report(&matrix, sol));
            EXIT_OK
        }
        SolveStatus::ProvedNone => EXIT_OK,
        SolveStatus::NotFound => EXIT_NOT_FOUND,
    };
    Ok((report, code))
}

fn parse_complex_flag(text: &str) -> Result<Complex64, FremderError> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad = || FremderError::Parse {
        line: 0,
        msg: format!("--z expects `re,im`, got `{text}`"),
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.trim().parse().map_err(|_| bad())?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(|_| bad())?,
            im.trim().parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn cmd_fremdervalue(
    opts: &CommonOpts,
    z: Option<&str>,
    region: bool,
) -> Result<(Report, u8), FremderError> {
    let (matrix, cfg) = load(opts)?;
    if region {
        let r = fremdervalue_region(&matrix, &cfg)?;
        let mut report = Report::new("fremdervalue", matrix_digest(&matrix), "ok");
        base_diagnostics(&mut report, &cfg);
        report.region = Some(RegionReport {
            re_min: r.re_min,
            re_max: r.re_max,
            im_min: r.im_min,
            im_max: r.im_max,
            exact: r.exact,
        });
        return Ok((report, EXIT_OK));
    }
    let z = z.ok_or_else(|| FremderError::Config("one of --z or --region is required".into()))?;
    let shift = parse_complex_flag(z)?;
    let outcome = is_fremdervalue(&matrix, shift, &cfg)?;
    let mut report = Report::new(
        "fremdervalue",
        matrix_digest(&matrix),
        outcome.status.as_str(),
    );
    base_diagnostics(&mut report, &cfg);
    report
        .diagnostics
        .insert("z".into(), format!("{:.16e} {:.16e}", shift.re, shift.im));
    let code = match outcome.status {
        SolveStatus::Found => {
            let sol = outcome.solution.as_ref().expect("Found carries a solution");
            report.solution = Some(solution_report(&matrix, sol));
            EXIT_OK
        }
        SolveStatus::ProvedNone => EXIT_OK,
        SolveStatus::NotFound => EXIT_NOT_FOUND,
    };
    Ok((report, code))
}

fn cmd_geneig(opts: &CommonOpts) -> Result<(Report, u8), FremderError> {
    let (matrix, cfg) = load(opts)?;
    let result = solve_semidefinite_skew(&matrix, &cfg)?;
    let mut report = Report::new("geneig", matrix_digest(&matrix), "ok");
    base_diagnostics(&mut report, &cfg);
    report
        .diagnostics
        .insert("projector_rank".into(), result.projector_rank.to_string());
    let mut pairs = Vec::with_capacity(result.pairs.len());
    for (z, x) in &result.pairs {
        let pencil = matrix.pencil(Complex64::new(*z, 0.0));
        let residual = fremder::core::fremder_residual(&pencil, x)?;
        let kind = match classify_solution(&pencil, x, &cfg)? {
            SolutionClass::NotFremder => "NotFremder".to_string(),
            other => other
                .kind()
                .expect("non-rejected class has a kind")
                .as_str()
                .to_string(),
        };
        pairs.push(PairReport {
            z: *z,
            vector: vector_entries(x),
            residual: [residual.re, residual.im],
            kind,
        });
    }
    report.pairs = Some(pairs);
    Ok((report, EXIT_OK))
}

fn run(cli: &Cli) -> Result<(Report, u8, Format), FremderError> {
    match &cli.command {
        Command::Classify(opts) => cmd_classify(opts).map(|(r, c)| (r, c, opts.format)),
        Command::Fremdervector(opts) => cmd_fremdervector(opts).map(|(r, c)| (r, c, opts.format)),
        Command::Fremdervalue { opts, z, region } => {
            cmd_fremdervalue(opts, z.as_deref(), *region).map(|(r, c)| (r, c, opts.format))
        }
        Command::Geneig(opts) => cmd_geneig(opts).map(|(r, c)| (r, c, opts.format)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code, format)) => {
            emit(&report, format);
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                FremderError::Hypothesis(_) => EXIT_HYPOTHESIS_ERROR,
                _ => EXIT_INPUT_ERROR,
            };
            ExitCode::from(code)
        }
    }
}
