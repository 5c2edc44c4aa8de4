use std::f64::consts::LN_2;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use bcb_core::study::StudyCase;
use bcb_core::{
    bound_constants, chernoff_information, conditional_error_log, curve_with,
    simulate_conditional_error, simulate_generative, BoundParams, BoundPoint, CategoricalParams,
    ChernoffAnalysis, Counts, DirichletPrior, HypothesisPrior, ProblemSpec, RngSeed, SimReport,
    TestSource, TrainingData, TrainingRatio,
};
use serde::Serialize;

use crate::args::*;
use crate::format::{num, write_bounds_csv};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bcb_core::Error),
    #[error("{0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(bcb_core::Error::BudgetExceeded { .. }) => 4,
            CliError::Core(_) => 3,
            CliError::Parse(_) => 2,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Chernoff(a) => chernoff(a),
        Command::Bounds(a) => bounds(a),
        Command::Exact(a) => exact(a),
        Command::Simulate(a) => simulate(a),
        Command::Reproduce(a) => reproduce(a),
    }
}

fn parse_floats(flag: &str, s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Parse(format!("--{flag}: {x:?}: {e}")))
        })
        .collect()
}

fn parse_params(flag: &str, s: &str) -> Result<CategoricalParams> {
    let v = parse_floats(flag, s)?;
    Ok(match v.as_slice() {
        [theta] => CategoricalParams::bernoulli(*theta)?,
        _ => CategoricalParams::new(v)?,
    })
}

fn parse_counts(flag: &str, s: &str) -> Result<Counts> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|e| CliError::Parse(format!("--{flag}: {x:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Counts::new)
}

fn parse_spec(a: &SpecArgs) -> Result<ProblemSpec> {
    let theta = parse_params("theta-star", &a.theta_star)?;
    let xi = parse_params("xi-star", &a.xi_star)?;
    let k = theta.k();
    let prior = |flag: &str, s: &Option<String>| -> Result<DirichletPrior> {
        match s {
            Some(s) => Ok(DirichletPrior::new(parse_floats(flag, s)?)?),
            None => Ok(DirichletPrior::jeffreys(k)),
        }
    };
    let mu = prior("mu-alphas", &a.mu_alphas)?;
    let nu = prior("nu-alphas", &a.nu_alphas)?;
    let pi = HypothesisPrior::from_pi1(a.pi1)?;
    let alpha: TrainingRatio = a.alpha.parse()?;
    Ok(ProblemSpec::new(theta, xi, mu, nu, pi, alpha)?)
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Result<()> {
    let mut w = open_out(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// Key/value pairs as a two-column CSV.
fn write_kv_csv(out: &Option<PathBuf>, rows: &[(&str, String)]) -> Result<()> {
    let mut w = open_out(out)?;
    writeln!(w, "key,value")?;
    for (k, v) in rows {
        writeln!(w, "{k},{v}")?;
    }
    w.flush()?;
    Ok(())
}

fn unit_scale(bits: bool) -> f64 {
    if bits {
        1.0 / LN_2
    } else {
        1.0
    }
}

fn unit_name(bits: bool) -> &'static str {
    if bits {
        "bits"
    } else {
        "nats"
    }
}

/// Chernoff output; the constant fields are absent for identical hypotheses.
#[derive(Debug, Serialize)]
struct ChernoffReport {
    units: &'static str,
    lambda_star: f64,
    c_info: f64,
    tilted: Option<Vec<f64>>,
    sigma_bar: Option<f64>,
    big_c: Option<f64>,
    big_c_canonical: Option<bool>,
    big_c_prime: Option<f64>,
    little_c: Option<f64>,
    n_min: Option<u64>,
}

fn chernoff(a: ChernoffArgs) -> Result<()> {
    let p = parse_params("theta-star", &a.theta_star)?;
    let q = parse_params("xi-star", &a.xi_star)?;
    let scale = unit_scale(a.output.bits);
    let report = if p == q {
        let pt = chernoff_information(&p, &q)?;
        ChernoffReport {
            units: unit_name(a.output.bits),
            lambda_star: pt.lambda_star,
            c_info: pt.c_info * scale,
            tilted: None,
            sigma_bar: None,
            big_c: None,
            big_c_canonical: None,
            big_c_prime: None,
            little_c: None,
            n_min: None,
        }
    } else {
        let an = bound_constants(&p, &q)?;
        ChernoffReport {
            units: unit_name(a.output.bits),
            lambda_star: an.lambda_star,
            c_info: an.c_info * scale,
            tilted: Some(an.tilted.probs().to_vec()),
            sigma_bar: Some(an.sigma_bar),
            big_c: Some(an.big_c),
            big_c_canonical: Some(an.big_c_canonical),
            big_c_prime: Some(an.big_c_prime),
            little_c: Some(an.little_c),
            n_min: Some(an.n_min),
        }
    };
    match a.output.format.unwrap_or(Format::Json) {
        Format::Json => write_json(&a.output.out, &report),
        Format::Csv => {
            let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
            write_kv_csv(
                &a.output.out,
                &[
                    ("lambda_star", num(report.lambda_star)),
                    ("c_info", num(report.c_info)),
                    ("sigma_bar", opt(report.sigma_bar)),
                    ("big_c", opt(report.big_c)),
                    ("big_c_prime", opt(report.big_c_prime)),
                    ("little_c", opt(report.little_c)),
                    (
                        "n_min",
                        report.n_min.map(|n| n.to_string()).unwrap_or_default(),
                    ),
                ],
            )
        }
    }
}

#[derive(Debug, Serialize)]
struct CurveReport<'a> {
    units: &'static str,
    asymptotic: &'static str,
    params: BoundParams,
    lambda_star: f64,
    c_info: f64,
    little_c: f64,
    n_min: u64,
    points: &'a [BoundPoint],
}

fn scaled(points: Vec<BoundPoint>, scale: f64) -> Vec<BoundPoint> {
    points
        .into_iter()
        .map(|p| BoundPoint {
            lower: p.lower * scale,
            upper: p.upper * scale,
            gap: p.gap * scale,
            ..p
        })
        .collect()
}

fn emit_curve(
    output: &OutputArgs,
    an: &ChernoffAnalysis,
    params: BoundParams,
    points: Vec<BoundPoint>,
) -> Result<()> {
    match output.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut w = open_out(&output.out)?;
            write_bounds_csv(&mut w, &points, output.bits)?;
            w.flush()?;
            Ok(())
        }
        Format::Json => {
            let scale = unit_scale(output.bits);
            let points = scaled(points, scale);
            write_json(
                &output.out,
                &CurveReport {
                    units: unit_name(output.bits),
                    asymptotic: "o(1) terms dropped",
                    params,
                    lambda_star: an.lambda_star,
                    c_info: an.c_info * scale,
                    little_c: an.little_c,
                    n_min: an.n_min,
                    points: &points,
                },
            )
        }
    }
}

fn bounds(a: BoundsArgs) -> Result<()> {
    let spec = parse_spec(&a.spec)?;
    let an = bound_constants(&spec.theta_star, &spec.xi_star)?;
    let base = BoundParams::from_spec(&spec);
    let params = base.with_dims(a.d1.unwrap_or(base.d1), a.d2.unwrap_or(base.d2));
    let range = match (a.n, a.n_range) {
        (Some(n), _) => NRange {
            from: n,
            to: n,
            step: 1,
        },
        (None, Some(r)) => r,
        (None, None) => unreachable!("clap requires one of --n / --n-range"),
    };
    let points = curve_with(&an, &params, range.from, range.to, range.step)?;
    emit_curve(&a.output, &an, params, points)
}

#[derive(Debug, Serialize)]
struct ExactReport {
    n: u64,
    training_len: u64,
    y1: Counts,
    y2: Counts,
    seed: Option<u64>,
    error: f64,
    neg_log_error: f64,
    units: &'static str,
}

fn exact(a: ExactArgs) -> Result<()> {
    let spec = parse_spec(&a.spec)?;
    let big_n = spec.alpha.training_len(a.n)?;
    let (data, seed) = match (&a.y1, &a.y2) {
        (Some(y1), Some(y2)) => {
            let data = TrainingData::new(parse_counts("y1", y1)?, parse_counts("y2", y2)?)?;
            if data.len() != big_n {
                return Err(bcb_core::Error::Invalid(format!(
                    "training sequences have length {}, expected alpha * n = {big_n}",
                    data.len()
                ))
                .into());
            }
            (data, None)
        }
        _ => (
            TrainingData::sample(&spec, a.n, &mut RngSeed(a.seed).rng())?,
            Some(a.seed),
        ),
    };
    let log_err = conditional_error_log(&spec, &data, a.n)?;
    let report = ExactReport {
        n: a.n,
        training_len: big_n,
        y1: data.y1.clone(),
        y2: data.y2.clone(),
        seed,
        error: log_err.exp(),
        neg_log_error: -log_err * unit_scale(a.output.bits),
        units: unit_name(a.output.bits),
    };
    match a.output.format.unwrap_or(Format::Json) {
        Format::Json => write_json(&a.output.out, &report),
        Format::Csv => write_kv_csv(
            &a.output.out,
            &[
                ("n", report.n.to_string()),
                ("training_len", report.training_len.to_string()),
                ("error", num(report.error)),
                (
                    if a.output.bits {
                        "neg_log_error_bits"
                    } else {
                        "neg_log_error_nats"
                    },
                    num(report.neg_log_error),
                ),
            ],
        ),
    }
}

fn simulate(a: SimulateArgs) -> Result<()> {
    let spec = parse_spec(&a.spec)?;
    let seed = RngSeed(a.seed);
    let mut report: SimReport = match a.method {
        Method::Conditional => simulate_conditional_error(&spec, a.n, a.trials, seed)?,
        Method::Generative => {
            let source = match a.source {
                Source::Predictive => TestSource::Predictive,
                Source::True => TestSource::TrueParameter,
            };
            simulate_generative(&spec, a.n, a.trials, seed, source)?
        }
    };
    if let Some(w) = &report.warning {
        eprintln!("warning: {w}");
    }
    report.mean_neg_log_error = report
        .mean_neg_log_error
        .map(|x| x * unit_scale(a.output.bits));
    match a.output.format.unwrap_or(Format::Json) {
        Format::Json => write_json(&a.output.out, &report),
        Format::Csv => write_kv_csv(
            &a.output.out,
            &[
                ("n", report.n.to_string()),
                ("trials", report.trials.to_string()),
                ("mean_error", num(report.mean_error)),
                ("ci_half_width", num(report.ci_half_width)),
                (
                    if a.output.bits {
                        "mean_neg_log_error_bits"
                    } else {
                        "mean_neg_log_error_nats"
                    },
                    report.mean_neg_log_error.map(num).unwrap_or_default(),
                ),
            ],
        ),
    }
}

#[derive(Debug, Serialize)]
struct ReproduceSummary {
    case: StudyCase,
    theta_star: f64,
    xi_star: f64,
    n_from: u64,
    n_to: u64,
    step: u64,
    rows: usize,
    lambda_star: f64,
    c_info_nats: f64,
    sigma_bar: f64,
    big_c: f64,
    big_c_prime: f64,
    little_c: f64,
    n_min: u64,
}

fn summary_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}.summary.json"))
}

fn reproduce(a: ReproduceArgs) -> Result<()> {
    let case = match a.case {
        CaseArg::Case1 => StudyCase::Case1,
        CaseArg::Case2 => StudyCase::Case2,
    };
    let spec = case.spec();
    let an = bound_constants(&spec.theta_star, &spec.xi_star)?;
    let params = BoundParams::from_spec(&spec);
    let (from, to) = case.range();
    let points = curve_with(&an, &params, from, to, a.step)?;
    let (theta_star, xi_star) = case.parameters();
    let summary = ReproduceSummary {
        case,
        theta_star,
        xi_star,
        n_from: from,
        n_to: to,
        step: a.step,
        rows: points.len(),
        lambda_star: an.lambda_star,
        c_info_nats: an.c_info,
        sigma_bar: an.sigma_bar,
        big_c: an.big_c,
        big_c_prime: an.big_c_prime,
        little_c: an.little_c,
        n_min: an.n_min,
    };
    emit_curve(&a.output, &an, params, points)?;
    let target = a
        .summary
        .clone()
        .or_else(|| a.output.out.as_deref().map(summary_path));
    match target {
        Some(path) => write_json(&Some(path), &summary),
        None => {
            eprintln!("{}", serde_json::to_string_pretty(&summary)?);
            Ok(())
        }
    }
}
