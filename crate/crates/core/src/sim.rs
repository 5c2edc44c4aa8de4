//! Monte-Carlo estimates of the optimal rule's error, averaged over training
//! data draws.
//!
//! Trial `i` draws everything from substream `i` of the master seed, and the
//! per-trial values are reduced in index order, so reports do not depend on
//! the thread schedule.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{
    conditional_error_log, decide, Hypothesis, ProblemSpec, TrainingData, TYPE_CLASS_BUDGET,
};
use crate::error::{Error, Result};
use crate::mixture::sample_predictive;
use crate::model::{sample_counts_with, RngSeed};
use crate::numerics::{type_class_count, KahanSum};

/// Fewest trials for which a normal-approximation CI is reported.
pub const MIN_TRIALS: u64 = 100;
const Z_95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Estimator {
    /// Exact conditional error per training draw.
    Conditional,
    /// Decision mismatches on simulated test sequences.
    Generative,
}

/// Where the generative estimator draws test sequences from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestSource {
    /// Posterior predictive `P(x | y_i, H_i)`; matches the conditional error.
    #[default]
    Predictive,
    /// The true parameter of the chosen hypothesis (frequentist error).
    TrueParameter,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub n: u64,
    pub trials: u64,
    pub estimator: Estimator,
    pub mean_error: f64,
    /// Mean of `-ln P(e | D)` over draws for the conditional estimator;
    /// `-ln mean_error` for the generative one (absent when no errors occurred).
    pub mean_neg_log_error: Option<f64>,
    /// Half-width of the 95% normal CI on `mean_error`.
    pub ci_half_width: f64,
    pub seed: RngSeed,
    /// Set when the exact estimator was over budget and the generative one ran instead.
    pub warning: Option<String>,
}

impl SimReport {
    /// `|a - b| <= factor * sqrt(ci_a^2 + ci_b^2)`.
    pub fn agrees_with(&self, other: &SimReport, factor: f64) -> bool {
        let combined = self.ci_half_width.hypot(other.ci_half_width);
        (self.mean_error - other.mean_error).abs() <= factor * combined
    }
}

fn check_run(spec: &ProblemSpec, n: u64, trials: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Invalid("test length n must be >= 1".into()));
    }
    if trials < MIN_TRIALS {
        return Err(Error::Invalid(format!(
            "at least {MIN_TRIALS} trials are needed for a confidence interval, got {trials}"
        )));
    }
    spec.alpha.training_len(n)?;
    Ok(())
}

/// Mean and CI half-width of per-trial values, summed in index order.
fn summarize(values: &[f64]) -> (f64, f64) {
    let m = values.len() as f64;
    let mean = values.iter().copied().collect::<KahanSum>().value() / m;
    let ss = values
        .iter()
        .map(|v| (v - mean) * (v - mean))
        .collect::<KahanSum>()
        .value();
    let var = if values.len() > 1 {
        ss / (m - 1.0)
    } else {
        0.0
    };
    (mean, Z_95 * (var / m).sqrt())
}

pub fn simulate_conditional_error(
    spec: &ProblemSpec,
    n: u64,
    trials: u64,
    seed: RngSeed,
) -> Result<SimReport> {
    check_run(spec, n, trials)?;
    let classes = type_class_count(n, spec.k());
    if classes > TYPE_CLASS_BUDGET {
        let mut report = simulate_generative(spec, n, trials, seed, TestSource::Predictive)?;
        report.warning = Some(format!(
            "{classes:.3e} type classes exceed the exact budget; generative estimate reported"
        ));
        return Ok(report);
    }
    let log_errors: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = seed.substream(i);
            let data = TrainingData::sample(spec, n, &mut rng)?;
            conditional_error_log(spec, &data, n)
        })
        .collect::<Result<_>>()?;
    let errors: Vec<f64> = log_errors.iter().map(|l| l.exp()).collect();
    let (mean_error, ci_half_width) = summarize(&errors);
    let neg_log = log_errors.iter().map(|l| -l).collect::<KahanSum>().value() / trials as f64;
    Ok(SimReport {
        n,
        trials,
        estimator: Estimator::Conditional,
        mean_error,
        mean_neg_log_error: Some(neg_log),
        ci_half_width,
        seed,
        warning: None,
    })
}

pub fn simulate_generative(
    spec: &ProblemSpec,
    n: u64,
    trials: u64,
    seed: RngSeed,
    source: TestSource,
) -> Result<SimReport> {
    check_run(spec, n, trials)?;
    let mistakes: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = seed.substream(i);
            let data = TrainingData::sample(spec, n, &mut rng)?;
            let truth = if rng.random::<f64>() < spec.pi.pi1 {
                Hypothesis::H1
            } else {
                Hypothesis::H2
            };
            let (prior, training, param) = match truth {
                Hypothesis::H1 => (&spec.mu, &data.y1, &spec.theta_star),
                Hypothesis::H2 => (&spec.nu, &data.y2, &spec.xi_star),
            };
            let x = match source {
                TestSource::Predictive => sample_predictive(prior, training, n, &mut rng)?,
                TestSource::TrueParameter => sample_counts_with(param, n, &mut rng),
            };
            let decision = decide(spec, &data, &x)?;
            Ok(if decision.hypothesis == truth {
                0.0
            } else {
                1.0
            })
        })
        .collect::<Result<_>>()?;
    let (mean_error, ci_half_width) = summarize(&mistakes);
    Ok(SimReport {
        n,
        trials,
        estimator: Estimator::Generative,
        mean_error,
        mean_neg_log_error: (mean_error > 0.0).then(|| -mean_error.ln()),
        ci_half_width,
        seed,
        warning: None,
    })
}
