//! Lower and upper bounds on the error exponent `-ln P_{Λ*}(e | D)` with the
//! vanishing `o(1)` remainders dropped. The numbers are asymptotic
//! approximations, not finite-n guarantees.

use serde::{Deserialize, Serialize};

use crate::chernoff::{bound_constants, ChernoffAnalysis};
use crate::classifier::{HypothesisPrior, ProblemSpec, TrainingRatio};
use crate::error::{Error, Result};

/// Model dimensions, training ratio and hypothesis prior entering the bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    pub d1: u32,
    pub d2: u32,
    pub alpha: TrainingRatio,
    pub pi: HypothesisPrior,
}

impl BoundParams {
    /// Dimensions `K - 1` from the categorical model.
    pub fn from_spec(spec: &ProblemSpec) -> Self {
        Self {
            d1: spec.theta_star.dim() as u32,
            d2: spec.xi_star.dim() as u32,
            alpha: spec.alpha,
            pi: spec.pi,
        }
    }

    pub fn with_dims(self, d1: u32, d2: u32) -> Self {
        Self { d1, d2, ..self }
    }

    fn ln_training_factor(&self) -> f64 {
        (1.0 / self.alpha.as_f64()).ln_1p()
    }
}

/// One row of a bound curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundPoint {
    pub n: u64,
    pub lower: f64,
    pub upper: f64,
    /// `upper - lower`, computed without the shared `n C` term.
    pub gap: f64,
    /// `n >= n_min`, where the upper bound is certified.
    pub valid: bool,
}

/// Terms of the lower bound other than `n C`.
fn lower_offset(params: &BoundParams) -> f64 {
    0.5 * params.d1.min(params.d2) as f64 * params.ln_training_factor() - params.pi.max().ln()
}

/// Terms of the upper bound other than `n C`.
fn upper_offset(n: u64, little_c: f64, params: &BoundParams) -> f64 {
    0.5 * (4.0 * n as f64 / (little_c * little_c)).ln()
        + 0.5 * params.d1.max(params.d2) as f64 * params.ln_training_factor()
        - params.pi.min().ln()
}

/// `n C + (min{d1,d2}/2) ln(1 + 1/α) - ln max{π1, π2}`.
pub fn lower_bound(n: u64, c_info: f64, params: &BoundParams) -> f64 {
    n as f64 * c_info + lower_offset(params)
}

/// `n C + (1/2) ln(4n / c^2) + (max{d1,d2}/2) ln(1 + 1/α) - ln min{π1, π2}`.
pub fn upper_bound(n: u64, c_info: f64, little_c: f64, params: &BoundParams) -> f64 {
    n as f64 * c_info + upper_offset(n, little_c, params)
}

/// Closed form of `upper - lower`.
pub fn gap_closed_form(n: u64, little_c: f64, params: &BoundParams) -> f64 {
    let dd = params.d1.max(params.d2) - params.d1.min(params.d2);
    0.5 * (4.0 * n as f64 / (little_c * little_c)).ln()
        + 0.5 * dd as f64 * params.ln_training_factor()
        + (params.pi.max() / params.pi.min()).ln()
}

pub fn bound_point(n: u64, analysis: &ChernoffAnalysis, params: &BoundParams) -> BoundPoint {
    let lower = lower_bound(n, analysis.c_info, params);
    let upper = upper_bound(n, analysis.c_info, analysis.little_c, params);
    // The shared n C cancels; subtracting the offsets avoids losing the
    // gap to rounding in the two large bounds.
    let gap = upper_offset(n, analysis.little_c, params) - lower_offset(params);
    BoundPoint {
        n,
        lower,
        upper,
        gap,
        valid: n >= analysis.n_min,
    }
}

/// Bound points for `n = from, from + step, ..., <= to`.
pub fn curve_with(
    analysis: &ChernoffAnalysis,
    params: &BoundParams,
    from: u64,
    to: u64,
    step: u64,
) -> Result<Vec<BoundPoint>> {
    if from == 0 || from > to || step == 0 {
        return Err(Error::EmptyRange { from, to, step });
    }
    Ok((from..=to)
        .step_by(step as usize)
        .map(|n| bound_point(n, analysis, params))
        .collect())
}

/// Bound curve for a problem spec with the model's own dimensions.
pub fn curve(spec: &ProblemSpec, from: u64, to: u64, step: u64) -> Result<Vec<BoundPoint>> {
    let analysis = bound_constants(&spec.theta_star, &spec.xi_star)?;
    curve_with(&analysis, &BoundParams::from_spec(spec), from, to, step)
}
