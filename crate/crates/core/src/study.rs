//! The Bernoulli reference study: training ratio 2, uniform hypothesis
//! prior, Jeffreys priors, and two separations.

use serde::{Deserialize, Serialize};

use crate::classifier::{HypothesisPrior, ProblemSpec, TrainingRatio};
use crate::model::CategoricalParams;

/// Largest blocklength plotted for both cases.
pub const STUDY_N_MAX: u64 = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StudyCase {
    /// θ* = 0.55, ξ* = 0.45
    Case1,
    /// θ* = 0.3, ξ* = 0.7
    Case2,
}

impl StudyCase {
    pub fn parameters(self) -> (f64, f64) {
        match self {
            StudyCase::Case1 => (0.55, 0.45),
            StudyCase::Case2 => (0.3, 0.7),
        }
    }

    pub fn spec(self) -> ProblemSpec {
        let (theta, xi) = self.parameters();
        ProblemSpec::with_jeffreys(
            CategoricalParams::bernoulli(theta).expect("interior"),
            CategoricalParams::bernoulli(xi).expect("interior"),
            HypothesisPrior::uniform(),
            TrainingRatio::integer(2).expect("positive"),
        )
        .expect("consistent dimensions")
    }

    /// Plotted blocklength range `(first, last)`; starts at the certified
    /// threshold of each case.
    pub fn range(self) -> (u64, u64) {
        match self {
            StudyCase::Case1 => (1590, STUDY_N_MAX),
            StudyCase::Case2 => (90, STUDY_N_MAX),
        }
    }
}
