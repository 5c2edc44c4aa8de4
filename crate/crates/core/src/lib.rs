//! Bayesian classification of a test sequence against two training
//! sequences.
//!
//! * [`model`]: categorical families, counts, sampling, MLE, Fisher information.
//! * [`mixture`]: Dirichlet mixtures (Bayes codes) and posterior predictives.
//! * [`classifier`]: the optimal decision rule and its exact error probability.
//! * [`chernoff`]: Chernoff information and the constants behind the bounds.
//! * [`bounds`]: error-exponent lower/upper bounds and their curves.
//! * [`sim`]: Monte-Carlo estimates averaged over training data.
//! * [`study`]: the two Bernoulli reference configurations.

pub mod bounds;
pub mod chernoff;
pub mod classifier;
pub mod error;
pub mod mixture;
pub mod model;
pub mod numerics;
pub mod sim;
pub mod study;

pub use bounds::{
    bound_point, curve, curve_with, gap_closed_form, lower_bound, upper_bound, BoundParams,
    BoundPoint,
};
pub use chernoff::{
    bound_constants, chernoff_information, tilted_distribution, ChernoffAnalysis, ChernoffPoint,
};
pub use classifier::{
    chernoff_style_upper, conditional_error_bruteforce, conditional_error_exact,
    conditional_error_log, decide, Decision, Hypothesis, HypothesisPrior, ProblemSpec,
    TrainingData, TrainingRatio,
};
pub use error::{Error, Result};
pub use mixture::{
    approx_code_length, exact_code_length, marginal_log_prob, posterior_predictive_log,
    ApproxLengthTerms, DirichletPrior,
};
pub use model::{
    fisher_information, log_likelihood, mle, sample_counts, CategoricalParams, Counts, RngSeed,
};
pub use sim::{simulate_conditional_error, simulate_generative, Estimator, SimReport, TestSource};
