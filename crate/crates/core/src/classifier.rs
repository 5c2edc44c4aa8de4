//! The Bayes-optimal two-hypothesis decision rule given training data, and
//! its exact conditional error probability.
//!
//! The error of the optimal rule is
//! `sum_x min{π1 P(x | y1, H1), π2 P(x | y2, H2)}` over all test sequences of
//! length `n`. Both predictives depend on `x` only through its counts, so the
//! sum runs over type classes weighted by multinomial coefficients.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::mixture::{posterior_predictive_log, DirichletPrior};
use crate::model::{sample_counts_with, CategoricalParams, Counts};
use crate::numerics::{
    ln_gamma, ln_multinomial, log_sum_exp_pairwise, type_class_count, KahanSum, TypeClasses,
};

/// Largest number of type classes the exact sums will enumerate.
pub const TYPE_CLASS_BUDGET: f64 = 1e7;
/// Largest number of individual sequences the brute-force oracle will visit.
pub const SEQUENCE_BUDGET: f64 = 1e6;

const PI_SUM_TOL: f64 = 1e-12;

/// Training-to-test length ratio `N / n`, kept as a reduced fraction so that
/// `N = αn` is checked exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TrainingRatio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl TrainingRatio {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::Invalid(format!(
                "training ratio {num}/{den} must be positive"
            )));
        }
        let g = gcd(num, den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(k: u64) -> Result<Self> {
        Self::new(k, 1)
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `N = αn`, or an error when it is not an integer.
    pub fn training_len(&self, n: u64) -> Result<u64> {
        let scaled = n as u128 * self.num as u128;
        if !scaled.is_multiple_of(self.den as u128) {
            return Err(Error::NonIntegerTraining {
                alpha: self.to_string(),
                n,
            });
        }
        Ok((scaled / self.den as u128) as u64)
    }
}

impl fmt::Display for TrainingRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for TrainingRatio {
    type Err = Error;

    /// Accepts `"2"`, `"3/2"` or a finite decimal such as `"1.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("cannot parse training ratio {s:?}"));
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d = d.trim().parse().map_err(|_| bad())?;
            return Self::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: u64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            return Self::new(int * den + frac, den);
        }
        Self::integer(s.parse().map_err(|_| bad())?)
    }
}

impl From<TrainingRatio> for String {
    fn from(r: TrainingRatio) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for TrainingRatio {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Prior probabilities `(π1, π2)` of the two hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypothesisPrior {
    pub pi1: f64,
    pub pi2: f64,
}

impl HypothesisPrior {
    pub fn new(pi1: f64, pi2: f64) -> Result<Self> {
        if !(pi1 > 0.0 && pi2 > 0.0) || (pi1 + pi2 - 1.0).abs() > PI_SUM_TOL {
            return Err(Error::Invalid(format!(
                "hypothesis prior ({pi1}, {pi2}) must be positive and sum to 1"
            )));
        }
        Ok(Self { pi1, pi2 })
    }

    pub fn from_pi1(pi1: f64) -> Result<Self> {
        Self::new(pi1, 1.0 - pi1)
    }

    pub fn uniform() -> Self {
        Self { pi1: 0.5, pi2: 0.5 }
    }

    pub fn max(&self) -> f64 {
        self.pi1.max(self.pi2)
    }

    pub fn min(&self) -> f64 {
        self.pi1.min(self.pi2)
    }
}

/// Full description of one classification experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub theta_star: CategoricalParams,
    pub xi_star: CategoricalParams,
    pub mu: DirichletPrior,
    pub nu: DirichletPrior,
    pub pi: HypothesisPrior,
    pub alpha: TrainingRatio,
}

impl ProblemSpec {
    pub fn new(
        theta_star: CategoricalParams,
        xi_star: CategoricalParams,
        mu: DirichletPrior,
        nu: DirichletPrior,
        pi: HypothesisPrior,
        alpha: TrainingRatio,
    ) -> Result<Self> {
        let k = theta_star.k();
        check_dims(k, xi_star.k())?;
        check_dims(k, mu.k())?;
        check_dims(k, nu.k())?;
        Ok(Self {
            theta_star,
            xi_star,
            mu,
            nu,
            pi,
            alpha,
        })
    }

    /// Jeffreys priors on both hypotheses.
    pub fn with_jeffreys(
        theta_star: CategoricalParams,
        xi_star: CategoricalParams,
        pi: HypothesisPrior,
        alpha: TrainingRatio,
    ) -> Result<Self> {
        let k = theta_star.k();
        Self::new(
            theta_star,
            xi_star,
            DirichletPrior::jeffreys(k),
            DirichletPrior::jeffreys(k),
            pi,
            alpha,
        )
    }

    pub fn k(&self) -> usize {
        self.theta_star.k()
    }

    /// The spec with hypotheses exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            theta_star: self.xi_star.clone(),
            xi_star: self.theta_star.clone(),
            mu: self.nu.clone(),
            nu: self.mu.clone(),
            pi: HypothesisPrior {
                pi1: self.pi.pi2,
                pi2: self.pi.pi1,
            },
            alpha: self.alpha,
        }
    }
}

/// The pair of training sequences, summarized by their counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingData {
    pub y1: Counts,
    pub y2: Counts,
}

impl TrainingData {
    pub fn new(y1: Counts, y2: Counts) -> Result<Self> {
        check_dims(y1.k(), y2.k())?;
        if y1.total() != y2.total() {
            return Err(Error::Invalid(format!(
                "training sequences must share a length, got {} and {}",
                y1.total(),
                y2.total()
            )));
        }
        Ok(Self { y1, y2 })
    }

    /// Draw `y1 ~ θ*` and `y2 ~ ξ*`, each of length `N = αn`.
    pub fn sample<R: Rng + ?Sized>(spec: &ProblemSpec, n: u64, rng: &mut R) -> Result<Self> {
        let big_n = spec.alpha.training_len(n)?;
        let y1 = sample_counts_with(&spec.theta_star, big_n, rng);
        let y2 = sample_counts_with(&spec.xi_star, big_n, rng);
        Ok(Self { y1, y2 })
    }

    pub fn len(&self) -> u64 {
        self.y1.total()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    H1,
    H2,
}

/// Outcome of the decision rule together with both log-scores
/// `ln π_i + ln P(x | y_i, H_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Decision {
    pub hypothesis: Hypothesis,
    pub log_score_h1: f64,
    pub log_score_h2: f64,
}

impl Decision {
    fn from_scores(log_score_h1: f64, log_score_h2: f64) -> Self {
        // ties go to H1
        let hypothesis = if log_score_h1 >= log_score_h2 {
            Hypothesis::H1
        } else {
            Hypothesis::H2
        };
        Self {
            hypothesis,
            log_score_h1,
            log_score_h2,
        }
    }
}

fn check_inputs(spec: &ProblemSpec, data: &TrainingData) -> Result<()> {
    check_dims(spec.k(), data.y1.k())?;
    check_dims(spec.k(), data.y2.k())
}

pub fn decide(spec: &ProblemSpec, data: &TrainingData, test: &Counts) -> Result<Decision> {
    check_inputs(spec, data)?;
    check_dims(spec.k(), test.k())?;
    if test.total() == 0 {
        return Err(Error::Invalid("test sequence must be non-empty".into()));
    }
    let s1 = spec.pi.pi1.ln() + posterior_predictive_log(&spec.mu, &data.y1, test)?;
    let s2 = spec.pi.pi2.ln() + posterior_predictive_log(&spec.nu, &data.y2, test)?;
    Ok(Decision::from_scores(s1, s2))
}

/// Log posterior predictive of one hypothesis, the Dirichlet-multinomial
/// closed form with the posterior concentrations precomputed:
/// `sum_a [lnΓ(a_a + x_a) - lnΓ(a_a)] + lnΓ(A) - lnΓ(A + n)`.
struct PredictiveScorer {
    post: Vec<f64>,
    post_total: f64,
    offset: f64,
}

impl PredictiveScorer {
    fn new(prior: &DirichletPrior, training: &Counts) -> Result<Self> {
        let post = prior.posterior(training)?;
        let post = post.alphas().to_vec();
        let post_total: f64 = post.iter().sum();
        Ok(Self {
            offset: ln_gamma(post_total),
            post,
            post_total,
        })
    }

    fn score(&self, x: &[u64], n: u64) -> f64 {
        let mut s = self.offset - ln_gamma(self.post_total + n as f64);
        for (&a, &c) in self.post.iter().zip(x) {
            if c > 0 {
                s += ln_gamma(a + c as f64) - ln_gamma(a);
            }
        }
        s
    }
}

fn check_type_budget(n: u64, k: usize) -> Result<()> {
    let needed = type_class_count(n, k);
    if needed > TYPE_CLASS_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "type classes",
            needed,
            limit: TYPE_CLASS_BUDGET,
        });
    }
    Ok(())
}

/// Evaluate `term(counts)` over every type class of length `n`, then reduce
/// the log-terms with a pairwise log-sum-exp.
fn sum_over_types<F>(n: u64, k: usize, term: F) -> f64
where
    F: Fn(&[u64]) -> f64 + Sync,
{
    const CHUNK: usize = 8192;
    let mut terms = Vec::new();
    let mut classes = TypeClasses::new(n, k);
    loop {
        let chunk: Vec<Vec<u64>> = classes.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        if chunk.len() < 256 {
            terms.extend(chunk.iter().map(|c| term(c)));
        } else {
            let mapped: Vec<f64> = chunk.par_iter().map(|c| term(c)).collect();
            terms.extend(mapped);
        }
    }
    log_sum_exp_pairwise(&terms)
}

/// `ln P_{Λ*}(e | D)` for test length `n`.
pub fn conditional_error_log(spec: &ProblemSpec, data: &TrainingData, n: u64) -> Result<f64> {
    check_inputs(spec, data)?;
    if n == 0 {
        return Err(Error::Invalid("test length n must be >= 1".into()));
    }
    check_type_budget(n, spec.k())?;
    let h1 = PredictiveScorer::new(&spec.mu, &data.y1)?;
    let h2 = PredictiveScorer::new(&spec.nu, &data.y2)?;
    let (lp1, lp2) = (spec.pi.pi1.ln(), spec.pi.pi2.ln());
    Ok(sum_over_types(n, spec.k(), |x| {
        let s1 = lp1 + h1.score(x, n);
        let s2 = lp2 + h2.score(x, n);
        ln_multinomial(x) + s1.min(s2)
    }))
}

/// Exact conditional error probability of the optimal rule.
pub fn conditional_error_exact(spec: &ProblemSpec, data: &TrainingData, n: u64) -> Result<f64> {
    conditional_error_log(spec, data, n).map(f64::exp)
}

/// Same quantity as [`conditional_error_exact`], summed one sequence at a
/// time with predictives built symbol by symbol (rule of succession) in the
/// probability domain.
pub fn conditional_error_bruteforce(
    spec: &ProblemSpec,
    data: &TrainingData,
    n: u64,
) -> Result<f64> {
    check_inputs(spec, data)?;
    if n == 0 {
        return Err(Error::Invalid("test length n must be >= 1".into()));
    }
    let k = spec.k();
    let needed = (k as f64).powf(n as f64);
    if needed > SEQUENCE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "sequences",
            needed,
            limit: SEQUENCE_BUDGET,
        });
    }
    let post1 = spec.mu.posterior(&data.y1)?;
    let post2 = spec.nu.posterior(&data.y2)?;
    let a1 = post1.alphas();
    let a2 = post2.alphas();
    let (t1, t2): (f64, f64) = (a1.iter().sum(), a2.iter().sum());

    let mut acc = KahanSum::default();
    let mut seq = vec![0usize; n as usize];
    let mut seen = vec![0u64; k];
    loop {
        seen.iter_mut().for_each(|s| *s = 0);
        let (mut p1, mut p2) = (1.0, 1.0);
        for (j, &sym) in seq.iter().enumerate() {
            let s = seen[sym] as f64;
            p1 *= (a1[sym] + s) / (t1 + j as f64);
            p2 *= (a2[sym] + s) / (t2 + j as f64);
            seen[sym] += 1;
        }
        acc.add((spec.pi.pi1 * p1).min(spec.pi.pi2 * p2));

        // odometer increment over A^n
        let mut pos = 0;
        loop {
            if pos == seq.len() {
                return Ok(acc.value());
            }
            seq[pos] += 1;
            if seq[pos] < k {
                break;
            }
            seq[pos] = 0;
            pos += 1;
        }
    }
}

/// Chernoff-type upper bound
/// `π1^λ π2^(1-λ) sum_x P(x|y1,H1)^λ P(x|y2,H2)^(1-λ)` on the conditional
/// error, evaluated exactly.
pub fn chernoff_style_upper(
    spec: &ProblemSpec,
    data: &TrainingData,
    n: u64,
    lambda: f64,
) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    check_inputs(spec, data)?;
    if n == 0 {
        return Err(Error::Invalid("test length n must be >= 1".into()));
    }
    check_type_budget(n, spec.k())?;
    let h1 = PredictiveScorer::new(&spec.mu, &data.y1)?;
    let h2 = PredictiveScorer::new(&spec.nu, &data.y2)?;
    let log_sum = sum_over_types(n, spec.k(), |x| {
        ln_multinomial(x) + lambda * h1.score(x, n) + (1.0 - lambda) * h2.score(x, n)
    });
    let log_pi = lambda * spec.pi.pi1.ln() + (1.0 - lambda) * spec.pi.pi2.ln();
    Ok((log_pi + log_sum).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u64]) -> Counts {
        Counts::new(v.to_vec())
    }

    fn spec2(theta: f64, xi: f64, mu: &[f64], nu: &[f64], pi1: f64) -> ProblemSpec {
        ProblemSpec::new(
            CategoricalParams::bernoulli(theta).unwrap(),
            CategoricalParams::bernoulli(xi).unwrap(),
            DirichletPrior::new(mu.to_vec()).unwrap(),
            DirichletPrior::new(nu.to_vec()).unwrap(),
            HypothesisPrior::from_pi1(pi1).unwrap(),
            TrainingRatio::integer(2).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn ratio_parsing() {
        assert_eq!(
            "2".parse::<TrainingRatio>().unwrap(),
            TrainingRatio::new(2, 1).unwrap()
        );
        assert_eq!(
            "3/2".parse::<TrainingRatio>().unwrap(),
            TrainingRatio::new(3, 2).unwrap()
        );
        assert_eq!(
            "1.5".parse::<TrainingRatio>().unwrap(),
            TrainingRatio::new(3, 2).unwrap()
        );
        assert_eq!("6/4".parse::<TrainingRatio>().unwrap().to_string(), "3/2");
        assert!("0".parse::<TrainingRatio>().is_err());
        assert!("x".parse::<TrainingRatio>().is_err());
        let r = TrainingRatio::new(3, 2).unwrap();
        assert_eq!(r.training_len(4).unwrap(), 6);
        assert!(matches!(
            r.training_len(5),
            Err(Error::NonIntegerTraining { .. })
        ));
    }

    #[test]
    fn hypothesis_prior_validation() {
        assert!(HypothesisPrior::new(0.5, 0.6).is_err());
        assert!(HypothesisPrior::new(0.0, 1.0).is_err());
        assert!(HypothesisPrior::new(1.0 - 1e-15, 1e-15).is_ok());
    }

    #[test]
    fn training_data_lengths_must_match() {
        assert!(TrainingData::new(c(&[1, 2]), c(&[1, 1])).is_err());
        assert!(TrainingData::new(c(&[1, 2]), c(&[1, 1, 1])).is_err());
    }

    #[test]
    fn mirror_symmetric_decision() {
        let spec = spec2(0.3, 0.7, &[0.5, 0.5], &[0.5, 0.5], 0.5);
        let data = TrainingData::new(c(&[3, 0]), c(&[0, 3])).unwrap();
        let d = decide(&spec, &data, &c(&[2, 0])).unwrap();
        assert_eq!(d.hypothesis, Hypothesis::H1);
        assert!(d.log_score_h1 > d.log_score_h2);
    }

    #[test]
    fn dominant_prior_decides_h1() {
        let mut spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        spec.pi = HypothesisPrior::new(1.0 - 1e-15, 1e-15).unwrap();
        let data = TrainingData::new(c(&[4, 0]), c(&[0, 4])).unwrap();
        let d = decide(&spec, &data, &c(&[0, 3])).unwrap();
        assert_eq!(d.hypothesis, Hypothesis::H1);
    }

    #[test]
    fn beta_ratio_hand_expansion() {
        // Uniform priors, y1=(2,1), y2=(1,2): posteriors Beta-like (3,2) and (2,3).
        // P(x=(3,0)|y1) = 3/5 * 4/6 * 5/7, P(x=(3,0)|y2) = 2/5 * 3/6 * 4/7.
        let spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[2, 1]), c(&[1, 2])).unwrap();
        let d = decide(&spec, &data, &c(&[3, 0])).unwrap();
        let e1 = (0.5f64 * (3.0 / 5.0) * (4.0 / 6.0) * (5.0 / 7.0)).ln();
        let e2 = (0.5f64 * (2.0 / 5.0) * (3.0 / 6.0) * (4.0 / 7.0)).ln();
        assert_eq!(d.hypothesis, Hypothesis::H1);
        assert!((d.log_score_h1 - e1).abs() < 1e-12);
        assert!((d.log_score_h2 - e2).abs() < 1e-12);
    }

    #[test]
    fn decide_rejects_empty_test() {
        let spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[2, 1]), c(&[1, 2])).unwrap();
        assert!(decide(&spec, &data, &c(&[0, 0])).is_err());
        assert!(decide(&spec, &data, &c(&[1, 0, 0])).is_err());
    }

    #[test]
    fn indistinguishable_hypotheses_give_half() {
        let spec = spec2(0.3, 0.7, &[0.5, 0.5], &[0.5, 0.5], 0.5);
        let data = TrainingData::new(c(&[3, 5]), c(&[3, 5])).unwrap();
        for n in [1, 4, 17] {
            let e = conditional_error_exact(&spec, &data, n).unwrap();
            assert!((e - 0.5).abs() < 1e-13, "n={n}: {e}");
        }
    }

    #[test]
    fn exact_matches_bruteforce_fixed_case() {
        let spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[4, 1]), c(&[1, 4])).unwrap();
        let e = conditional_error_exact(&spec, &data, 6).unwrap();
        let b = conditional_error_bruteforce(&spec, &data, 6).unwrap();
        assert!((e - b).abs() < 1e-13, "{e} vs {b}");
        assert!(e > 0.0 && e <= 0.5);
    }

    #[test]
    fn bruteforce_single_symbol_uniform() {
        let spec = spec2(0.5, 0.5, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[0, 0]), c(&[0, 0])).unwrap();
        assert!((conditional_error_bruteforce(&spec, &data, 1).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn mirrored_error_is_invariant() {
        let spec = spec2(0.3, 0.7, &[0.5, 0.5], &[0.5, 0.5], 0.5);
        let data = TrainingData::new(c(&[5, 1]), c(&[1, 5])).unwrap();
        let e = conditional_error_exact(&spec, &data, 7).unwrap();
        let swapped = TrainingData::new(data.y2.reversed(), data.y1.reversed()).unwrap();
        let e2 = conditional_error_exact(&spec, &swapped, 7).unwrap();
        assert!((e - e2).abs() < 1e-15);
    }

    #[test]
    fn budgets() {
        let spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[1, 1]), c(&[1, 1])).unwrap();
        assert!(matches!(
            conditional_error_bruteforce(&spec, &data, 21),
            Err(Error::BudgetExceeded { .. })
        ));
        let k = 6;
        let p = CategoricalParams::new(vec![1.0 / k as f64; k]).unwrap();
        let big = ProblemSpec::with_jeffreys(
            p.clone(),
            p,
            HypothesisPrior::uniform(),
            TrainingRatio::integer(1).unwrap(),
        )
        .unwrap();
        let d = TrainingData::new(Counts::zeros(k), Counts::zeros(k)).unwrap();
        assert!(matches!(
            conditional_error_exact(&big, &d, 200),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn chernoff_bound_identical_predictives() {
        let spec = spec2(0.3, 0.7, &[1.0, 1.0], &[1.0, 1.0], 0.5);
        let data = TrainingData::new(c(&[2, 2]), c(&[2, 2])).unwrap();
        for lambda in [0.1, 0.5, 0.9] {
            let u = chernoff_style_upper(&spec, &data, 5, lambda).unwrap();
            assert!((u - 0.5).abs() < 1e-13);
        }
        assert_eq!(
            chernoff_style_upper(&spec, &data, 5, 1.0),
            Err(Error::LambdaOutOfRange(1.0))
        );
        assert!(chernoff_style_upper(&spec, &data, 5, 0.0).is_err());
    }

    #[test]
    fn chernoff_bound_dominates_on_grid() {
        let spec = spec2(0.3, 0.7, &[0.5, 0.5], &[2.0, 1.0], 0.3);
        let data = TrainingData::new(c(&[7, 3]), c(&[2, 8])).unwrap();
        let e = conditional_error_exact(&spec, &data, 10).unwrap();
        for i in 1..10 {
            let u = chernoff_style_upper(&spec, &data, 10, i as f64 / 10.0).unwrap();
            assert!(u >= e, "lambda={} u={u} e={e}", i as f64 / 10.0);
        }
    }
}
