//! Bayes mixtures under Dirichlet priors.
//!
//! Every mixture integral `∫ P(s | eta) w(eta) d eta` over the simplex has the
//! closed form
//!
//! ```text
//! ln P(s) = sum_a [lnΓ(α_a + c_a) − lnΓ(α_a)] + lnΓ(A) − lnΓ(A + m)
//! ```
//!
//! with `A = sum α` and `m = sum c`, so log-gamma is the only transcendental
//! needed. Posterior predictives are ratios of two such mixtures, because the
//! likelihood of a concatenation is the product of the likelihoods.

use rand::Rng;
use rand_distr::{Distribution, Gamma};
use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::model::{self, sample_from_probs, CategoricalParams, Counts};
use crate::numerics::ln_gamma;

/// Dirichlet concentration vector; `K >= 2`, every entry finite and `> 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct DirichletPrior {
    alphas: Vec<f64>,
}

impl DirichletPrior {
    pub fn new(alphas: Vec<f64>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::Invalid(format!(
                "Dirichlet prior needs K >= 2 concentrations, got {}",
                alphas.len()
            )));
        }
        if let Some((i, a)) = alphas
            .iter()
            .enumerate()
            .find(|(_, &a)| !(a > 0.0 && a.is_finite()))
        {
            return Err(Error::Invalid(format!(
                "Dirichlet concentration {i} = {a} is not a positive finite number"
            )));
        }
        Ok(Self { alphas })
    }

    pub fn symmetric(k: usize, alpha: f64) -> Result<Self> {
        Self::new(vec![alpha; k])
    }

    /// Jeffreys prior, all concentrations 1/2 (the Krichevsky-Trofimov mixture).
    pub fn jeffreys(k: usize) -> Self {
        Self {
            alphas: vec![0.5; k.max(2)],
        }
    }

    pub fn uniform(k: usize) -> Self {
        Self {
            alphas: vec![1.0; k.max(2)],
        }
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn k(&self) -> usize {
        self.alphas.len()
    }

    fn total(&self) -> f64 {
        self.alphas.iter().sum()
    }

    /// Posterior after observing `data`: concentrations `alphas + counts`.
    pub fn posterior(&self, data: &Counts) -> Result<DirichletPrior> {
        check_dims(self.k(), data.k())?;
        Ok(DirichletPrior {
            alphas: self
                .alphas
                .iter()
                .zip(data.counts())
                .map(|(a, &c)| a + c as f64)
                .collect(),
        })
    }

    /// Log density w.r.t. Lebesgue measure on the first `K - 1` coordinates.
    pub fn ln_density(&self, params: &CategoricalParams) -> Result<f64> {
        check_dims(self.k(), params.k())?;
        let norm = ln_gamma(self.total()) - self.alphas.iter().map(|&a| ln_gamma(a)).sum::<f64>();
        Ok(norm
            + self
                .alphas
                .iter()
                .zip(params.probs())
                .map(|(a, p)| (a - 1.0) * p.ln())
                .sum::<f64>())
    }

    /// Draw a probability vector from this Dirichlet.
    pub fn sample_probs<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let mut draws: Vec<f64> = self
            .alphas
            .iter()
            .map(|&a| Gamma::new(a, 1.0).expect("positive shape").sample(rng))
            .collect();
        let s: f64 = draws.iter().sum();
        for d in &mut draws {
            *d /= s;
        }
        draws
    }
}

impl TryFrom<Vec<f64>> for DirichletPrior {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DirichletPrior> for Vec<f64> {
    fn from(p: DirichletPrior) -> Self {
        p.alphas
    }
}

/// The three terms of the asymptotic Bayes code length (the `o(1)`
/// remainder is dropped, so this is an approximation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxLengthTerms {
    /// `-ln P(s | mle)`
    pub fit: f64,
    /// `(d / 2) ln(m / 2π)`
    pub complexity: f64,
    /// `ln(sqrt(det I(mle)) / w(mle))`
    pub prior_term: f64,
}

impl ApproxLengthTerms {
    pub fn total(&self) -> f64 {
        self.fit + self.complexity + self.prior_term
    }
}

/// Log of the mixture probability of one particular sequence with these counts.
pub fn marginal_log_prob(prior: &DirichletPrior, data: &Counts) -> Result<f64> {
    check_dims(prior.k(), data.k())?;
    if data.total() == 0 {
        return Ok(0.0);
    }
    let a = prior.total();
    let cells: f64 = prior
        .alphas
        .iter()
        .zip(data.counts())
        .filter(|(_, &c)| c > 0)
        .map(|(&al, &c)| ln_gamma(al + c as f64) - ln_gamma(al))
        .sum();
    Ok(cells + ln_gamma(a) - ln_gamma(a + data.total() as f64))
}

/// Bayes code length in nats, `-ln P*(s)`.
pub fn exact_code_length(prior: &DirichletPrior, data: &Counts) -> Result<f64> {
    Ok(-marginal_log_prob(prior, data)?)
}

/// Asymptotic expansion of the Bayes code length around the MLE.
pub fn approx_code_length(prior: &DirichletPrior, data: &Counts) -> Result<ApproxLengthTerms> {
    check_dims(prior.k(), data.k())?;
    let eta_hat = model::mle(data)?;
    let m = data.total() as f64;
    let d = eta_hat.dim() as f64;
    let fit = -model::log_likelihood(&eta_hat, data)?;
    let complexity = 0.5 * d * (m / (2.0 * std::f64::consts::PI)).ln();
    let prior_term = 0.5 * model::ln_det_fisher(&eta_hat) - prior.ln_density(&eta_hat)?;
    Ok(ApproxLengthTerms {
        fit,
        complexity,
        prior_term,
    })
}

/// `ln P(test | training)` under the posterior of `prior` given `training`.
pub fn posterior_predictive_log(
    prior: &DirichletPrior,
    training: &Counts,
    test: &Counts,
) -> Result<f64> {
    check_dims(prior.k(), training.k())?;
    check_dims(prior.k(), test.k())?;
    let joint = training.concat(test)?;
    Ok(marginal_log_prob(prior, &joint)? - marginal_log_prob(prior, training)?)
}

/// Draw the counts of `n` symbols from the posterior predictive (Pólya urn):
/// a parameter from the posterior, then `n` i.i.d. symbols from it.
pub fn sample_predictive<R: Rng + ?Sized>(
    prior: &DirichletPrior,
    training: &Counts,
    n: u64,
    rng: &mut R,
) -> Result<Counts> {
    let post = prior.posterior(training)?;
    let probs = post.sample_probs(rng);
    Ok(sample_from_probs(&probs, n, rng))
}
