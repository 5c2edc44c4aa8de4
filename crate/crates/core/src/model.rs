//! Finite-alphabet categorical models: parameters, sufficient statistics,
//! likelihoods, sampling, MLE and Fisher information.
//!
//! Symbols are the indices `0..K`. For the Bernoulli family (`K = 2`) the
//! parameter `theta` is the probability of symbol `1`.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};

const SUM_TOL: f64 = 1e-12;

/// A probability vector over `K >= 2` symbols with every entry in `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct CategoricalParams {
    probs: Vec<f64>,
}

impl CategoricalParams {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.len() < 2 {
            return Err(Error::Invalid(format!(
                "categorical parameter needs K >= 2 entries, got {}",
                probs.len()
            )));
        }
        if let Some((i, p)) = probs
            .iter()
            .enumerate()
            .find(|(_, &p)| !(p > 0.0 && p < 1.0))
        {
            return Err(Error::Invalid(format!(
                "probability entry {i} = {p} is not strictly inside (0, 1)"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::Invalid(format!(
                "probabilities sum to {sum}, not 1 within {SUM_TOL:e}"
            )));
        }
        Ok(Self { probs })
    }

    /// Bernoulli parameter: `P(1) = theta`, `P(0) = 1 - theta`.
    pub fn bernoulli(theta: f64) -> Result<Self> {
        Self::new(vec![1.0 - theta, theta])
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Alphabet size `K`.
    pub fn k(&self) -> usize {
        self.probs.len()
    }

    /// Parameter dimension `K - 1`.
    pub fn dim(&self) -> usize {
        self.probs.len() - 1
    }

    /// The same distribution with the symbol order reversed.
    pub fn reversed(&self) -> Self {
        Self {
            probs: self.probs.iter().rev().copied().collect(),
        }
    }
}

impl TryFrom<Vec<f64>> for CategoricalParams {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CategoricalParams> for Vec<f64> {
    fn from(p: CategoricalParams) -> Self {
        p.probs
    }
}

/// Symbol counts of a sequence (its type). The total is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct Counts {
    counts: Vec<u64>,
    total: u64,
}

impl Counts {
    pub fn new(counts: Vec<u64>) -> Self {
        let total = counts.iter().sum();
        Self { counts, total }
    }

    pub fn zeros(k: usize) -> Self {
        Self::new(vec![0; k])
    }

    /// Counts of a concrete symbol sequence.
    pub fn from_symbols(k: usize, symbols: &[usize]) -> Result<Self> {
        let mut counts = vec![0; k];
        for &s in symbols {
            if s >= k {
                return Err(Error::Invalid(format!(
                    "symbol {s} outside alphabet of size {k}"
                )));
            }
            counts[s] += 1;
        }
        Ok(Self::new(counts))
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn k(&self) -> usize {
        self.counts.len()
    }

    /// Counts of the concatenation of two sequences.
    pub fn concat(&self, other: &Counts) -> Result<Counts> {
        check_dims(self.k(), other.k())?;
        Ok(Counts::new(
            self.counts
                .iter()
                .zip(&other.counts)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.counts.iter().rev().copied().collect())
    }
}

impl From<Vec<u64>> for Counts {
    fn from(v: Vec<u64>) -> Self {
        Counts::new(v)
    }
}

impl From<Counts> for Vec<u64> {
    fn from(c: Counts) -> Self {
        c.counts
    }
}

/// Master seed for every random draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Independent counter-based substream `index` of this seed.
    pub fn substream(self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(index);
        rng
    }
}

/// `sum_a counts[a] * ln probs[a]`, the log-probability of any one sequence
/// with these counts.
pub fn log_likelihood(params: &CategoricalParams, data: &Counts) -> Result<f64> {
    check_dims(params.k(), data.k())?;
    Ok(params
        .probs
        .iter()
        .zip(&data.counts)
        .filter(|(_, &c)| c > 0)
        .map(|(p, &c)| c as f64 * p.ln())
        .sum())
}

/// Draw `n` i.i.d. symbols from `params` and return their counts.
pub fn sample_counts(params: &CategoricalParams, n: u64, seed: RngSeed) -> Counts {
    sample_counts_with(params, n, &mut seed.rng())
}

/// As [`sample_counts`] but drawing from a caller-supplied generator.
pub fn sample_counts_with<R: Rng + ?Sized>(
    params: &CategoricalParams,
    n: u64,
    rng: &mut R,
) -> Counts {
    sample_from_probs(params.probs(), n, rng)
}

pub(crate) fn sample_from_probs<R: Rng + ?Sized>(probs: &[f64], n: u64, rng: &mut R) -> Counts {
    let k = probs.len();
    let mut cdf = Vec::with_capacity(k);
    let mut acc = 0.0;
    for p in probs {
        acc += p;
        cdf.push(acc);
    }
    let mut counts = vec![0u64; k];
    for _ in 0..n {
        let u: f64 = rng.random::<f64>() * acc;
        let idx = cdf.partition_point(|&c| c <= u).min(k - 1);
        counts[idx] += 1;
    }
    Counts::new(counts)
}

/// Maximum-likelihood estimate `counts / total`. Requires every count >= 1.
pub fn mle(data: &Counts) -> Result<CategoricalParams> {
    if data.total() == 0 {
        return Err(Error::Invalid("MLE of an empty sequence".into()));
    }
    if let Some(symbol) = data.counts.iter().position(|&c| c == 0) {
        return Err(Error::BoundaryMle { symbol });
    }
    let n = data.total() as f64;
    let probs: Vec<f64> = data.counts.iter().map(|&c| c as f64 / n).collect();
    // Renormalization is unnecessary: c/n sums to 1 up to rounding well below 1e-12.
    CategoricalParams::new(probs)
}

/// Fisher information in the chart given by the first `K - 1` probabilities:
/// `I[j][k] = delta_jk / p_j + 1 / p_K`.
pub fn fisher_information(params: &CategoricalParams) -> DMatrix<f64> {
    let d = params.dim();
    let last = params.probs[d];
    DMatrix::from_fn(d, d, |j, k| {
        let diag = if j == k { 1.0 / params.probs[j] } else { 0.0 };
        diag + 1.0 / last
    })
}

/// `ln det I(params)`; for the categorical chart `det I = 1 / prod_a p_a`.
pub fn ln_det_fisher(params: &CategoricalParams) -> f64 {
    -params.probs.iter().map(|p| p.ln()).sum::<f64>()
}
