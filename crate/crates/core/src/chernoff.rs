//! Chernoff information between two categorical distributions and the
//! constants of the finite-blocklength lower bound on the known-distribution
//! error sum (tilted distribution, log-ratio moments, `c`, and the blocklength
//! from which that bound is certified).

use serde::{Deserialize, Serialize};

use crate::error::{check_dims, Error, Result};
use crate::model::CategoricalParams;
use crate::numerics::{golden_section_max, log_sum_exp};

/// Search interval is `(LAMBDA_EPS, 1 - LAMBDA_EPS)`.
pub const LAMBDA_EPS: f64 = 1e-9;
/// Absolute tolerance on the maximizer.
pub const LAMBDA_TOL: f64 = 1e-12;

/// Maximizer and value of `λ ↦ -ln sum_a p_a^λ q_a^(1-λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChernoffPoint {
    pub lambda_star: f64,
    pub c_info: f64,
}

/// Everything derived from the pair `(θ*, ξ*)` that the bounds need.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChernoffAnalysis {
    pub lambda_star: f64,
    /// Chernoff information in nats.
    pub c_info: f64,
    /// Geometric mixture `φ_{λ*}`.
    pub tilted: CategoricalParams,
    /// `E[Z]` under the tilted distribution; zero at an interior optimum.
    pub z_mean: f64,
    /// Standard deviation of the log-ratio `Z = ln p(A)/q(A)`, `A ~ φ_{λ*}`.
    pub sigma_bar: f64,
    /// Third-moment constant with `E|Z|^3 <= big_c * sigma_bar^2`.
    pub big_c: f64,
    /// True for the two-symbol closed form; the K > 2 choice is ours.
    pub big_c_canonical: bool,
    pub big_c_prime: f64,
    /// Constant `c` of the `c / sqrt(n)` prefactor.
    pub little_c: f64,
    /// Least `n` with `sqrt(n) sigma_bar λ*(1-λ*) >= big_c_prime`.
    pub n_min: u64,
}

impl ChernoffAnalysis {
    /// Whether the lower bound on the known-distribution error sum is
    /// certified at blocklength `n`.
    pub fn threshold_holds(&self, n: u64) -> bool {
        threshold_holds(n, self.sigma_bar, self.lambda_star, self.big_c_prime)
    }
}

fn threshold_holds(n: u64, sigma_bar: f64, lambda: f64, big_c_prime: f64) -> bool {
    (n as f64).sqrt() * sigma_bar * lambda * (1.0 - lambda) >= big_c_prime
}

fn log_ratios(p: &CategoricalParams, q: &CategoricalParams) -> Vec<f64> {
    p.probs()
        .iter()
        .zip(q.probs())
        .map(|(a, b)| a.ln() - b.ln())
        .collect()
}

/// Unnormalized tilted log-weights `λ ln p_a + (1-λ) ln q_a`.
fn tilted_log_weights(p: &CategoricalParams, q: &CategoricalParams, lambda: f64) -> Vec<f64> {
    p.probs()
        .iter()
        .zip(q.probs())
        .map(|(a, b)| lambda * a.ln() + (1.0 - lambda) * b.ln())
        .collect()
}

/// `f(λ) = -ln sum_a p_a^λ q_a^(1-λ)`, concave in `λ`.
pub fn chernoff_objective(p: &CategoricalParams, q: &CategoricalParams, lambda: f64) -> f64 {
    -log_sum_exp(&tilted_log_weights(p, q, lambda))
}

/// Mean and variance of `z` under the tilted distribution at `lambda`.
fn tilted_moments(
    p: &CategoricalParams,
    q: &CategoricalParams,
    z: &[f64],
    lambda: f64,
) -> (f64, f64) {
    let w = tilted_log_weights(p, q, lambda);
    let norm = log_sum_exp(&w);
    let phi: Vec<f64> = w.iter().map(|x| (x - norm).exp()).collect();
    let mean: f64 = phi.iter().zip(z).map(|(f, z)| f * z).sum();
    let var: f64 = phi.iter().zip(z).map(|(f, z)| f * (z - mean).powi(2)).sum();
    (mean, var)
}

pub fn chernoff_information(p: &CategoricalParams, q: &CategoricalParams) -> Result<ChernoffPoint> {
    check_dims(p.k(), q.k())?;
    if p == q {
        // f is identically zero; any λ attains the supremum
        return Ok(ChernoffPoint {
            lambda_star: 0.5,
            c_info: 0.0,
        });
    }
    let f = |lambda| chernoff_objective(p, q, lambda);
    let coarse = golden_section_max(f, LAMBDA_EPS, 1.0 - LAMBDA_EPS, LAMBDA_TOL);

    // Function values are flat to machine precision within ~1e-8 of the
    // optimum, so finish on the first-order condition E_φ[Z] = 0, whose
    // derivative in λ is Var_φ[Z] > 0.
    let z = log_ratios(p, q);
    let mut lambda = coarse.argmax;
    let (mut lo, mut hi) = (LAMBDA_EPS, 1.0 - LAMBDA_EPS);
    for _ in 0..100 {
        let (g, var) = tilted_moments(p, q, &z, lambda);
        if g == 0.0 {
            break;
        }
        if g > 0.0 {
            hi = lambda;
        } else {
            lo = lambda;
        }
        let newton = lambda - g / var;
        let next = if newton > lo && newton < hi && var > 0.0 {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - lambda).abs();
        lambda = next;
        if step < LAMBDA_TOL * 1e-3 || hi - lo < LAMBDA_TOL * 1e-3 {
            break;
        }
    }
    let c_info = f(lambda).max(0.0);
    Ok(ChernoffPoint {
        lambda_star: lambda,
        c_info,
    })
}

/// `φ_λ(a) ∝ p_a^λ q_a^(1-λ)`.
pub fn tilted_distribution(
    p: &CategoricalParams,
    q: &CategoricalParams,
    lambda: f64,
) -> Result<CategoricalParams> {
    check_dims(p.k(), q.k())?;
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let w = tilted_log_weights(p, q, lambda);
    let norm = log_sum_exp(&w);
    let mut phi: Vec<f64> = w.iter().map(|x| (x - norm).exp()).collect();
    let s: f64 = phi.iter().sum();
    phi.iter_mut().for_each(|x| *x /= s);
    CategoricalParams::new(phi)
}

pub fn bound_constants(p: &CategoricalParams, q: &CategoricalParams) -> Result<ChernoffAnalysis> {
    check_dims(p.k(), q.k())?;
    if p == q {
        return Err(Error::Degenerate);
    }
    let ChernoffPoint {
        lambda_star,
        c_info,
    } = chernoff_information(p, q)?;
    let tilted = tilted_distribution(p, q, lambda_star)?;
    let z = log_ratios(p, q);
    let phi = tilted.probs();
    let z_mean: f64 = phi.iter().zip(&z).map(|(f, z)| f * z).sum();

    let (sigma_bar, big_c, canonical) = if p.k() == 2 {
        // Two-point Z: its range is |ln(p1 q0 / (q1 p0))|, and
        // E|Z|^3 = C^3 φ0 φ1 (φ0^2 + φ1^2) <= C σ̄^2 at the mean-zero optimum.
        let range = (z[1] - z[0]).abs();
        let sigma = (range * range * phi[0] * phi[1]).sqrt();
        (sigma, range, true)
    } else {
        let var: f64 = phi
            .iter()
            .zip(&z)
            .map(|(f, z)| f * (z - z_mean).powi(2))
            .sum();
        let third: f64 = phi
            .iter()
            .zip(&z)
            .map(|(f, z)| f * (z - z_mean).abs().powi(3))
            .sum();
        (var.sqrt(), third / var, false)
    };
    if sigma_bar.is_nan() || sigma_bar <= 0.0 {
        return Err(Error::Degenerate);
    }

    let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
    let big_c_prime = f64::max(
        2.0,
        2.0 * (0.56 * big_c).powf(1.5) * (-sqrt_2pi * big_c).exp(),
    );
    let spread = lambda_star * (1.0 - lambda_star);
    let little_c = (-1.12 * sqrt_2pi * big_c).exp() / (30.0 * sigma_bar * spread);

    let ratio = big_c_prime / (sigma_bar * spread);
    let mut n_min = (ratio * ratio).ceil().max(1.0) as u64;
    // Settle floating-point ambiguity against the inequality itself.
    while !threshold_holds(n_min, sigma_bar, lambda_star, big_c_prime) {
        n_min += 1;
    }
    while n_min > 1 && threshold_holds(n_min - 1, sigma_bar, lambda_star, big_c_prime) {
        n_min -= 1;
    }

    Ok(ChernoffAnalysis {
        lambda_star,
        c_info,
        tilted,
        z_mean,
        sigma_bar,
        big_c,
        big_c_canonical: canonical,
        big_c_prime,
        little_c,
        n_min,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(theta: f64) -> CategoricalParams {
        CategoricalParams::bernoulli(theta).unwrap()
    }

    #[test]
    fn identical_distributions() {
        let p = b(0.4);
        let r = chernoff_information(&p, &p).unwrap();
        assert_eq!(r.lambda_star, 0.5);
        assert_eq!(r.c_info, 0.0);
        assert_eq!(bound_constants(&p, &p), Err(Error::Degenerate));
        assert_eq!(tilted_distribution(&p, &p, 0.3).unwrap().probs(), p.probs());
    }

    #[test]
    fn symmetric_bernoulli_pairs() {
        let r = chernoff_information(&b(0.55), &b(0.45)).unwrap();
        assert!((r.lambda_star - 0.5).abs() < 1e-9);
        assert!((r.c_info + (2.0 * (0.55f64 * 0.45).sqrt()).ln()).abs() < 1e-12);
        let r = chernoff_information(&b(0.3), &b(0.7)).unwrap();
        assert!((r.lambda_star - 0.5).abs() < 1e-9);
        assert!((r.c_info - 8.7177e-2).abs() < 1e-6);
    }

    #[test]
    fn tilted_examples() {
        let t = tilted_distribution(&b(0.55), &b(0.45), 0.5).unwrap();
        assert!((t.probs()[0] - 0.5).abs() < 1e-15);
        let p = CategoricalParams::new(vec![0.3, 0.7]).unwrap();
        let q = CategoricalParams::new(vec![0.6, 0.4]).unwrap();
        let t = tilted_distribution(&p, &q, 0.5).unwrap();
        let (a, c) = (0.18f64.sqrt(), 0.28f64.sqrt());
        assert!((t.probs()[0] - a / (a + c)).abs() < 1e-14);
        assert!((t.probs()[1] - c / (a + c)).abs() < 1e-14);
        assert!(tilted_distribution(&p, &q, 1.5).is_err());
    }

    #[test]
    fn case_two_constants() {
        let a = bound_constants(&b(0.3), &b(0.7)).unwrap();
        let big_c = (49.0f64 / 9.0).ln();
        assert!((a.big_c - big_c).abs() < 1e-12);
        assert!((a.big_c - 1.69460).abs() < 1e-5);
        assert!((a.sigma_bar - big_c / 2.0).abs() < 1e-9);
        assert!((a.tilted.probs()[1] - 0.5).abs() < 1e-9);
        // exp(-1.12 sqrt(2π) C) / (30 (C/2) / 4) with C = ln(49/9)
        assert!((a.little_c - 1.351_354_07e-3).abs() < 1e-11);
        assert_eq!(a.big_c_prime, 2.0);
        assert_eq!(a.n_min, 90);
        assert!(a.big_c_canonical);
    }

    #[test]
    fn case_one_threshold() {
        let a = bound_constants(&b(0.55), &b(0.45)).unwrap();
        assert_eq!(a.n_min, 1590);
        assert!(a.threshold_holds(1590));
        assert!(!a.threshold_holds(1589));
    }

    #[test]
    fn third_moment_inequality_holds() {
        for (p, q) in [
            (vec![0.2, 0.8], vec![0.6, 0.4]),
            (vec![0.2, 0.3, 0.5], vec![0.5, 0.3, 0.2]),
            (vec![0.1, 0.1, 0.1, 0.7], vec![0.25, 0.25, 0.25, 0.25]),
        ] {
            let p = CategoricalParams::new(p).unwrap();
            let q = CategoricalParams::new(q).unwrap();
            let a = bound_constants(&p, &q).unwrap();
            let z = log_ratios(&p, &q);
            let e3: f64 = a
                .tilted
                .probs()
                .iter()
                .zip(&z)
                .map(|(f, z)| f * z.abs().powi(3))
                .sum();
            assert!(e3 <= a.big_c * a.sigma_bar.powi(2) * (1.0 + 1e-9));
            assert_eq!(a.big_c_canonical, p.k() == 2);
        }
    }
}
