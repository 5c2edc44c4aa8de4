//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use bcb_core::{
    CategoricalParams, Counts, DirichletPrior, HypothesisPrior, ProblemSpec, TrainingData,
    TrainingRatio,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Interior probability vector with entries bounded away from 0.
pub fn random_probs<R: Rng>(rng: &mut R, k: usize) -> CategoricalParams {
    let raw: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
    let s: f64 = raw.iter().sum();
    let mut probs: Vec<f64> = raw.iter().map(|x| x / s).collect();
    let head: f64 = probs[..k - 1].iter().sum();
    probs[k - 1] = 1.0 - head;
    CategoricalParams::new(probs).unwrap()
}

pub fn random_prior<R: Rng>(rng: &mut R, k: usize) -> DirichletPrior {
    DirichletPrior::new((0..k).map(|_| rng.random_range(0.3..3.0)).collect()).unwrap()
}

pub fn random_spec<R: Rng>(rng: &mut R, k: usize) -> ProblemSpec {
    let pi1 = rng.random_range(0.1..0.9);
    ProblemSpec::new(
        random_probs(rng, k),
        random_probs(rng, k),
        random_prior(rng, k),
        random_prior(rng, k),
        HypothesisPrior::new(pi1, 1.0 - pi1).unwrap(),
        TrainingRatio::integer(rng.random_range(1..=3)).unwrap(),
    )
    .unwrap()
}

pub fn random_counts<R: Rng>(rng: &mut R, k: usize, total: u64) -> Counts {
    let mut c = vec![0u64; k];
    for _ in 0..total {
        c[rng.random_range(0..k)] += 1;
    }
    Counts::new(c)
}

pub fn random_data<R: Rng>(rng: &mut R, k: usize, big_n: u64) -> TrainingData {
    TrainingData::new(random_counts(rng, k, big_n), random_counts(rng, k, big_n)).unwrap()
}

/// Adaptive Simpson quadrature.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        (m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb))
    }
    #[allow(clippy::too_many_arguments)]
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (lm, flm, left) = simpson(f, a, fa, m, fm);
        let (rm, frm, right) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1)
            + rec(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (m, fm, whole) = simpson(f, a, fa, b, fb);
    rec(f, a, fa, b, fb, m, fm, whole, tol, 50)
}

/// `∫ θ^c0 (1-θ)^c1 Beta(θ; 1/2, 1/2) dθ` by quadrature after θ = sin²t,
/// which turns the Jeffreys density into the constant 2/π.
pub fn jeffreys_moment_quadrature(c0: u64, c1: u64) -> f64 {
    let f = |t: f64| {
        let (s, c) = (t.sin(), t.cos());
        s.powi(2 * c0 as i32) * c.powi(2 * c1 as i32) * 2.0 / std::f64::consts::PI
    };
    integrate(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-15)
}

/// Dense grid maximum of `λ ↦ -ln sum p^λ q^(1-λ)` over `(0, 1)`.
pub fn chernoff_grid(p: &[f64], q: &[f64], points: usize) -> (f64, f64) {
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 1..points {
        let l = i as f64 / points as f64;
        let s: f64 = p
            .iter()
            .zip(q)
            .map(|(a, b)| a.powf(l) * b.powf(1.0 - l))
            .sum();
        let v = -s.ln();
        if v > best.1 {
            best = (l, v);
        }
    }
    best
}

/// All sequences of length `n` over `k` symbols, as symbol vectors.
pub fn all_sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..k).map(move |a| {
                    let mut t = s.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}
