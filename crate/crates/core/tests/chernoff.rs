mod common;

use bcb_core::chernoff::chernoff_objective;
use bcb_core::{bound_constants, chernoff_information, tilted_distribution, CategoricalParams};
use common::{chernoff_grid, random_probs, rng};
use rand::Rng;

fn b(theta: f64) -> CategoricalParams {
    CategoricalParams::bernoulli(theta).unwrap()
}

#[test]
fn case_values_match_grid_oracle() {
    for (p, q, expected_c) in [(0.55, 0.45, 5.025_167_927e-3), (0.3, 0.7, 8.717_669_357e-2)] {
        let (p, q) = (b(p), b(q));
        let (grid_lambda, grid_c) = chernoff_grid(p.probs(), q.probs(), 1_000_000);
        let r = chernoff_information(&p, &q).unwrap();
        assert!((r.c_info - grid_c).abs() < 1e-9);
        assert!((r.c_info - expected_c).abs() < 1e-9, "{}", r.c_info);
        assert!((grid_lambda - 0.5).abs() < 2e-6);
        assert!((r.lambda_star - 0.5).abs() < 1e-9);
    }
}

#[test]
fn solver_matches_grid_on_random_pairs() {
    let mut r = rng(31);
    for _ in 0..100 {
        let k = r.random_range(2..=4);
        let p = random_probs(&mut r, k);
        let q = random_probs(&mut r, k);
        let (_, grid_c) = chernoff_grid(p.probs(), q.probs(), 1_000_000);
        let s = chernoff_information(&p, &q).unwrap();
        assert!(s.c_info >= grid_c - 1e-12);
        assert!((s.c_info - grid_c).abs() < 1e-9, "{} vs {grid_c}", s.c_info);
    }
}

#[test]
fn symmetric_in_arguments() {
    let mut r = rng(32);
    for _ in 0..200 {
        let k = r.random_range(2..=5);
        let p = random_probs(&mut r, k);
        let q = random_probs(&mut r, k);
        let a = chernoff_information(&p, &q).unwrap();
        let b = chernoff_information(&q, &p).unwrap();
        assert!((a.c_info - b.c_info).abs() < 1e-10);
        assert!((a.lambda_star + b.lambda_star - 1.0).abs() < 1e-8);
    }
}

#[test]
fn tilted_log_ratio_has_zero_mean() {
    let mut r = rng(33);
    for _ in 0..1000 {
        let k = r.random_range(2..=5);
        let p = random_probs(&mut r, k);
        let q = random_probs(&mut r, k);
        let s = chernoff_information(&p, &q).unwrap();
        let phi = tilted_distribution(&p, &q, s.lambda_star).unwrap();
        let mean: f64 = phi
            .probs()
            .iter()
            .zip(p.probs().iter().zip(q.probs()))
            .map(|(f, (a, b))| f * (a.ln() - b.ln()))
            .sum();
        assert!(mean.abs() < 1e-8, "{mean}");
    }
}

#[test]
fn objective_is_concave() {
    let mut r = rng(34);
    for _ in 0..1000 {
        let k = r.random_range(2..=5);
        let p = random_probs(&mut r, k);
        let q = random_probs(&mut r, k);
        let mut l: Vec<f64> = (0..3).map(|_| r.random_range(0.0..1.0)).collect();
        l.sort_by(f64::total_cmp);
        if l[2] - l[0] < 1e-9 {
            continue;
        }
        let f: Vec<f64> = l.iter().map(|&x| chernoff_objective(&p, &q, x)).collect();
        let t = (l[1] - l[0]) / (l[2] - l[0]);
        let chord = (1.0 - t) * f[0] + t * f[2];
        assert!(f[1] >= chord - 1e-12);
    }
}

#[test]
fn threshold_is_least_passing_blocklength() {
    let mut r = rng(35);
    for _ in 0..200 {
        let k = r.random_range(2..=4);
        let p = random_probs(&mut r, k);
        let q = random_probs(&mut r, k);
        let a = bound_constants(&p, &q).unwrap();
        assert!(a.threshold_holds(a.n_min));
        assert!(a.n_min == 1 || !a.threshold_holds(a.n_min - 1));
        let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
        let cp = f64::max(
            2.0,
            2.0 * (0.56 * a.big_c).powf(1.5) * (-sqrt_2pi * a.big_c).exp(),
        );
        assert_eq!(a.big_c_prime, cp);
        assert!((a.tilted.probs().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(a.z_mean.abs() < 1e-8);
    }
}
