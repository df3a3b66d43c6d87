//! Shared oracles for the integration suites: a direct O(n^2) DFT pair,
//! independent of every transform code path in the crate.

use dwft::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Forward DFT, `X_q = sum_i x_i exp(-2 pi i q i / n)`, by direct summation.
pub fn naive_dft(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    (0..n)
        .map(|q| {
            (0..n)
                .map(|i| {
                    let theta = -std::f64::consts::TAU * (q * i % n) as f64 / n as f64;
                    x[i] * Complex64::from_polar(1.0, theta)
                })
                .sum()
        })
        .collect()
}

/// Unnormalized synthesis, `x_i = sum_q c_q exp(2 pi i q i / n)`.
pub fn naive_idft(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|q| {
                    let theta = std::f64::consts::TAU * (q * i % n) as f64 / n as f64;
                    c[q] * Complex64::from_polar(1.0, theta)
                })
                .sum()
        })
        .collect()
}

pub fn random_complex(n: usize, rng: &mut StdRng) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn rel_err(got: &[Complex64], want: &[Complex64]) -> f64 {
    let num: f64 = got
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    num / norm(want).max(f64::MIN_POSITIVE)
}
