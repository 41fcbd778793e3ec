//! Independent references for integration tests. Nothing here calls into the
//! library's transform or folding code.

#![allow(dead_code)]

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn random_vec(len: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

/// `scale · Σ_n x[n]·e^{sign·j2π·m·n/N}` at each `m` in `indices`.
pub fn dft_at(x: &[Complex64], indices: &[usize], sign: f64, scale: f64) -> Vec<Complex64> {
    let n = x.len();
    indices
        .iter()
        .map(|&m| {
            let mut acc = c(0.0, 0.0);
            for (i, &v) in x.iter().enumerate() {
                let turn = ((m * i) % n) as f64 / n as f64;
                acc += v * Complex64::from_polar(1.0, sign * TAU * turn);
            }
            acc * scale
        })
        .collect()
}

/// Full `N`-point transform from the definition.
pub fn dft_full(x: &[Complex64], sign: f64, scale: f64) -> Vec<Complex64> {
    let all: Vec<usize> = (0..x.len()).collect();
    dft_at(x, &all, sign, scale)
}

/// `‖a − b‖∞ / ‖b‖∞` (absolute when `b` is zero).
pub fn rel_linf(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let scale = b.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let err = a.iter().zip(b).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max);
    if scale > 0.0 {
        err / scale
    } else {
        err
    }
}

pub fn max_abs(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(u, v)| (u - v).norm()).fold(0.0, f64::max)
}

/// Square-configuration reference: stride-√N sums followed by a direct
/// √N-point transform.
pub fn sic_reference(x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let r = (n as f64).sqrt().round() as usize;
    assert_eq!(r * r, n);
    let mut compressed = vec![c(0.0, 0.0); r];
    for (i, &v) in x.iter().enumerate() {
        compressed[i % r] += v;
    }
    dft_full(&compressed, -1.0, 1.0)
}

pub const EXAMPLE_SIGNAL: [(f64, f64); 8] = [
    (1.0, 1.0),
    (2.0, 2.0),
    (3.0, 3.0),
    (-4.0, -4.0),
    (-5.0, -5.0),
    (-6.0, 6.0),
    (7.0, -7.0),
    (8.0, 8.0),
];
