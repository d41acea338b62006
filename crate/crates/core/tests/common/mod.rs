//! Reference evaluations for the integration tests.
//!
//! Everything here is written directly from the rate expressions with naive
//! `log2(1 + x)` and plain grid search, sharing no code with the optimizers.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2011;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn gm(x: f64) -> f64 {
    (1.0 + x).log2()
}

/// Fixed-split sum rate: private sum plus min of the cross and joint common bounds.
pub fn naive_hk(a: f64, p: f64, l1: f64, l2: f64) -> f64 {
    let (b1, b2) = (1.0 - l1, 1.0 - l2);
    let d1 = 1.0 + l1 * p + a * l2 * p;
    let d2 = 1.0 + l2 * p + a * l1 * p;
    let private = gm(l1 * p / (1.0 + a * l2 * p)) + gm(l2 * p / (1.0 + a * l1 * p));
    let cross = gm(a * b2 * p / d1) + gm(a * b1 * p / d2);
    let joint = 0.5 * gm((b1 * p + a * b2 * p) / d1) + 0.5 * gm((b2 * p + a * b1 * p) / d2);
    private + cross.min(joint)
}

/// `(Ω1, Ω2)` at `λ1 = 0, λ2 = l`, from the cross/joint decomposition.
pub fn naive_omega(a: f64, p: f64, l: f64) -> (f64, f64) {
    let b = 1.0 - l;
    let private = gm(l * p);
    let cross = gm(a * b * p / (1.0 + a * l * p)) + gm(a * p / (1.0 + l * p));
    let joint = 0.5 * gm((p + a * b * p) / (1.0 + a * l * p)) + 0.5 * gm((b * p + a * p) / (1.0 + l * p));
    (private + cross, private + joint)
}

/// Maximum of `f` on `[0, 1]`: uniform grid of spacing `step`, then `rounds` of
/// 10x zoom around the incumbent.
pub fn grid_max_1d(f: impl Fn(f64) -> f64, step: f64, rounds: usize) -> (f64, f64) {
    let n = (1.0 / step).round() as usize;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        let v = f(x);
        if v > best.0 {
            best = (v, x);
        }
    }
    let mut half = 1.0 / n as f64;
    for _ in 0..rounds {
        let c = best.1;
        let h = half / 10.0;
        for k in -10..=10 {
            let x = c + k as f64 * h;
            if (0.0..=1.0).contains(&x) {
                let v = f(x);
                if v > best.0 {
                    best = (v, x);
                }
            }
        }
        half = h;
    }
    best
}

pub fn sym_thresholds(a: f64) -> (f64, f64) {
    ((1.0 - a) / (a * a), (1.0 - a * a * a) / (a * a * a * (1.0 + a)))
}

/// `a` uniform in `(0.01, 0.99)`, `P` log-uniform in `(0.1, 1e4)`.
pub fn random_channel(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let a = rng.gen_range(0.01..0.99);
    let p = 10f64.powf(rng.gen_range(-1.0..4.0));
    (a, p)
}

/// Like [`random_channel`] but with `P >= (1 - a)/a²`, log-uniform over three decades.
pub fn random_channel_above_t1(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let a = rng.gen_range(0.01..0.99);
    let (t1, _) = sym_thresholds(a);
    (a, t1 * 10f64.powf(rng.gen_range(0.0..3.0)))
}
