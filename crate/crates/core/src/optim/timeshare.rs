//! Time-sharing schemes.
//!
//! Two-slot scheme: two slots of equal length; in slot 1 user `i` transmits at
//! `α_i P` with split `λ_i`, slot 2 mirrors the roles, so both slots carry the
//! same sum rate and the average power stays `P` when `α1 + α2 = 2`. Unequal
//! slot powers void the own-vs-cross dominance, so all three common-message
//! bounds enter the minimum.
//!
//! Four-slot scheme: two slots of length `β` run rate splitting at power `2βP`,
//! the remaining two slots give each user the channel alone at `2(1 + 2β)P`.

use crate::channel::{g, ChannelParams, Fraction, PowerSplit};
use crate::error::{Error, Result};
use crate::rates::Slot;

use super::asym::asym_rate;
use super::baseline::rs_rate;
use super::sym::sym_rate;
use super::{RateResult, Scheme, SchemeParams};

/// Slot-1 parameters of the two-slot scheme (slot 2 mirrors users).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeShareConfig {
    /// Power scale of user 1 in slot 1, in `[0, 2]`.
    pub alpha1: f64,
    pub split: PowerSplit,
}

impl TimeShareConfig {
    pub fn new(alpha1: f64, split: PowerSplit) -> Result<Self> {
        if !(0.0..=2.0).contains(&alpha1) {
            return Err(Error::Axis {
                min: 0.0,
                max: 2.0,
                steps: 0,
            });
        }
        Ok(Self { alpha1, split })
    }

    /// Power scale of user 2 in slot 1.
    pub fn alpha2(&self) -> f64 {
        2.0 - self.alpha1
    }
}

#[inline]
fn ts_value(a: f64, p: f64, alpha1: f64, l1: f64, l2: f64) -> f64 {
    let s = Slot::new(
        a,
        alpha1 * p,
        (2.0 - alpha1) * p,
        Fraction::clamped(l1),
        Fraction::clamped(l2),
    );
    s.private_sum() + s.cross().min(s.joint()).min(s.own())
}

/// Sum rate of a two-slot configuration.
pub fn ts_objective(ch: &ChannelParams, cfg: &TimeShareConfig) -> f64 {
    ts_value(ch.a(), ch.p(), cfg.alpha1, cfg.split.lambda1.get(), cfg.split.lambda2.get())
}

#[derive(Clone, Copy)]
struct Point {
    rate: f64,
    alpha1: f64,
    l1: f64,
    l2: f64,
}

const COARSE_STEP: f64 = 0.01;
const REFINE_ROUNDS: usize = 3;

fn refine(a: f64, p: f64, start: Point) -> Point {
    const HALF_POINTS: i32 = 10;
    let mut best = start;
    let mut half = COARSE_STEP;
    for _ in 0..REFINE_ROUNDS {
        let c = best;
        let step = half / HALF_POINTS as f64;
        for i in -HALF_POINTS..=HALF_POINTS {
            let alpha1 = c.alpha1 + i as f64 * step;
            if !(0.0..=2.0).contains(&alpha1) {
                continue;
            }
            for j in -HALF_POINTS..=HALF_POINTS {
                let l1 = c.l1 + j as f64 * step;
                if !(0.0..=1.0).contains(&l1) {
                    continue;
                }
                for k in -HALF_POINTS..=HALF_POINTS {
                    let l2 = c.l2 + k as f64 * step;
                    if !(0.0..=1.0).contains(&l2) {
                        continue;
                    }
                    let rate = ts_value(a, p, alpha1, l1, l2);
                    if rate > best.rate {
                        best = Point { rate, alpha1, l1, l2 };
                    }
                }
            }
        }
        half = step;
    }
    best
}

/// Best two-slot sum rate over `α1 ∈ [0, 2]` and both splits.
///
/// Coarse grid (step 0.01 on every axis) followed by three rounds of 10x local
/// zoom. The zoom also starts from the orthogonal, symmetric and one-sided
/// common optima, which are feasible two-slot points, so the result never
/// falls below them.
pub fn ts_rate(ch: &ChannelParams) -> Result<RateResult> {
    let (a, p) = (ch.a(), ch.p());
    let n_alpha = libm::round(2.0 / COARSE_STEP) as usize;
    let n_lambda = libm::round(1.0 / COARSE_STEP) as usize;

    let mut coarse = Point {
        rate: f64::NEG_INFINITY,
        alpha1: 0.0,
        l1: 0.0,
        l2: 0.0,
    };
    for i in 0..=n_alpha {
        let alpha1 = 2.0 * i as f64 / n_alpha as f64;
        for j in 0..=n_lambda {
            let l1 = j as f64 / n_lambda as f64;
            for k in 0..=n_lambda {
                let l2 = k as f64 / n_lambda as f64;
                let rate = ts_value(a, p, alpha1, l1, l2);
                if rate > coarse.rate {
                    coarse = Point { rate, alpha1, l1, l2 };
                }
            }
        }
    }

    let seed = |alpha1: f64, split: PowerSplit| {
        let (l1, l2) = (split.lambda1.get(), split.lambda2.get());
        Point {
            rate: ts_value(a, p, alpha1, l1, l2),
            alpha1,
            l1,
            l2,
        }
    };
    let sym = sym_rate(ch).split.expect("symmetric optimum carries its split");
    let asym = asym_rate(ch)?.split.expect("one-sided optimum carries its split");
    let starts = [
        coarse,
        seed(0.0, PowerSplit::symmetric(Fraction::ONE)),
        seed(1.0, sym),
        seed(1.0, asym),
    ];

    let mut best = starts[0];
    for start in starts {
        let r = refine(a, p, start);
        if r.rate > best.rate {
            best = r;
        }
    }
    let cfg = TimeShareConfig {
        alpha1: best.alpha1,
        split: PowerSplit::from_raw(best.l1, best.l2),
    };
    Ok(RateResult::new(best.rate, Scheme::Ts)
        .with_split(cfg.split)
        .with_params(SchemeParams::TwoSlot(cfg)))
}

fn check_beta(beta: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&beta) {
        return Err(Error::Fraction(beta));
    }
    Ok(())
}

/// `2β R_RS(a, 2βP) + (1 - 2β) log2(1 + 2(1 + 2β)P)` for `β ∈ [0, 1/2]`.
pub fn sason_objective(ch: &ChannelParams, beta: f64) -> Result<f64> {
    Ok(sason_term(ch, beta)?.0)
}

fn sason_term(ch: &ChannelParams, beta: f64) -> Result<(f64, Option<RateResult>)> {
    check_beta(beta)?;
    let p = ch.p();
    let single_user = (1.0 - 2.0 * beta) * g(2.0 * (1.0 + 2.0 * beta) * p);
    if beta == 0.0 {
        return Ok((single_user, None));
    }
    let inner = rs_rate(&ch.with_power(2.0 * beta * p)?)?;
    Ok((2.0 * beta * inner.rate + single_user, Some(inner)))
}

/// Best four-slot sum rate over `β`.
///
/// A scan at step 0.005 brackets the maximizer; golden-section search then
/// polishes inside the neighbouring cells. The objective may be non-concave
/// where the inner optimum switches schemes, hence the scan.
pub fn sason_rate(ch: &ChannelParams) -> Result<RateResult> {
    const CELLS: usize = 100;
    let step = 0.5 / CELLS as f64;

    let mut best_beta = 0.0;
    let mut best = sason_term(ch, 0.0)?;
    for k in 1..=CELLS {
        let beta = k as f64 / (2 * CELLS) as f64;
        let t = sason_term(ch, beta)?;
        if t.0 > best.0 {
            best = t;
            best_beta = beta;
        }
    }

    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut lo = (best_beta - step).max(0.0);
    let mut hi = (best_beta + step).min(0.5);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = sason_objective(ch, x1)?;
    let mut f2 = sason_objective(ch, x2)?;
    for _ in 0..60 {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = sason_objective(ch, x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = sason_objective(ch, x2)?;
        }
    }
    let polished = if f1 >= f2 { x1 } else { x2 };
    let t = sason_term(ch, polished)?;
    if t.0 > best.0 {
        best = t;
        best_beta = polished;
    }

    let (rate, inner) = best;
    let inner_scheme = inner.and_then(|r| match r.params {
        Some(SchemeParams::Winner(s)) => Some(s),
        _ => None,
    });
    let mut result = RateResult::new(rate, Scheme::Sason).with_params(SchemeParams::FourSlot {
        beta: best_beta,
        inner: inner_scheme,
    });
    result.split = inner.and_then(|r| r.split);
    Ok(result)
}
