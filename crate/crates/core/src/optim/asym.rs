use crate::bisect::{bisect, Tolerance};
use crate::channel::{g, ChannelParams, Fraction, PowerSplit};
use crate::error::Result;
use crate::rates::omega;

use super::sym::sym_thresholds;
use super::{RateResult, Scheme};

/// Sum rate with user 1 common-only and user 2 keeping `lambda` private, in the
/// product form `log2((1 + λP + aP)(1 + aP) / (1 + aλP))`. Equals Ω1.
pub fn asym_closed_rate(ch: &ChannelParams, lambda: Fraction) -> f64 {
    let (a, p) = (ch.a(), ch.p());
    let q = lambda.get() * p;
    g(q + a * p) + g(a * p) - g(a * q)
}

/// Relative residual of the balance condition
/// `sqrt((1 + λP)/(1 + aλP)) (1 + P + aP) = (1 + λP + aP)(1 + aP)/(1 + aλP)`.
pub fn asym_residual(ch: &ChannelParams, lambda: Fraction) -> f64 {
    let (a, p) = (ch.a(), ch.p());
    let q = lambda.get() * p;
    let lhs = libm::sqrt((1.0 + q) / (1.0 + a * q)) * (1.0 + p + a * p);
    let rhs = (1.0 + q + a * p) * (1.0 + a * p) / (1.0 + a * q);
    (lhs - rhs) / rhs
}

/// Private fraction of the non-common-only user.
///
/// Above `P = (1 - a)/a²`, Ω1 is non-increasing and Ω2 increasing in λ, so the
/// max-min sits at their crossing, located by bisection. Below it both grow and
/// the optimum is λ = 1.
pub fn asym_split(ch: &ChannelParams) -> Result<Fraction> {
    let (t1, _) = sym_thresholds(ch.a());
    if ch.p() < t1 {
        return Ok(Fraction::ONE);
    }
    let gap = |l: f64| {
        let (o1, o2) = omega(ch, Fraction::clamped(l));
        o1 - o2
    };
    // At P = t1 the gap at λ = 0 is zero up to rounding; Ω1 is then the
    // binding curve everywhere and is maximal at λ = 0.
    if gap(0.0) <= 0.0 {
        return Ok(Fraction::ZERO);
    }
    let root = bisect(gap, 0.0, 1.0, Tolerance::default())?;
    Ok(Fraction::clamped(root))
}

pub fn asym_rate(ch: &ChannelParams) -> Result<RateResult> {
    let lambda = asym_split(ch)?;
    let split = PowerSplit::common_only_first(lambda);
    Ok(RateResult::new(asym_closed_rate(ch, lambda), Scheme::Asym).with_split(split))
}
