use crate::channel::{g, ChannelParams, Fraction, PowerSplit};
use crate::rates::psi;

use super::{RateResult, Scheme};

/// Which constraint shapes the symmetric optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymRegime {
    /// `P <= t1`: private messages only, interference treated as noise.
    PrivateOnly,
    /// `t1 < P <= t2`: optimum at the crossing of Ψ1 and Ψ2.
    Intersection,
    /// `P > t2`: optimum at the stationary point of Ψ2.
    Interior,
}

/// Power thresholds `(t1, t2) = ((1 - a)/a², (1 - a³)/(a³(1 + a)))`.
pub fn sym_thresholds(a: f64) -> (f64, f64) {
    let a2 = a * a;
    let a3 = a2 * a;
    ((1.0 - a) / a2, (1.0 - a3) / (a3 * (1.0 + a)))
}

pub fn sym_regime(ch: &ChannelParams) -> SymRegime {
    let (t1, t2) = sym_thresholds(ch.a());
    let p = ch.p();
    if p <= t1 {
        SymRegime::PrivateOnly
    } else if p <= t2 {
        SymRegime::Intersection
    } else {
        SymRegime::Interior
    }
}

/// Optimal common split `λ*` for `λ1 = λ2`.
pub fn sym_split(ch: &ChannelParams) -> Fraction {
    let (a, p) = (ch.a(), ch.p());
    let lambda = match sym_regime(ch) {
        SymRegime::PrivateOnly => 1.0,
        SymRegime::Intersection => (a * a * p + a - 1.0) / p,
        SymRegime::Interior => (1.0 - a) / ((1.0 + a) * a * p),
    };
    Fraction::clamped(lambda)
}

/// Three-case closed form of the best symmetric sum rate.
pub fn sym_closed_form(ch: &ChannelParams) -> f64 {
    let (a, p) = (ch.a(), ch.p());
    match sym_regime(ch) {
        SymRegime::PrivateOnly => 2.0 * g(p / (1.0 + a * p)),
        SymRegime::Intersection => {
            // u = λ*P
            let u = a * a * p + a - 1.0;
            2.0 * g((u * (1.0 - a) + a * p) / (1.0 + a * u))
        }
        SymRegime::Interior => {
            g((1.0 - a) / (2.0 * a)) + g(((1.0 + a) * (1.0 + a) * p - (1.0 - a)) / 2.0)
        }
    }
}

/// Best sum rate with equal splits, evaluated as `min(Ψ1, Ψ2)` at `λ*`.
pub fn sym_rate(ch: &ChannelParams) -> RateResult {
    let lambda = sym_split(ch);
    let (psi1, psi2) = psi(ch, lambda);
    RateResult::new(psi1.min(psi2), Scheme::Sym).with_split(PowerSplit::symmetric(lambda))
}
