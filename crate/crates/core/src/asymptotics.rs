//! High-SNR sum-rate offsets `ΔR(a) = lim (R - log2 P)` as `P → ∞` at fixed `a`.

use alloc::vec::Vec;

use crate::bisect::{bisect, Tolerance};
use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::optim::{asym_rate, etw_rate, orth_rate, sym_rate};

/// Schemes with a closed-form offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OffsetScheme {
    Sym,
    Asym,
    Etw,
    Orth,
}

impl OffsetScheme {
    pub const ALL: [OffsetScheme; 4] = [Self::Sym, Self::Asym, Self::Etw, Self::Orth];

    pub fn name(self) -> &'static str {
        match self {
            Self::Sym => "Sym",
            Self::Asym => "Asym",
            Self::Etw => "ETW",
            Self::Orth => "Orth",
        }
    }
}

/// Sampled offset curve of one scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetCurve {
    pub scheme: OffsetScheme,
    /// `(a, ΔR)` pairs.
    pub values: Vec<(f64, f64)>,
}

/// Search interval for crossovers.
pub const CROSSOVER_BRACKET: (f64, f64) = (1e-4, 1.0 - 1e-4);

pub fn delta_offset(scheme: OffsetScheme, a: f64) -> Result<f64> {
    if scheme == OffsetScheme::Orth {
        return Ok(1.0);
    }
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Interference(a));
    }
    let v = match scheme {
        OffsetScheme::Sym => (1.0 + a) * (1.0 + a) * (1.0 + a) / (4.0 * a),
        OffsetScheme::Asym => (1.0 + a) / libm::sqrt(a),
        OffsetScheme::Etw => (2.0 * a + 1.0) * (a + 1.0) / (4.0 * a),
        OffsetScheme::Orth => unreachable!(),
    };
    Ok(libm::log2(v))
}

pub fn offset_curve(scheme: OffsetScheme, a_values: &[f64]) -> Result<OffsetCurve> {
    let values = a_values
        .iter()
        .map(|&a| delta_offset(scheme, a).map(|d| (a, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(OffsetCurve { scheme, values })
}

/// The `a` at which two offset curves meet, by bisection on their difference
/// over [`CROSSOVER_BRACKET`].
pub fn crossover(first: OffsetScheme, second: OffsetScheme) -> Result<f64> {
    let diff = |a: f64| {
        delta_offset(first, a).unwrap_or(f64::NAN) - delta_offset(second, a).unwrap_or(f64::NAN)
    };
    let tol = Tolerance {
        f_abs: 1e-12,
        width: 1e-14,
        max_iter: 200,
    };
    let (lo, hi) = CROSSOVER_BRACKET;
    bisect(diff, lo, hi, tol).map_err(|_| Error::NoCrossover)
}

/// Symmetric split approached at high SNR, `(1 - a)/((1 + a) a P)`.
pub fn sym_split_asymptote(a: f64, p: f64) -> f64 {
    (1.0 - a) / ((1.0 + a) * a * p)
}

/// Limit of the one-sided common optimum's split, `a^{3/2}/(1 + a - a^{1/2})`.
pub fn asym_split_asymptote(a: f64) -> f64 {
    let s = libm::sqrt(a);
    a * s / (1.0 + a - s)
}

/// Finite-power offsets `R(P) - log2 P` of the optimized scheme for each `P`.
pub fn offset_convergence(scheme: OffsetScheme, a: f64, powers: &[f64]) -> Result<Vec<(f64, f64)>> {
    powers
        .iter()
        .map(|&p| {
            let ch = ChannelParams::new(a, p)?;
            let r = match scheme {
                OffsetScheme::Sym => sym_rate(&ch).rate,
                OffsetScheme::Asym => asym_rate(&ch)?.rate,
                OffsetScheme::Etw => etw_rate(&ch).rate,
                OffsetScheme::Orth => orth_rate(&ch).rate,
            };
            Ok((p, r - libm::log2(p)))
        })
        .collect()
}
