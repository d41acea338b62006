//! Optimized sum rates of the signalling schemes.

mod asym;
mod baseline;
mod brute;
mod sym;
mod timeshare;

pub use asym::{asym_closed_rate, asym_rate, asym_residual, asym_split};
pub use baseline::{etw_rate, orth_rate, rs_rate, RS_TIE};
pub use brute::{brute_force_rs, OracleGrid};
pub use sym::{sym_closed_form, sym_rate, sym_regime, sym_split, sym_thresholds, SymRegime};
pub use timeshare::{sason_objective, sason_rate, ts_objective, ts_rate, TimeShareConfig};

use crate::channel::PowerSplit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Equal splits at both users.
    Sym,
    /// One user sends only a common message.
    Asym,
    /// TDMA/FDMA.
    Orth,
    /// Private power at the noise floor of the unintended receiver.
    Etw,
    /// Best of `Sym` and `Asym`.
    Rs,
    /// Two equal slots with mirrored powers and splits.
    Ts,
    /// Four-slot scheme mixing a rate-splitting phase with single-user slots.
    Sason,
    /// Exhaustive search over the split square.
    BruteForce,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Sym => "Sym",
            Scheme::Asym => "Asym",
            Scheme::Orth => "Orth",
            Scheme::Etw => "ETW",
            Scheme::Rs => "RS",
            Scheme::Ts => "TS",
            Scheme::Sason => "Sason",
            Scheme::BruteForce => "BruteForce",
        }
    }
}

/// Scheme parameters beyond the power split.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SchemeParams {
    /// Which candidate won a best-of comparison.
    Winner(Scheme),
    TwoSlot(TimeShareConfig),
    /// Length `β` of each rate-splitting slot and the scheme winning inside
    /// them (absent at `β = 0`).
    FourSlot { beta: f64, inner: Option<Scheme> },
}

/// An achievable sum rate and the parameters achieving it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateResult {
    /// Bits per channel use.
    pub rate: f64,
    pub scheme: Scheme,
    pub split: Option<PowerSplit>,
    pub params: Option<SchemeParams>,
    /// The scheme's defining split was infeasible and got clamped into `[0, 1]`.
    pub clamped: bool,
}

impl RateResult {
    pub(crate) fn new(rate: f64, scheme: Scheme) -> Self {
        Self {
            rate,
            scheme,
            split: None,
            params: None,
            clamped: false,
        }
    }

    pub(crate) fn with_split(mut self, split: PowerSplit) -> Self {
        self.split = Some(split);
        self
    }

    pub(crate) fn with_params(mut self, params: SchemeParams) -> Self {
        self.params = Some(params);
        self
    }
}
