//! Channel description and power-split parameters.
//!
//! The symmetric two-user channel in standard form has unit direct gains and
//! unit noise, so it is fully described by the cross-link power ratio `a` and
//! the transmit SNR `P`. All quantities here are linear; decibels only appear
//! through [`db_to_linear`] and [`linear_to_db`].

use core::f64::consts::LOG2_E;

use crate::error::{Error, Result};

/// Distance from 0 or 1 within which a split fraction is snapped to the boundary.
pub const SPLIT_SNAP: f64 = 1e-12;

/// `log2(1 + x)` for `x >= 0`, without validation.
#[inline]
pub(crate) fn g(x: f64) -> f64 {
    libm::log1p(x) * LOG2_E
}

/// Gaussian point-to-point capacity `log2(1 + x)` in bits.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::GammaDomain(x));
    }
    Ok(g(x))
}

/// `10 log10(x)`.
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * libm::log10(x)
}

/// Inverse of [`linear_to_db`].
pub fn db_to_linear(db: f64) -> f64 {
    libm::pow(10.0, db / 10.0)
}

/// Weak-interference symmetric channel `(a, P)` in standard form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    a: f64,
    p: f64,
}

impl ChannelParams {
    pub fn new(a: f64, p: f64) -> Result<Self> {
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::Interference(a));
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::Power(p));
        }
        Ok(Self { a, p })
    }

    /// Builds the channel from SNR and INR in dB, so `a = INR / SNR`.
    pub fn from_snr_inr_db(snr_db: f64, inr_db: f64) -> Result<Self> {
        Self::new(db_to_linear(inr_db - snr_db), db_to_linear(snr_db))
    }

    /// Interference coefficient.
    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Transmit power, equal to the SNR.
    #[inline]
    pub fn p(&self) -> f64 {
        self.p
    }

    #[inline]
    pub fn inr(&self) -> f64 {
        self.a * self.p
    }

    /// Same interference coefficient at a different power.
    pub fn with_power(&self, p: f64) -> Result<Self> {
        Self::new(self.a, p)
    }
}

/// Fraction of a user's power carried by its private message.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Fraction(f64);

impl Fraction {
    pub const ZERO: Fraction = Fraction(0.0);
    pub const ONE: Fraction = Fraction(1.0);

    /// Validates `x`, snapping values within [`SPLIT_SNAP`] of 0 or 1 onto the boundary.
    pub fn new(x: f64) -> Result<Self> {
        if !(-SPLIT_SNAP..=1.0 + SPLIT_SNAP).contains(&x) {
            return Err(Error::Fraction(x));
        }
        Ok(Self::snap(x))
    }

    /// Clamps any finite value into `[0, 1]`; used by optimizers whose iterates may
    /// overshoot the box by rounding.
    pub(crate) fn clamped(x: f64) -> Self {
        Self::snap(x.clamp(0.0, 1.0))
    }

    fn snap(x: f64) -> Self {
        if x <= SPLIT_SNAP {
            Fraction(0.0)
        } else if x >= 1.0 - SPLIT_SNAP {
            Fraction(1.0)
        } else {
            Fraction(x)
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Share left for the common message.
    #[inline]
    pub fn complement(self) -> f64 {
        1.0 - self.0
    }
}

/// Private-power fractions `(λ1, λ2)` of the two users.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSplit {
    pub lambda1: Fraction,
    pub lambda2: Fraction,
}

impl PowerSplit {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self> {
        Ok(Self {
            lambda1: Fraction::new(lambda1)?,
            lambda2: Fraction::new(lambda2)?,
        })
    }

    pub fn symmetric(lambda: Fraction) -> Self {
        Self {
            lambda1: lambda,
            lambda2: lambda,
        }
    }

    /// User 1 sends only a common message, user 2 keeps `lambda` private.
    pub fn common_only_first(lambda: Fraction) -> Self {
        Self {
            lambda1: Fraction::ZERO,
            lambda2: lambda,
        }
    }

    pub(crate) fn from_raw(lambda1: f64, lambda2: f64) -> Self {
        Self {
            lambda1: Fraction::clamped(lambda1),
            lambda2: Fraction::clamped(lambda2),
        }
    }

    pub fn swapped(self) -> Self {
        Self {
            lambda1: self.lambda2,
            lambda2: self.lambda1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(0.0).unwrap(), 0.0);
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(3.0).unwrap(), 2.0);
        assert!(matches!(gamma(-1e-300), Err(Error::GammaDomain(_))));
        assert!(gamma(f64::NAN).is_err());
        assert!(gamma(f64::INFINITY).is_err());
    }

    #[test]
    fn gamma_keeps_small_arguments() {
        // log2(1 + 1e-18) would be 0 in the naive form
        let x = 1e-18;
        assert!((gamma(x).unwrap() / (x * LOG2_E) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn channel_rejects_strong_interference() {
        assert!(ChannelParams::new(0.5, 100.0).is_ok());
        for a in [0.0, 1.0, 1.2, -0.1, f64::NAN] {
            assert!(matches!(ChannelParams::new(a, 1.0), Err(Error::Interference(_))));
        }
        for p in [0.0, -1.0, f64::INFINITY, f64::NAN] {
            assert!(matches!(ChannelParams::new(0.5, p), Err(Error::Power(_))));
        }
    }

    #[test]
    fn snr_inr_mapping() {
        let ch = ChannelParams::from_snr_inr_db(20.0, 10.0).unwrap();
        assert!((ch.a() - 0.1).abs() < 1e-15);
        assert!((ch.p() - 100.0).abs() < 1e-12);
        assert!(ChannelParams::from_snr_inr_db(20.0, 20.0).is_err());
    }

    #[test]
    fn fraction_snapping() {
        assert_eq!(Fraction::new(1e-13).unwrap().get(), 0.0);
        assert_eq!(Fraction::new(-1e-13).unwrap().get(), 0.0);
        assert_eq!(Fraction::new(1.0 - 1e-13).unwrap().get(), 1.0);
        assert_eq!(Fraction::new(1.0 + 1e-13).unwrap().get(), 1.0);
        assert_eq!(Fraction::new(0.25).unwrap().get(), 0.25);
        assert!(Fraction::new(1.001).is_err());
        assert!(Fraction::new(-0.001).is_err());
        assert!(Fraction::new(f64::NAN).is_err());
    }

    #[test]
    fn db_round_trip() {
        assert_eq!(db_to_linear(20.0), 100.0);
        for db in [-30.0, -3.0, 0.0, 7.5, 20.0, 40.0] {
            let back = linear_to_db(db_to_linear(db));
            assert!((back - db).abs() <= 1e-12 * db.abs().max(1.0));
        }
    }
}
