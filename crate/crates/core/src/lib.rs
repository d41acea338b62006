//! Optimized Han-Kobayashi sum rates for the two-user symmetric Gaussian
//! interference channel with weak interference (`0 < a < 1`).
//!
//! The crate evaluates the sum rate of a fixed private/common power split and
//! optimizes it under several structures: equal splits at both users (closed
//! form), one user sending only a common message (bisection on a balance
//! condition), orthogonal signalling, the fixed noise-floor split, and two
//! time-sharing schemes. An exhaustive grid search over both splits serves as an
//! independent reference. Region maps classify which scheme wins over the
//! `(a, P)` plane, and the high-SNR offsets locate where the schemes cross.
//!
//! ```
//! use hkrate_core::{classify, rs_rate, ChannelParams, RegionLabel};
//!
//! let ch = ChannelParams::new(0.5, 100.0)?;
//! let best = rs_rate(&ch)?;
//! assert!(best.rate > 7.7);
//! assert_eq!(classify(&ch)?, RegionLabel::AsymSplit);
//! # Ok::<(), hkrate_core::Error>(())
//! ```
//!
//! The crate is `no_std` and needs only `alloc` (for region scans).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod asymptotics;
pub mod bisect;
pub mod channel;
pub mod error;
pub mod optim;
pub mod rates;
pub mod region;

pub use asymptotics::{crossover, delta_offset, offset_convergence, OffsetCurve, OffsetScheme};
pub use channel::{db_to_linear, gamma, linear_to_db, ChannelParams, Fraction, PowerSplit};
pub use error::{Error, Result};
pub use optim::{
    asym_rate, brute_force_rs, etw_rate, orth_rate, rs_rate, sason_rate, sym_rate, ts_rate,
    OracleGrid, RateResult, Scheme, SchemeParams, TimeShareConfig,
};
pub use rates::{common_bounds, hk_sum_rate, omega, phi, psi, CommonRateBounds};
pub use region::{boundary_scan, classify, scan, ts_advantage, GridScan, GridSpec, RegionLabel};
