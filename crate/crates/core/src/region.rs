//! Best-scheme classification over the `(a, P)` plane.

use alloc::vec::Vec;

use crate::channel::{db_to_linear, ChannelParams};
use crate::error::{Error, Result};
use crate::optim::{asym_rate, etw_rate, orth_rate, sason_rate, sym_rate, ts_rate};

/// Winning scheme without time sharing, numbered as in the usual region plots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    /// Equal splits with `λ = 1`: private messages only.
    SymPrivateOnly = 1,
    Orthogonal = 2,
    /// One user sends only a common message.
    AsymSplit = 3,
    /// Equal splits with a nonzero common part.
    SymSplit = 4,
}

impl RegionLabel {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::SymPrivateOnly => "SymPrivateOnly",
            Self::Orthogonal => "Orthogonal",
            Self::AsymSplit => "AsymSplit",
            Self::SymSplit => "SymSplit",
        }
    }
}

/// Rate differences below this are ties.
pub const LABEL_TIE: f64 = 1e-12;

/// Winner among the three no-time-sharing candidates. Ties resolve in the order
/// symmetric, one-sided common, orthogonal.
pub fn label_of(sym: f64, sym_private_only: bool, asym: f64, orth: f64) -> RegionLabel {
    let sym_label = if sym_private_only {
        RegionLabel::SymPrivateOnly
    } else {
        RegionLabel::SymSplit
    };
    let mut best = (sym, sym_label);
    for cand in [(asym, RegionLabel::AsymSplit), (orth, RegionLabel::Orthogonal)] {
        if cand.0 > best.0 + LABEL_TIE {
            best = cand;
        }
    }
    best.1
}

/// Scheme rates at one channel point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointRates {
    pub label: RegionLabel,
    pub sym: f64,
    pub lambda_sym: f64,
    pub asym: f64,
    pub lambda_asym: f64,
    pub orth: f64,
    pub etw: f64,
    /// `(R_TS, R_Sason)` when time sharing was requested.
    pub time_sharing: Option<(f64, f64)>,
}

impl PointRates {
    pub fn evaluate(ch: &ChannelParams, time_sharing: bool) -> Result<Self> {
        let sym = sym_rate(ch);
        let asym = asym_rate(ch)?;
        let orth = orth_rate(ch).rate;
        let lambda_sym = sym.split.map_or(1.0, |s| s.lambda1.get());
        let lambda_asym = asym.split.map_or(1.0, |s| s.lambda2.get());
        let time_sharing = if time_sharing {
            Some((ts_rate(ch)?.rate, sason_rate(ch)?.rate))
        } else {
            None
        };
        Ok(Self {
            label: label_of(sym.rate, lambda_sym == 1.0, asym.rate, orth),
            sym: sym.rate,
            lambda_sym,
            asym: asym.rate,
            lambda_asym,
            orth,
            etw: etw_rate(ch).rate,
            time_sharing,
        })
    }

    /// Best rate without time sharing.
    pub fn no_ts(&self) -> f64 {
        self.sym.max(self.asym).max(self.orth)
    }

    /// Gains `(R_TS - R_noTS, R_Sason - R_noTS)`.
    pub fn ts_gains(&self) -> Option<(f64, f64)> {
        let base = self.no_ts();
        self.time_sharing.map(|(ts, sason)| (ts - base, sason - base))
    }
}

pub fn classify(ch: &ChannelParams) -> Result<RegionLabel> {
    Ok(PointRates::evaluate(ch, false)?.label)
}

/// Gains of the two-slot and four-slot schemes over the best scheme without
/// time sharing.
pub fn ts_advantage(ch: &ChannelParams) -> Result<(f64, f64)> {
    let rates = PointRates::evaluate(ch, true)?;
    Ok(rates.ts_gains().expect("time sharing requested"))
}

/// Label change along the `a` axis at fixed power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boundary {
    pub a: f64,
    pub left: RegionLabel,
    pub right: RegionLabel,
}

/// Default sweep resolution per unit of `a`.
pub const DEFAULT_RESOLUTION: usize = 2000;
const BOUNDARY_TOL: f64 = 1e-6;

/// Every label change along `a ∈ (0, 1)` at power `p`.
///
/// Labels are sampled at `k / resolution`, and each change is bisected to 1e-6.
/// A bracket is assumed to hold a single change.
pub fn boundary_scan(p: f64, resolution: usize) -> Result<Vec<Boundary>> {
    let r = resolution as f64;
    boundary_scan_in(p, 1.0 / r, 1.0 - 1.0 / r, resolution)
}

/// [`boundary_scan`] restricted to `a ∈ [lo, hi]`.
pub fn boundary_scan_in(p: f64, lo: f64, hi: f64, resolution: usize) -> Result<Vec<Boundary>> {
    if resolution < 100 {
        return Err(Error::Resolution(resolution));
    }
    if !(lo > 0.0 && hi < 1.0 && lo < hi) {
        return Err(Error::Axis {
            min: lo,
            max: hi,
            steps: resolution,
        });
    }
    let label_at = |a: f64| ChannelParams::new(a, p).and_then(|ch| classify(&ch));
    let n = libm::ceil((hi - lo) * resolution as f64) as usize;
    let mut out = Vec::new();
    let mut prev_a = lo;
    let mut prev = label_at(lo)?;
    for k in 1..=n {
        let a = lo + (hi - lo) * k as f64 / n as f64;
        let label = label_at(a)?;
        if label != prev {
            let (mut l, mut r) = (prev_a, a);
            while r - l > BOUNDARY_TOL {
                let mid = 0.5 * (l + r);
                if label_at(mid)? == prev {
                    l = mid;
                } else {
                    r = mid;
                }
            }
            out.push(Boundary {
                a: 0.5 * (l + r),
                left: prev,
                right: label,
            });
        }
        prev = label;
        prev_a = a;
    }
    Ok(out)
}

/// Coordinates of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axes {
    /// `x = a` (linear), `y = P` in dB.
    InterferencePower,
    /// `x = SNR` in dB, `y = INR` in dB; `a = INR/SNR`.
    SnrInr,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl AxisRange {
    /// `steps` evenly spaced values from `min` to `max`; a single step yields `min`.
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if steps == 0 || !min.is_finite() || !max.is_finite() || min > max {
            return Err(Error::Axis { min, max, steps });
        }
        Ok(Self { min, max, steps })
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.value(i))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub axes: Axes,
    pub x: AxisRange,
    pub y: AxisRange,
    /// Also compute the two time-sharing rates per point (slow).
    pub time_sharing: bool,
}

impl GridSpec {
    /// Grid coordinates in output order: `y` outer, `x` inner.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.y.values().flat_map(move |y| self.x.values().map(move |x| (x, y)))
    }

    /// Linear `(a, P)` of a grid point.
    pub fn channel_coords(&self, x: f64, y: f64) -> (f64, f64) {
        match self.axes {
            Axes::InterferencePower => (x, db_to_linear(y)),
            Axes::SnrInr => (db_to_linear(y - x), db_to_linear(x)),
        }
    }

    pub fn row(&self, x: f64, y: f64) -> Result<GridRow> {
        let (a, p) = self.channel_coords(x, y);
        let rates = match ChannelParams::new(a, p) {
            Ok(ch) => Some(PointRates::evaluate(&ch, self.time_sharing)?),
            Err(Error::Interference(_)) | Err(Error::Power(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(GridRow { x, y, a, p, rates })
    }
}

/// One grid point; `rates` is `None` outside `0 < a < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRow {
    pub x: f64,
    pub y: f64,
    pub a: f64,
    pub p: f64,
    pub rates: Option<PointRates>,
}

impl GridRow {
    pub fn label(&self) -> Option<RegionLabel> {
        self.rates.map(|r| r.label)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridScan {
    pub spec: GridSpec,
    pub rows: Vec<GridRow>,
}

pub fn scan(spec: &GridSpec) -> Result<GridScan> {
    let rows = spec
        .points()
        .map(|(x, y)| spec.row(x, y))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridScan { spec: *spec, rows })
}
