//! Command-line front end of `hkrate-core`: sweeps, region maps, high-SNR
//! offsets and randomized verification, with CSV, JSON and SVG output.

pub mod cli;
pub mod format;
pub mod svg;
pub mod verify;

use hkrate_core::region::{AxisRange, PointRates};
use hkrate_core::{ChannelParams, GridScan, GridSpec, Result};
use rayon::prelude::*;

/// [`hkrate_core::scan`] evaluated in parallel; rows keep grid order.
pub fn par_scan(spec: &GridSpec) -> Result<GridScan> {
    let points: Vec<(f64, f64)> = spec.points().collect();
    let rows = points
        .par_iter()
        .map(|&(x, y)| spec.row(x, y))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridScan { spec: *spec, rows })
}

/// Rates along the `a` axis at fixed power, in axis order.
pub fn sweep(p: f64, a: &AxisRange, time_sharing: bool) -> Result<Vec<(f64, PointRates)>> {
    let values: Vec<f64> = a.values().collect();
    values
        .par_iter()
        .map(|&a| Ok((a, PointRates::evaluate(&ChannelParams::new(a, p)?, time_sharing)?)))
        .collect()
}
