//! Bracketing bisection for scalar roots.

use crate::error::{Error, Result};

/// Stopping rule for [`bisect`].
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    /// Stop as soon as `|f(x)|` drops below this.
    pub f_abs: f64,
    /// Stop once the bracket is narrower than this.
    pub width: f64,
    pub max_iter: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            f_abs: 1e-12,
            width: 1e-14,
            max_iter: 200,
        }
    }
}

/// Finds a sign change of `f` in `[lo, hi]`.
///
/// Returns the best bracket endpoint (smallest `|f|`) once either tolerance is
/// met. Fails with [`Error::NoSignChange`] when `f(lo)` and `f(hi)` share a
/// strict sign.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: Tolerance) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = f(hi);
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NoSignChange { lo, f_lo, hi, f_hi });
    }
    let mut f_hi = f_hi;
    for _ in 0..tol.max_iter {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.abs() < tol.f_abs {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
        if hi - lo < tol.width {
            break;
        }
    }
    Ok(if f_lo.abs() <= f_hi.abs() { lo } else { hi })
}
