use alloc::vec::Vec;

use crate::channel::{ChannelParams, PowerSplit};
use crate::error::{Error, Result};
use crate::rates::hk_sum_rate;

use super::{RateResult, Scheme};

/// Exhaustive search over `[0, 1]²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGrid {
    /// Points per axis, endpoints included.
    pub steps: usize,
    /// Rounds of 10x zoom around the incumbent.
    pub refine: usize,
}

impl OracleGrid {
    pub fn new(steps: usize, refine: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::Axis {
                min: 0.0,
                max: 1.0,
                steps,
            });
        }
        Ok(Self { steps, refine })
    }
}

impl Default for OracleGrid {
    fn default() -> Self {
        Self {
            steps: 1001,
            refine: 3,
        }
    }
}

struct Best {
    rate: f64,
    l1: f64,
    l2: f64,
}

impl Best {
    /// Keeps the incumbent on ties.
    #[inline]
    fn offer(&mut self, ch: &ChannelParams, l1: f64, l2: f64) {
        let r = hk_sum_rate(ch, PowerSplit::from_raw(l1, l2));
        if r > self.rate {
            *self = Best { rate: r, l1, l2 };
        }
    }

    /// Each round re-centres the window until the incumbent stops moving, so
    /// the search can follow a ridge that is not axis-aligned, then shrinks it.
    fn zoom(&mut self, ch: &ChannelParams, spacing: f64, rounds: usize) {
        const ZOOM_POINTS: usize = 10;
        const MAX_MOVES: usize = 10_000;
        let mut half = spacing;
        for _ in 0..rounds {
            let step = half / ZOOM_POINTS as f64;
            for _ in 0..MAX_MOVES {
                let (c1, c2) = (self.l1, self.l2);
                for i in 0..=2 * ZOOM_POINTS {
                    let l1 = c1 - half + i as f64 * step;
                    if !(0.0..=1.0).contains(&l1) {
                        continue;
                    }
                    for j in 0..=2 * ZOOM_POINTS {
                        let l2 = c2 - half + j as f64 * step;
                        if (0.0..=1.0).contains(&l2) {
                            self.offer(ch, l1, l2);
                        }
                    }
                }
                if (self.l1, self.l2) == (c1, c2) {
                    break;
                }
            }
            half = step;
        }
    }
}

/// Grid local maxima polished by zooming; more than one because the symmetric
/// and one-sided optima can be nearly tied while one of them sits on a kink.
const REFINE_CANDIDATES: usize = 8;

/// Grid maximum of the fixed-split sum rate over both users' splits.
///
/// This makes no use of the symmetric or one-sided structure of the optimum and
/// serves as the reference the structured optimizers are audited against. The
/// best grid local maxima are then refined by `grid.refine` rounds of 10x zoom.
pub fn brute_force_rs(ch: &ChannelParams, grid: OracleGrid) -> Result<RateResult> {
    let grid = OracleGrid::new(grid.steps, grid.refine)?;
    let n = grid.steps - 1;
    let m = grid.steps;
    let at = |i: usize| i as f64 / n as f64;
    let mut values = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            values.push(hk_sum_rate(ch, PowerSplit::from_raw(at(i), at(j))));
        }
    }

    let mut peaks: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let v = values[i * m + j];
            let is_peak = (i.saturating_sub(1)..=(i + 1).min(n))
                .all(|k| (j.saturating_sub(1)..=(j + 1).min(n)).all(|l| values[k * m + l] <= v));
            if is_peak {
                peaks.push((v, i, j));
            }
        }
    }
    // stable: equal values keep lexicographic order
    peaks.sort_by(|x, y| y.0.total_cmp(&x.0));
    peaks.truncate(REFINE_CANDIDATES);

    let mut best = Best {
        rate: f64::NEG_INFINITY,
        l1: 0.0,
        l2: 0.0,
    };
    for &(rate, i, j) in &peaks {
        let mut local = Best {
            rate,
            l1: at(i),
            l2: at(j),
        };
        local.zoom(ch, 1.0 / n as f64, grid.refine);
        if local.rate > best.rate {
            best = local;
        }
    }
    Ok(RateResult::new(best.rate, Scheme::BruteForce).with_split(PowerSplit::from_raw(best.l1, best.l2)))
}
