//! Randomized self-checks of the optimizers against independent references.
//!
//! Every suite draws channels from a seeded ChaCha8 stream, so a report is
//! reproducible from `(suite, samples, seed, oracle_steps)`.

use std::fmt;

use hkrate_core::asymptotics::{asym_split_asymptote, sym_split_asymptote};
use hkrate_core::optim::{asym_residual, sym_thresholds};
use hkrate_core::{
    asym_rate, brute_force_rs, common_bounds, delta_offset, etw_rate, hk_sum_rate, omega, orth_rate, rs_rate,
    sym_rate, ChannelParams, Fraction, OffsetScheme, OracleGrid, PowerSplit,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const DEFAULT_SEED: u64 = 2011;

/// Spacing and zoom rounds of the one-dimensional split oracles.
const ORACLE_STEP: f64 = 1e-5;
const ORACLE_ROUNDS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Dominance,
    Monotonicity,
    SymOracle,
    AsymResidual,
    Conjecture,
    Continuity,
    Etw,
    Asymptote,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Dominance,
        Suite::Monotonicity,
        Suite::SymOracle,
        Suite::AsymResidual,
        Suite::Conjecture,
        Suite::Continuity,
        Suite::Etw,
        Suite::Asymptote,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dominance => "dominance",
            Suite::Monotonicity => "monotonicity",
            Suite::SymOracle => "sym-oracle",
            Suite::AsymResidual => "asym-residual",
            Suite::Conjecture => "conjecture",
            Suite::Continuity => "continuity",
            Suite::Etw => "etw",
            Suite::Asymptote => "asymptote",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Sample count when none is given; the expensive oracles get fewer.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Dominance | Suite::Monotonicity => 10_000,
            Suite::Etw => 2000,
            Suite::SymOracle | Suite::AsymResidual | Suite::Continuity => 200,
            Suite::Asymptote => 100,
            Suite::Conjecture => 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// `None` uses [`Suite::default_samples`].
    pub samples: Option<usize>,
    pub seed: u64,
    /// Points per axis of the two-dimensional brute-force grid.
    pub oracle_steps: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: None,
            seed: DEFAULT_SEED,
            oracle_steps: OracleGrid::default().steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub samples: usize,
    /// Largest residual relative to its tolerance, with that tolerance.
    pub worst: f64,
    pub tolerance: f64,
    pub worst_at: Option<String>,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {}: {} samples, worst residual {:.3e} (tolerance {:.0e})",
            self.suite.name(),
            self.samples,
            self.worst,
            self.tolerance
        )?;
        if let Some(at) = &self.worst_at {
            write!(f, " at {at}")?;
        }
        if let Some(fail) = &self.first_failure {
            write!(f, "; first failure: {fail}")?;
        }
        Ok(())
    }
}

struct Tracker {
    suite: Suite,
    samples: usize,
    worst: f64,
    tolerance: f64,
    ratio: f64,
    worst_at: Option<String>,
    first_failure: Option<String>,
}

impl Tracker {
    fn new(suite: Suite, tolerance: f64) -> Self {
        Self {
            suite,
            samples: 0,
            worst: 0.0,
            tolerance,
            ratio: 0.0,
            worst_at: None,
            first_failure: None,
        }
    }

    fn sample(&mut self) {
        self.samples += 1;
    }

    /// Records a residual that must not exceed `tol`; NaN counts as a failure.
    fn check(&mut self, residual: f64, tol: f64, tuple: impl Fn() -> String) {
        let ratio = residual / tol;
        if ratio > self.ratio || residual.is_nan() {
            self.ratio = if residual.is_nan() { f64::INFINITY } else { ratio };
            self.worst = residual;
            self.tolerance = tol;
            self.worst_at = Some(tuple());
        }
        let within = residual <= tol;
        if !within && self.first_failure.is_none() {
            self.first_failure = Some(format!("{} (residual {residual:.3e} > {tol:.0e})", tuple()));
        }
    }

    fn fail(&mut self, what: String) {
        if self.first_failure.is_none() {
            self.first_failure = Some(what);
        }
    }

    fn report(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            samples: self.samples,
            worst: self.worst,
            tolerance: self.tolerance,
            worst_at: self.worst_at,
            first_failure: self.first_failure,
        }
    }
}

fn channel(a: f64, p: f64) -> ChannelParams {
    ChannelParams::new(a, p).expect("sampled inside the domain")
}

/// `a` uniform on `(0.01, 0.99)`, `P` log-uniform on `(0.1, 1e4)`.
fn draw_channel(rng: &mut ChaCha8Rng) -> (f64, f64) {
    (rng.gen_range(0.01..0.99), 10f64.powf(rng.gen_range(-1.0..4.0)))
}

/// Like [`draw_channel`] with `P` restricted to three decades above `(1 - a)/a²`.
fn draw_channel_above_t1(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let a = rng.gen_range(0.01..0.99);
    let (t1, _) = sym_thresholds(a);
    (a, t1 * 10f64.powf(rng.gen_range(0.0..3.0)))
}

/// Grid maximum of `f` on `[0, 1]` refined by 10x zooms.
fn grid_max_1d(f: impl Fn(f64) -> f64) -> f64 {
    let n = (1.0 / ORACLE_STEP).round() as usize;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for i in 0..=n {
        let x = i as f64 / n as f64;
        let v = f(x);
        if v > best.0 {
            best = (v, x);
        }
    }
    let mut half = 1.0 / n as f64;
    for _ in 0..ORACLE_ROUNDS {
        let c = best.1;
        let h = half / 10.0;
        for k in -10..=10 {
            let x = c + k as f64 * h;
            if (0.0..=1.0).contains(&x) {
                let v = f(x);
                if v > best.0 {
                    best = (v, x);
                }
            }
        }
        half = h;
    }
    best.0
}

fn dominance(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut t = Tracker::new(Suite::Dominance, 1e-12);
    for _ in 0..n {
        let (a, p) = draw_channel(rng);
        let (l1, l2) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
        let b = common_bounds(&channel(a, p), PowerSplit::new(l1, l2).expect("unit interval"));
        t.sample();
        t.check(b.cross - b.own, 1e-12, || format!("a={a}, P={p}, λ=({l1}, {l2})"));
    }
    t.report()
}

fn monotonicity(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    const H: f64 = 1e-6;
    const NOISE: f64 = 1e-12;
    let mut t = Tracker::new(Suite::Monotonicity, NOISE);
    for _ in 0..n {
        let (a, p) = draw_channel_above_t1(rng);
        let c = channel(a, p);
        let l = rng.gen_range(0.0..1.0 - H);
        let (o1, o2) = omega(&c, Fraction::new(l).expect("unit interval"));
        let (n1, n2) = omega(&c, Fraction::new(l + H).expect("unit interval"));
        t.sample();
        t.check((n1 - o1).max(o2 - n2), NOISE, || format!("a={a}, P={p}, λ={l}"));
    }
    t.report()
}

fn sym_oracle(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut t = Tracker::new(Suite::SymOracle, 1e-6);
    for _ in 0..n {
        let (a, p) = draw_channel(rng);
        let c = channel(a, p);
        let r = sym_rate(&c).rate;
        let oracle = grid_max_1d(|l| hk_sum_rate(&c, PowerSplit::symmetric(Fraction::new(l).expect("unit interval"))));
        t.sample();
        t.check((r - oracle).abs(), 1e-6, || format!("a={a}, P={p}: r_sym {r} vs oracle {oracle}"));
    }
    t.report()
}

fn asym(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut t = Tracker::new(Suite::AsymResidual, 1e-9);
    for _ in 0..n {
        let (a, p) = draw_channel_above_t1(rng);
        let c = channel(a, p);
        t.sample();
        let r = match asym_rate(&c) {
            Ok(r) => r,
            Err(e) => {
                t.fail(format!("a={a}, P={p}: {e}"));
                continue;
            }
        };
        let l = r.split.map_or(Fraction::ONE, |s| s.lambda2);
        if l.get() > 0.0 {
            let (o1, o2) = omega(&c, l);
            t.check((o1 - o2).abs(), 1e-9, || format!("a={a}, P={p}, λ={}", l.get()));
            t.check(asym_residual(&c, l).abs(), 1e-9, || format!("a={a}, P={p}, λ={}", l.get()));
        }
        let oracle = grid_max_1d(|x| hk_sum_rate(&c, PowerSplit::common_only_first(Fraction::new(x).expect("unit interval"))));
        t.check((r.rate - oracle).abs(), 1e-6, || format!("a={a}, P={p}: r_asym {} vs oracle {oracle}", r.rate));
    }
    t.report()
}

fn conjecture(n: usize, oracle_steps: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut t = Tracker::new(Suite::Conjecture, 1e-3);
    let grid = match OracleGrid::new(oracle_steps, OracleGrid::default().refine) {
        Ok(g) => g,
        Err(e) => {
            t.fail(e.to_string());
            return t.report();
        }
    };
    let points: Vec<(f64, f64)> = (0..n).map(|_| draw_channel(rng)).collect();
    let results: Vec<_> = points
        .par_iter()
        .map(|&(a, p)| {
            let c = channel(a, p);
            let rs = rs_rate(&c)?.rate;
            let brute = brute_force_rs(&c, grid)?.rate;
            Ok((a, p, rs, brute))
        })
        .collect();
    for r in results {
        t.sample();
        match r {
            Ok((a, p, rs, brute)) => {
                t.check((brute - rs).abs(), 1e-3, || format!("a={a}, P={p}: brute {brute} vs r_rs {rs}"))
            }
            Err(e) => t.fail(hkrate_core::Error::to_string(&e)),
        }
    }
    t.report()
}

fn continuity(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    const REL: f64 = 1e-9;
    let mut t = Tracker::new(Suite::Continuity, 1e-6);
    for _ in 0..n {
        let a = rng.gen_range(0.01..0.99);
        let (t1, t2) = sym_thresholds(a);
        t.sample();
        for (name, at) in [("t1", t1), ("t2", t2)] {
            let lo = sym_rate(&channel(a, at * (1.0 - REL)));
            let hi = sym_rate(&channel(a, at * (1.0 + REL)));
            t.check((lo.rate - hi.rate).abs(), 1e-6, || format!("a={a}, rate at {name}={at}"));
            if name == "t2" {
                let split = |r: &hkrate_core::RateResult| r.split.map_or(1.0, |s| s.lambda1.get());
                let (ll, lh) = (split(&lo), split(&hi));
                t.check((ll - lh).abs(), 1e-6, || format!("a={a}, split at t2={at}: {ll} vs {lh}"));
            }
        }
    }
    t.report()
}

fn etw(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut t = Tracker::new(Suite::Etw, 1e-9);
    while t.samples < n {
        let (a, p) = draw_channel(rng);
        if a * p < 1.0 {
            continue;
        }
        let c = channel(a, p);
        let r = etw_rate(&c).rate;
        let l = Fraction::new(1.0 / (a * p)).expect("aP >= 1");
        let direct = hk_sum_rate(&c, PowerSplit::symmetric(l));
        let sym = sym_rate(&c).rate;
        t.sample();
        t.check((r - direct).abs(), 1e-9, || format!("a={a}, P={p}: r_etw {r} vs fixed split {direct}"));
        t.check(r - sym, 1e-9, || format!("a={a}, P={p}: r_etw {r} above r_sym {sym}"));
    }
    t.report()
}

fn asymptote(n: usize, rng: &mut ChaCha8Rng) -> SuiteReport {
    const P: f64 = 1e8;
    let mut t = Tracker::new(Suite::Asymptote, 1e-2);
    for _ in 0..n {
        let a = rng.gen_range(0.05..0.95);
        let c = channel(a, P);
        t.sample();
        let asym = match asym_rate(&c) {
            Ok(r) => r,
            Err(e) => {
                t.fail(format!("a={a}: {e}"));
                continue;
            }
        };
        let sym = sym_rate(&c);
        for (scheme, r) in [
            (OffsetScheme::Sym, sym.rate),
            (OffsetScheme::Asym, asym.rate),
            (OffsetScheme::Etw, etw_rate(&c).rate),
            (OffsetScheme::Orth, orth_rate(&c).rate),
        ] {
            let d = delta_offset(scheme, a).expect("a inside (0, 1)");
            t.check((r - P.log2() - d).abs(), 1e-2, || format!("{} offset at a={a}", scheme.name()));
        }
        let l = asym.split.map_or(1.0, |s| s.lambda2.get());
        t.check((l - asym_split_asymptote(a)).abs(), 1e-3, || format!("asym split at a={a}: {l}"));
        let ls = sym.split.map_or(1.0, |s| s.lambda1.get());
        t.check((ls - sym_split_asymptote(a, P)).abs(), 1e-15, || format!("sym split at a={a}: {ls}"));
    }
    t.report()
}

/// Runs one suite; each suite gets its own stream derived from `seed`.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let n = cfg.samples.unwrap_or_else(|| suite.default_samples());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(suite as u64);
    match suite {
        Suite::Dominance => dominance(n, &mut rng),
        Suite::Monotonicity => monotonicity(n, &mut rng),
        Suite::SymOracle => sym_oracle(n, &mut rng),
        Suite::AsymResidual => asym(n, &mut rng),
        Suite::Conjecture => conjecture(n, cfg.oracle_steps, &mut rng),
        Suite::Continuity => continuity(n, &mut rng),
        Suite::Etw => etw(n, &mut rng),
        Suite::Asymptote => asymptote(n, &mut rng),
    }
}
