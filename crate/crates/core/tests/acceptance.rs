//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p hkrate-core --test acceptance`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hkrate_core::asymptotics::{asym_split_asymptote, sym_split_asymptote};
use hkrate_core::optim::sason_rate;
use hkrate_core::region::{boundary_scan, DEFAULT_RESOLUTION};
use hkrate_core::{
    asym_rate, brute_force_rs, common_bounds, crossover, delta_offset, etw_rate, hk_sum_rate,
    omega, orth_rate, rs_rate, sym_rate, ts_rate, ChannelParams, Fraction, OffsetScheme,
    OracleGrid, PowerSplit,
};
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ch(a: f64, p: f64) -> ChannelParams {
    ChannelParams::new(a, p).expect("valid channel")
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Boundaries at P = 20 dB.
fn thresholds_20db() -> Outcome {
    const EXPECTED: [f64; 4] = [0.066, 0.145, 0.182, 0.9792];
    const TOL: f64 = 0.002;
    let found = boundary_scan(100.0, DEFAULT_RESOLUTION).map_err(|e| e.to_string())?;
    let a: Vec<f64> = found.iter().map(|b| b.a).collect();
    if a.len() != EXPECTED.len() {
        return Err(format!("expected 4 boundaries, found {a:?}"));
    }
    for (got, want) in a.iter().zip(EXPECTED) {
        if (got - want).abs() > TOL {
            return Err(format!("boundary {got:.6} not within {TOL} of {want}"));
        }
    }
    Ok(format!("boundaries {:.4?}", a))
}

fn high_snr_crossovers() -> Outcome {
    let sym_asym = crossover(OffsetScheme::Sym, OffsetScheme::Asym).map_err(|e| e.to_string())?;
    if (sym_asym - 0.087).abs() > 1e-3 {
        return Err(format!("Sym/Asym crossover {sym_asym}"));
    }
    let sym_orth = crossover(OffsetScheme::Sym, OffsetScheme::Orth).map_err(|e| e.to_string())?;
    let exact = 5f64.sqrt() - 2.0;
    if (sym_orth - exact).abs() > 1e-9 {
        return Err(format!("Sym/Orth crossover {sym_orth} vs {exact}"));
    }
    for k in 1..1000 {
        let a = k as f64 * 1e-3;
        let d = delta_offset(OffsetScheme::Asym, a).map_err(|e| e.to_string())?;
        if d <= 1.0 {
            return Err(format!("asym offset {d} <= 1 at a = {a}"));
        }
    }
    Ok(format!("Sym/Asym {sym_asym:.6}, Sym/Orth {sym_orth:.12}"))
}

fn sym_oracle() -> Outcome {
    let mut rng = rng();
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (a, p) = random_channel(&mut rng);
        let r = sym_rate(&ch(a, p));
        let (oracle, _) = grid_max_1d(|l| naive_hk(a, p, l, l), 1e-5, 4);
        let err = (r.rate - oracle).abs();
        worst = worst.max(err);
        if err >= 1e-6 {
            return Err(format!("(a, P) = ({a}, {p}): r_sym {} vs oracle {oracle}", r.rate));
        }

        let (t1, t2) = sym_thresholds(a);
        let branch = if p <= t1 {
            1.0
        } else if p <= t2 {
            (a * a * p + a - 1.0) / p
        } else {
            (1.0 - a) / ((1.0 + a) * a * p)
        };
        let branch = if branch <= 1e-12 {
            0.0
        } else if branch >= 1.0 - 1e-12 {
            1.0
        } else {
            branch
        };
        let got = r.split.unwrap().lambda1.get();
        if got != branch {
            return Err(format!("(a, P) = ({a}, {p}): λ* {got} vs branch formula {branch}"));
        }
    }
    Ok(format!("200 points, worst |r_sym - oracle| = {worst:.2e}"))
}

fn asym_residual() -> Outcome {
    let mut rng = rng();
    let (mut worst_gap, mut worst_err) = (0.0f64, 0.0f64);
    for _ in 0..200 {
        let (a, p) = random_channel_above_t1(&mut rng);
        let r = asym_rate(&ch(a, p)).map_err(|e| e.to_string())?;
        let l = r.split.unwrap().lambda2.get();
        let (o1, o2) = naive_omega(a, p, l);
        let gap = (o1 - o2).abs();
        let (oracle, _) = grid_max_1d(
            |x| {
                let (o1, o2) = naive_omega(a, p, x);
                o1.min(o2)
            },
            1e-5,
            4,
        );
        let err = (r.rate - oracle).abs();
        worst_gap = worst_gap.max(gap);
        worst_err = worst_err.max(err);
        if gap >= 1e-9 || err >= 1e-6 {
            return Err(format!("(a, P) = ({a}, {p}): |Ω1-Ω2| = {gap:e}, |r_asym - oracle| = {err:e}"));
        }
    }
    Ok(format!("200 points, worst |Ω1-Ω2| = {worst_gap:.2e}, worst oracle gap = {worst_err:.2e}"))
}

fn conjecture_audit() -> Outcome {
    const N: usize = 50;
    let grid = OracleGrid::new(1001, 3).unwrap();
    let (mut max_excess, mut max_deficit) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut findings = Vec::new();
    for i in 0..N {
        let p = 10f64.powf(4.0 * i as f64 / (N - 1) as f64);
        for j in 0..N {
            let a = 0.02 + 0.96 * j as f64 / (N - 1) as f64;
            let c = ch(a, p);
            let brute = brute_force_rs(&c, grid).map_err(|e| e.to_string())?.rate;
            let rs = rs_rate(&c).map_err(|e| e.to_string())?.rate;
            max_excess = max_excess.max(brute - rs);
            max_deficit = max_deficit.max(rs - brute);
            if brute > rs + 1e-3 || brute < rs - 1e-3 {
                findings.push(format!("(a, P) = ({a:.4}, {p:.4e}): brute {brute:.9} vs r_rs {rs:.9}"));
            }
        }
    }
    let summary = format!(
        "{} points, max(brute - r_rs) = {max_excess:.2e}, max(r_rs - brute) = {max_deficit:.2e}",
        N * N
    );
    if findings.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; {} findings, first: {}", findings.len(), findings[0]))
    }
}

fn dominance_and_monotonicity() -> Outcome {
    let mut rng = rng();
    for _ in 0..10_000 {
        let a = rng.gen_range(0.0..1.0f64).max(f64::MIN_POSITIVE);
        let p = 10f64.powf(rng.gen_range(-2.0..6.0));
        let (l1, l2) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..=1.0));
        let b = common_bounds(&ch(a, p), PowerSplit::new(l1, l2).unwrap());
        if b.cross > b.own {
            return Err(format!("cross {} > own {} at ({a}, {p}, {l1}, {l2})", b.cross, b.own));
        }
    }
    // finite-difference slopes in λ; 1e-12 absorbs rounding of values of order 10 bits
    const H: f64 = 1e-6;
    const NOISE: f64 = 1e-12;
    let mut slopes = 0;
    for _ in 0..10_000 {
        let (a, p) = random_channel_above_t1(&mut rng);
        let c = ch(a, p);
        let l = rng.gen_range(0.0..1.0 - H);
        let (o1, o2) = omega(&c, Fraction::new(l).unwrap());
        let (n1, n2) = omega(&c, Fraction::new(l + H).unwrap());
        if n1 - o1 > NOISE || n2 - o2 < -NOISE {
            return Err(format!("slope sign violated at ({a}, {p}, λ = {l}): dΩ1 {}, dΩ2 {}", n1 - o1, n2 - o2));
        }
        slopes += 1;
    }
    Ok(format!("10000 dominance tuples, {slopes} slope pairs, zero violations"))
}

fn etw_consistency() -> Outcome {
    let mut rng = rng();
    let mut checked = 0;
    let mut worst = 0.0f64;
    while checked < 2000 {
        let (a, p) = random_channel(&mut rng);
        if a * p < 1.0 {
            continue;
        }
        let c = ch(a, p);
        let etw = etw_rate(&c);
        let l = 1.0 / (a * p);
        let direct = naive_hk(a, p, l, l);
        worst = worst.max((etw.rate - direct).abs());
        if (etw.rate - direct).abs() > 1e-9 {
            return Err(format!("({a}, {p}): r_etw {} vs fixed-split rate {direct}", etw.rate));
        }
        let sym = sym_rate(&c).rate;
        if etw.rate > sym + 1e-9 {
            return Err(format!("({a}, {p}): r_etw {} > r_sym {sym}", etw.rate));
        }
        checked += 1;
    }
    Ok(format!("{checked} points with aP >= 1, worst identity gap {worst:.2e}"))
}

/// Frozen from a sweep made before this suite existed: max two-slot gain 0.0050
/// bits, max four-slot gain 0.1211 bits at P = 20 dB.
const TS_ADVANTAGE_BOUND: f64 = 0.15;

fn time_sharing() -> Outcome {
    let mut max_ts = f64::NEG_INFINITY;
    let mut max_sason = f64::NEG_INFINITY;
    for k in 1..=99 {
        let a = k as f64 / 100.0;
        let c = ch(a, 100.0);
        let sym = sym_rate(&c).rate;
        let asym = asym_rate(&c).map_err(|e| e.to_string())?.rate;
        let orth = orth_rate(&c).rate;
        let rs = rs_rate(&c).map_err(|e| e.to_string())?.rate;
        let ts = ts_rate(&c).map_err(|e| e.to_string())?.rate;
        let sason = sason_rate(&c).map_err(|e| e.to_string())?.rate;
        let no_ts = sym.max(asym).max(orth);
        if ts < no_ts - 1e-9 {
            return Err(format!("a = {a}: r_ts {ts} < {no_ts}"));
        }
        if sason < rs.max(orth) - 1e-9 {
            return Err(format!("a = {a}: r_sason {sason} < {}", rs.max(orth)));
        }
        max_ts = max_ts.max(ts - no_ts);
        max_sason = max_sason.max(sason - no_ts);
    }
    let worst = max_ts.max(max_sason);
    let summary = format!("max gain: two-slot {max_ts:.4e}, four-slot {max_sason:.4e} bits");
    if worst >= TS_ADVANTAGE_BOUND {
        return Err(format!("{summary} exceeds {TS_ADVANTAGE_BOUND}"));
    }
    Ok(summary)
}

fn high_snr_convergence() -> Outcome {
    const P: f64 = 1e8;
    let mut worst = 0.0f64;
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let c = ch(a, P);
        let rates = [
            (OffsetScheme::Sym, sym_rate(&c).rate),
            (OffsetScheme::Asym, asym_rate(&c).map_err(|e| e.to_string())?.rate),
            (OffsetScheme::Etw, etw_rate(&c).rate),
            (OffsetScheme::Orth, orth_rate(&c).rate),
        ];
        for (scheme, r) in rates {
            let d = delta_offset(scheme, a).map_err(|e| e.to_string())?;
            let err = (r - P.log2() - d).abs();
            worst = worst.max(err);
            if err >= 1e-2 {
                return Err(format!("{} at a = {a}: offset error {err}", scheme.name()));
            }
        }
        let l = asym_rate(&c).unwrap().split.unwrap().lambda2.get();
        if (l - asym_split_asymptote(a)).abs() >= 1e-3 {
            return Err(format!("a = {a}: λ_asym {l} vs {}", asym_split_asymptote(a)));
        }
        let ls = sym_rate(&c).split.unwrap().lambda1.get();
        if ls != sym_split_asymptote(a, P) {
            return Err(format!("a = {a}: λ_sym {ls} vs {}", sym_split_asymptote(a, P)));
        }
    }
    // sanity: the fixed-split route agrees with the optimized one at high SNR
    let c = ch(0.5, P);
    let s = sym_rate(&c);
    let direct = hk_sum_rate(&c, s.split.unwrap());
    if (direct - s.rate).abs() > 1e-9 {
        return Err(format!("fixed-split rate {direct} vs r_sym {}", s.rate));
    }
    Ok(format!("worst offset error {worst:.2e} bits"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "region boundaries at P = 20 dB", limit: secs(10), run: thresholds_20db },
        Criterion { id: 2, title: "high-SNR crossovers", limit: secs(1), run: high_snr_crossovers },
        Criterion { id: 3, title: "symmetric optimum vs 1-D oracle", limit: secs(30), run: sym_oracle },
        Criterion { id: 4, title: "one-sided common optimum residual and oracle", limit: secs(30), run: asym_residual },
        Criterion { id: 5, title: "best-of-two conjecture audit (50x50)", limit: secs(600), run: conjecture_audit },
        Criterion { id: 6, title: "dominance and monotonicity", limit: secs(10), run: dominance_and_monotonicity },
        Criterion { id: 7, title: "fixed noise-floor split consistency", limit: secs(5), run: etw_consistency },
        Criterion { id: 8, title: "time-sharing dominance and smallness", limit: secs(300), run: time_sharing },
        Criterion { id: 9, title: "high-SNR convergence", limit: secs(5), run: high_snr_convergence },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(s) if elapsed <= c.limit => (true, s),
            Ok(s) => (false, format!("{s}; too slow")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {}. {}: {} ({:.2} s, limit {} s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
