use crate::channel::{g, ChannelParams, Fraction, PowerSplit};
use crate::error::Result;

use super::asym::asym_rate;
use super::sym::sym_rate;
use super::{RateResult, Scheme, SchemeParams};

/// Differences below this count as ties between `Sym` and `Asym`.
pub const RS_TIE: f64 = 1e-12;

/// Orthogonal signalling, `log2(1 + 2P)`. Independent of `a`.
pub fn orth_rate(ch: &ChannelParams) -> RateResult {
    RateResult::new(g(2.0 * ch.p()), Scheme::Orth)
}

/// Sum rate of the fixed split `λ1 = λ2 = 1/(aP)`.
///
/// When `aP < 1` that split exceeds 1; the result is then computed at `λ = 1`
/// and marked `clamped`.
pub fn etw_rate(ch: &ChannelParams) -> RateResult {
    let (a, p) = (ch.a(), ch.p());
    let inr = ch.inr();
    if inr < 1.0 {
        let mut r = RateResult::new(2.0 * g(p / (1.0 + inr)), Scheme::Etw)
            .with_split(PowerSplit::symmetric(Fraction::ONE));
        r.clamped = true;
        return r;
    }
    let first = g(1.0 / (2.0 * a)) + g((p * (1.0 + a) - 1.0) / 2.0);
    let second = 2.0 * g((1.0 - a + a * a * p) / (2.0 * a));
    RateResult::new(first.min(second), Scheme::Etw)
        .with_split(PowerSplit::symmetric(Fraction::clamped(1.0 / inr)))
}

/// Larger of the symmetric and one-sided-common optima. Ties go to `Sym`.
pub fn rs_rate(ch: &ChannelParams) -> Result<RateResult> {
    let sym = sym_rate(ch);
    let asym = asym_rate(ch)?;
    let winner = if asym.rate > sym.rate + RS_TIE { asym } else { sym };
    Ok(RateResult {
        scheme: Scheme::Rs,
        params: Some(SchemeParams::Winner(winner.scheme)),
        ..winner
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rates::hk_sum_rate;

    fn ch(a: f64, p: f64) -> ChannelParams {
        ChannelParams::new(a, p).unwrap()
    }

    #[test]
    fn orthogonal() {
        assert!((orth_rate(&ch(0.5, 100.0)).rate - 7.651_051_691_178_929).abs() < 1e-12);
        assert_eq!(orth_rate(&ch(0.3, 0.5)).rate, 1.0);
        assert_eq!(orth_rate(&ch(0.1, 37.0)).rate, orth_rate(&ch(0.9, 37.0)).rate);
    }

    #[test]
    fn etw_frozen() {
        let r = etw_rate(&ch(0.5, 100.0));
        assert!(!r.clamped);
        assert!((r.rate - 7.238_404_739_325_079).abs() < 1e-12);
    }

    #[test]
    fn etw_at_unit_inr() {
        let c = ch(0.25, 4.0);
        let r = etw_rate(&c);
        assert!(!r.clamped);
        let at_one = hk_sum_rate(&c, PowerSplit::symmetric(Fraction::ONE));
        assert!((r.rate - at_one).abs() < 1e-12);
    }

    #[test]
    fn etw_clamps_below_unit_inr() {
        let c = ch(0.1, 2.0);
        let r = etw_rate(&c);
        assert!(r.clamped);
        assert!((r.rate - 2.0 * (1.0 + 2.0 / 1.2f64).log2()).abs() < 1e-12);
    }

    #[test]
    fn rs_picks_winner() {
        let r = rs_rate(&ch(0.05, 100.0)).unwrap();
        assert_eq!(r.params, Some(SchemeParams::Winner(Scheme::Sym)));
        assert_eq!(r.rate, sym_rate(&ch(0.05, 100.0)).rate);
        let r = rs_rate(&ch(0.5, 100.0)).unwrap();
        assert_eq!(r.params, Some(SchemeParams::Winner(Scheme::Asym)));
        assert_eq!(r.scheme, Scheme::Rs);
    }
}
