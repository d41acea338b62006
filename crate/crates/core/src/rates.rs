//! Rate functionals of a fixed power split.
//!
//! Each receiver first decodes both common messages, treating both private
//! messages as noise, then decodes its own private message with the other
//! user's private message as noise. The sum rate of a fixed split is the
//! private sum plus the tightest of the common-message sum constraints.

use crate::channel::{g, ChannelParams, Fraction, PowerSplit};

/// Values of the three constraints on `R_1w + R_2w`, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommonRateBounds {
    /// Each receiver decodes its own user's common message.
    pub own: f64,
    /// Each receiver decodes the other user's common message.
    pub cross: f64,
    /// Each receiver decodes both common messages jointly.
    pub joint: f64,
}

/// Per-receiver quantities of one transmission configuration. The two users may
/// transmit with different total powers (`p1`, `p2`), which the time-sharing
/// schemes need; the plain channel uses `p1 = p2 = P`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Slot {
    a: f64,
    /// private powers
    q1: f64,
    q2: f64,
    /// common powers
    c1: f64,
    c2: f64,
    /// noise + own private + interfering private, at receivers 1 and 2
    d1: f64,
    d2: f64,
}

impl Slot {
    #[inline]
    pub(crate) fn new(a: f64, p1: f64, p2: f64, l1: Fraction, l2: Fraction) -> Self {
        let q1 = l1.get() * p1;
        let q2 = l2.get() * p2;
        Self {
            a,
            q1,
            q2,
            c1: l1.complement() * p1,
            c2: l2.complement() * p2,
            d1: 1.0 + q1 + a * q2,
            d2: 1.0 + q2 + a * q1,
        }
    }

    #[inline]
    pub(crate) fn private_sum(&self) -> f64 {
        g(self.q1 / (1.0 + self.a * self.q2)) + g(self.q2 / (1.0 + self.a * self.q1))
    }

    #[inline]
    pub(crate) fn own(&self) -> f64 {
        g(self.c1 / self.d1) + g(self.c2 / self.d2)
    }

    #[inline]
    pub(crate) fn cross(&self) -> f64 {
        g(self.a * self.c2 / self.d1) + g(self.a * self.c1 / self.d2)
    }

    #[inline]
    pub(crate) fn joint(&self) -> f64 {
        0.5 * (g((self.c1 + self.a * self.c2) / self.d1) + g((self.c2 + self.a * self.c1) / self.d2))
    }
}

#[inline]
fn slot(ch: &ChannelParams, split: PowerSplit) -> Slot {
    Slot::new(ch.a(), ch.p(), ch.p(), split.lambda1, split.lambda2)
}

/// Private-message sum rate `R_1u + R_2u`.
pub fn private_sum(ch: &ChannelParams, split: PowerSplit) -> f64 {
    slot(ch, split).private_sum()
}

pub fn common_bounds(ch: &ChannelParams, split: PowerSplit) -> CommonRateBounds {
    let s = slot(ch, split);
    CommonRateBounds {
        own: s.own(),
        cross: s.cross(),
        joint: s.joint(),
    }
}

/// Han-Kobayashi sum rate of a fixed split (no time sharing).
///
/// The own-decoding bound never binds for `0 < a < 1`, so the minimum is taken
/// over the cross and joint bounds only.
#[inline]
pub fn hk_sum_rate(ch: &ChannelParams, split: PowerSplit) -> f64 {
    let s = slot(ch, split);
    s.private_sum() + s.cross().min(s.joint())
}

/// `(Ψ1, Ψ2)` on the symmetric line `λ1 = λ2 = λ`; their minimum is the sum rate.
pub fn psi(ch: &ChannelParams, lambda: Fraction) -> (f64, f64) {
    let (a, p) = (ch.a(), ch.p());
    let q = lambda.get() * p;
    let c = lambda.complement() * p;
    let den = 1.0 + a * q;
    let psi1 = 2.0 * g((q + a * c) / den);
    let psi2 = g(q / den) + g((p + a * c) / den);
    (psi1, psi2)
}

/// `(Ω1, Ω2)` with user 1 sending only a common message and user 2 keeping
/// `lambda` private; their minimum is the sum rate.
pub fn omega(ch: &ChannelParams, lambda: Fraction) -> (f64, f64) {
    let (a, p) = (ch.a(), ch.p());
    let q = lambda.get() * p;
    let c = lambda.complement() * p;
    let base = g(q);
    let omega1 = base + g(a * p / (1.0 + q)) + g(a * c / (1.0 + a * q));
    let omega2 = base + 0.5 * g((c + a * p) / (1.0 + q)) + 0.5 * g((p + a * c) / (1.0 + a * q));
    (omega1, omega2)
}

/// `(Φ1, Φ2)`: private sum plus the cross bound, and private sum plus the joint bound.
pub fn phi(ch: &ChannelParams, split: PowerSplit) -> (f64, f64) {
    let s = slot(ch, split);
    let private = s.private_sum();
    (private + s.cross(), private + s.joint())
}
