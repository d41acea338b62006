use core::fmt;

/// Errors raised by parameter validation and the numerical routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Interference coefficient outside the weak-interference range `(0, 1)`.
    Interference(f64),
    /// Transmit power that is not strictly positive and finite.
    Power(f64),
    /// Power-split fraction outside `[0, 1]`.
    Fraction(f64),
    /// Argument of `log2(1 + x)` that is negative or not finite.
    GammaDomain(f64),
    /// The bracketing function has the same sign at both ends of the interval.
    NoSignChange { lo: f64, f_lo: f64, hi: f64, f_hi: f64 },
    /// Two offset curves do not cross inside the search interval.
    NoCrossover,
    /// Scheme that has no closed-form high-SNR offset.
    NoOffset,
    /// Boundary sweep resolution below the supported minimum.
    Resolution(usize),
    /// Grid axis that is empty, reversed or has a non-finite endpoint.
    Axis { min: f64, max: f64, steps: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::Interference(a) => write!(
                f,
                "interference coefficient a = {a} is outside (0, 1); strong interference \
                 (a >= 1) is excluded because its capacity region is already known"
            ),
            Error::Power(p) => write!(f, "power P = {p} must be positive and finite"),
            Error::Fraction(x) => write!(f, "power split {x} is outside [0, 1]"),
            Error::GammaDomain(x) => {
                write!(f, "log2(1 + x) needs a finite x >= 0, got {x}")
            }
            Error::NoSignChange { lo, f_lo, hi, f_hi } => write!(
                f,
                "root not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}"
            ),
            Error::NoCrossover => write!(f, "offset curves do not cross in (0, 1)"),
            Error::NoOffset => write!(f, "scheme has no closed-form high-SNR offset"),
            Error::Resolution(r) => write!(f, "sweep resolution {r} is below 100"),
            Error::Axis { min, max, steps } => {
                write!(f, "invalid axis: min {min}, max {max}, {steps} steps")
            }
        }
    }
}

impl core::error::Error for Error {}
