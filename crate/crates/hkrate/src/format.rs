//! Number formatting and CSV emission.

use std::io::{self, Write};

/// Significant digits of every number written to CSV or text reports.
pub const SIG_DIGITS: usize = 12;

/// Formats `x` with [`SIG_DIGITS`] significant digits, trailing zeros removed,
/// switching to exponent notation outside `1e-5 <= |x| < 1e12` (like C's `%.12g`).
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let e = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = e.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if (-5..SIG_DIGITS as i32).contains(&exp) {
        let (int, frac) = if exp >= 0 {
            let split = exp as usize + 1;
            (digits[..split].to_owned(), digits[split..].to_owned())
        } else {
            ("0".to_owned(), "0".repeat((-exp - 1) as usize) + &digits)
        };
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    } else {
        let frac = digits[1..].trim_end_matches('0');
        let lead = &digits[..1];
        if frac.is_empty() {
            format!("{sign}{lead}e{exp}")
        } else {
            format!("{sign}{lead}.{frac}e{exp}")
        }
    }
}

/// Minimal CSV writer: comma separator, LF line endings, no quoting (fields are
/// numbers and fixed identifiers).
pub struct CsvWriter<W: Write> {
    out: W,
}

impl<W: Write> CsvWriter<W> {
    pub fn new(out: W) -> Self {
        Self { out }
    }

    pub fn header(&mut self, names: &[&str]) -> io::Result<()> {
        writeln!(self.out, "{}", names.join(","))
    }

    pub fn row<I, S>(&mut self, fields: I) -> io::Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut first = true;
        for f in fields {
            if !first {
                self.out.write_all(b",")?;
            }
            self.out.write_all(f.as_ref().as_bytes())?;
            first = false;
        }
        self.out.write_all(b"\n")
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}
