//! Scalar rings used as polynomial coefficients.
//!
//! Exact work happens over [`Rational`] (GMP big rationals); numerical work
//! happens over [`MpComplex`] (MPC complex numbers with MPFR parts). Both are
//! thin aliases over `rug` so that callers can use the full `rug` API.

use std::fmt;

use rug::{Assign, Float};

use crate::error::AlgebraError;

pub use rug::Complex as MpComplex;
pub use rug::Rational;

/// Lowest precision accepted for multiprecision complex scalars.
pub const MIN_PRECISION_BITS: u32 = 64;

/// The operations a coefficient domain needs for dense polynomial arithmetic.
///
/// Methods take `&self` as a context carrier: for [`MpComplex`] the result
/// precision is inherited from the receiver.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times_int(&self, k: i64) -> Self;
    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self = self.plus(&a.times(b));
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::new()
    }
    fn one_like(&self) -> Self {
        Rational::from(1)
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn plus(&self, rhs: &Self) -> Self {
        Rational::from(self + rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Rational::from(self - rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }
    fn negated(&self) -> Self {
        Rational::from(-self)
    }
    fn times_int(&self, k: i64) -> Self {
        Rational::from(self * k)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
}

impl Ring for MpComplex {
    fn zero_like(&self) -> Self {
        MpComplex::new(self.prec())
    }
    fn one_like(&self) -> Self {
        MpComplex::with_val(self.prec(), 1)
    }
    fn is_zero(&self) -> bool {
        self.real().is_zero() && self.imag().is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        MpComplex::with_val(self.prec(), self + rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        MpComplex::with_val(self.prec(), self - rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        MpComplex::with_val(self.prec(), self * rhs)
    }
    fn negated(&self) -> Self {
        MpComplex::with_val(self.prec(), -self)
    }
    fn times_int(&self, k: i64) -> Self {
        MpComplex::with_val(self.prec(), self * k)
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Parses an exact rational from `"p/q"` or an integer literal `"p"`.
///
/// Decimal notation is rejected: parameters on the exact path must not pass
/// through binary floating point.
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed.contains(['.', 'e', 'E']) {
        return Err(AlgebraError::Parse(format!(
            "expected an exact rational like \"-2/5\", got {text:?}"
        )));
    }
    let value = Rational::parse(trimmed)
        .map(Rational::from)
        .map_err(|e| AlgebraError::Parse(format!("{text:?}: {e}")))?;
    Ok(value)
}

/// Parses a complex anchor of the form `a+bi`, `a-bi`, `a`, or `bi` (decimal parts).
pub fn parse_complex(text: &str, prec: u32) -> Result<MpComplex, AlgebraError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || AlgebraError::Parse(format!("expected a complex number like \"0.6+0.6i\", got {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let parse_float = |part: &str| -> Result<Float, AlgebraError> {
        let part = match part {
            "" | "+" => "1",
            "-" => "-1",
            p => p,
        };
        Float::parse(part).map(|v| Float::with_val(prec, v)).map_err(|_| bad())
    };
    if let Some(body) = s.strip_suffix(['i', 'j']) {
        // split at the last sign that is not an exponent sign and not leading
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx];
            if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re, im) = match split {
            Some(idx) => (parse_float(&body[..idx])?, parse_float(&body[idx..])?),
            None => (Float::new(prec), parse_float(body)?),
        };
        Ok(MpComplex::with_val(prec, (re, im)))
    } else {
        let re = parse_float(&s)?;
        Ok(MpComplex::with_val(prec, (re, 0)))
    }
}

/// Rounds an exact rational to a real multiprecision complex number.
pub fn rational_to_complex(q: &Rational, prec: u32) -> MpComplex {
    let mut z = MpComplex::new(prec);
    z.mut_real().assign(q);
    z
}

/// Rounds an exact rational to a multiprecision float.
pub fn rational_to_float(q: &Rational, prec: u32) -> Float {
    Float::with_val(prec, q)
}

/// `|z|` as an `f64`, saturating for magnitudes outside the `f64` range.
pub fn abs_f64(z: &MpComplex) -> f64 {
    Float::with_val(64, z.abs_ref()).to_f64()
}

/// log2 of `|z|`; `-inf` at zero.
pub fn log2_abs(z: &MpComplex) -> f64 {
    let a = Float::with_val(64, z.abs_ref());
    float_log2(&a)
}

/// log2 of a non-negative float without overflowing `f64`.
pub fn float_log2(x: &Float) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let (mantissa, exp) = x.to_f64_exp();
    mantissa.abs().log2() + f64::from(exp)
}

/// Writes `value` with `digits` significant decimal digits, dropping trailing
/// zeros. Positional notation is used for decimal exponents in `[-5, digits)`,
/// scientific notation otherwise.
pub fn format_float(value: &Float, digits: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let digits = digits.max(1);
    let text = value.to_string_radix(10, Some(digits));
    let (mantissa, exp) = match text.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (text.clone(), 0),
    };
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa.as_str()),
    };
    // normalize to d.ddd × 10^exp
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let exp = exp + int_part.len() as i64 - 1;
    let all: String = format!("{int_part}{frac_part}");
    let all = all.trim_end_matches('0');
    let all = if all.is_empty() { "0" } else { all };
    if (-5..digits as i64).contains(&exp) {
        let body = if exp < 0 {
            format!("0.{}{all}", "0".repeat((-exp - 1) as usize))
        } else {
            let point = exp as usize + 1;
            if all.len() <= point {
                format!("{all}{}", "0".repeat(point - all.len()))
            } else {
                format!("{}.{}", &all[..point], &all[point..])
            }
        };
        format!("{sign}{body}")
    } else {
        let frac = &all[1..];
        if frac.is_empty() {
            format!("{sign}{}e{exp}", &all[..1])
        } else {
            format!("{sign}{}.{frac}e{exp}", &all[..1])
        }
    }
}

/// Exact decimal string `"p/q"` (or `"p"` for integers).
pub fn format_rational(q: &Rational) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
