//! Scalar values in the two coefficient modes: exact rationals and
//! arbitrary-precision floats.

use rug::{Float, Rational};
use std::fmt;

use crate::precision::PrecisionContext;

/// A number in either exact-rational or big-float mode.
///
/// Mixing modes never happens implicitly: promotion Exact -> Float is the
/// explicit [`Scalar::to_float`].
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(Float),
}

impl Scalar {
    pub fn from_i64(v: i64) -> Self {
        Scalar::Exact(Rational::from(v))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(Rational::from((num, den)))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    /// Embed into float mode at `bits` precision. Exact values round once.
    pub fn to_float(&self, bits: u32) -> Float {
        match self {
            Scalar::Exact(r) => Float::with_val(bits, r),
            Scalar::Float(f) => Float::with_val(bits, f),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.cmp0() == std::cmp::Ordering::Equal,
            Scalar::Float(f) => f.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.cmp0() == std::cmp::Ordering::Greater,
            Scalar::Float(f) => f.is_sign_positive() && !f.is_zero(),
        }
    }

    /// Serialization form: exact scalars as `num` or `num/den`, floats as a
    /// round-trippable decimal string.
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Exact(r) => rational_literal(r),
            Scalar::Float(f) => float_literal(f),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

/// `num` when the denominator is one, else `num/den`.
pub fn rational_literal(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal string with enough digits to reproduce the float exactly at its
/// own precision (ceil(bits*log10(2)) + 2 significant digits).
pub fn float_literal(f: &Float) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let digits = (f.prec() as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2;
    let (sign, mantissa, exp) = to_decimal_parts(f, digits);
    // render as d.ddddde<exp>
    let mut out = String::new();
    if sign {
        out.push('-');
    }
    out.push_str(&mantissa[..1]);
    out.push('.');
    out.push_str(&mantissa[1..]);
    out.push('e');
    out.push_str(&(exp - 1).to_string());
    out
}

fn to_decimal_parts(f: &Float, digits: usize) -> (bool, String, i64) {
    let (sign, s, exp) = f.to_sign_string_exp(10, Some(digits));
    (sign, s, exp.unwrap_or(0) as i64)
}

/// Parse a decimal or rational literal in the given mode.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: rug::Integer = n.trim().parse().ok()?;
        let d: rug::Integer = d.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Rational::from((n, d)));
    }
    // integer or terminating decimal
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: rug::Integer = int.parse().ok()?;
        if frac.is_empty() {
            return Some(Rational::from(int));
        }
        let fr: rug::Integer = frac.parse().ok()?;
        if fr < 0 {
            return None;
        }
        let den = rug::Integer::from(10).pow(frac.len() as u32);
        let mut r = Rational::from((fr, den));
        if neg {
            r = -r;
        }
        Some(Rational::from(int) + r)
    } else {
        let n: rug::Integer = s.parse().ok()?;
        Some(Rational::from(n))
    }
}

pub fn parse_float(s: &str, ctx: &PrecisionContext) -> Option<Float> {
    let parsed = Float::parse(s.trim()).ok()?;
    Some(Float::with_val(ctx.bits(), parsed))
}

use rug::ops::Pow;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip_float() {
        let ctx = PrecisionContext::new(128);
        let x = ctx.f_ratio(-1, 54);
        let s = float_literal(&x);
        let back = parse_float(&s, &ctx).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn literal_round_trip_exact() {
        let r = Rational::from((-27, 8));
        let s = rational_literal(&r);
        assert_eq!(s, "-27/8");
        assert_eq!(parse_exact(&s).unwrap(), r);
        assert_eq!(parse_exact("42").unwrap(), Rational::from(42));
        assert_eq!(parse_exact("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_exact("-1.5").unwrap(), Rational::from((-3, 2)));
    }

    #[test]
    fn exact_embeds_into_float() {
        let s = Scalar::from_ratio(1, 3);
        let f64bits = s.to_float(64);
        let f128bits = s.to_float(128);
        // both are correct roundings of 1/3 at their precision
        let third128 = Float::with_val(128, Rational::from((1, 3)));
        assert_eq!(f128bits, third128);
        assert_eq!(f64bits, Float::with_val(64, Rational::from((1, 3))));
    }
}
