//! Working-precision context shared by every numeric routine.
//!
//! All tolerances are fixed once at construction and threaded through the
//! library explicitly; nothing derives an epsilon ad hoc from a value it
//! happens to be holding.

use rug::ops::Pow;
use rug::Float;

/// Mantissa precision plus the derived tolerances that govern every numeric
/// decision (root refinement width, residual acceptance, sign certification).
#[derive(Debug, Clone)]
pub struct PrecisionContext {
    bits: u32,
    eps_root: Float,
    eps_residual: Float,
    eps_sign: Float,
    max_iter: usize,
}

impl PrecisionContext {
    /// Context with the default tolerance ladder for a given mantissa size:
    /// `eps_root = eps_residual = 2^-(bits/2)`, `eps_sign = 2^-(3*bits/4)`.
    ///
    /// Panics if `bits < 64`.
    pub fn new(bits: u32) -> Self {
        assert!(bits >= 64, "PrecisionContext requires bits >= 64");
        let two = Float::with_val(bits, 2);
        let eps_root = two.clone().pow(-(bits as i32) / 2);
        let eps_residual = eps_root.clone();
        let eps_sign = two.pow(-(3 * bits as i64) / 4);
        PrecisionContext {
            bits,
            eps_root,
            eps_residual,
            eps_sign,
            max_iter: 16 * bits as usize,
        }
    }

    /// Context with explicitly chosen tolerances.
    ///
    /// Panics unless `bits >= 64` and every tolerance lies in
    /// `(0, 2^-(bits/4))`.
    pub fn with_tolerances(
        bits: u32,
        eps_root: Float,
        eps_residual: Float,
        eps_sign: Float,
        max_iter: usize,
    ) -> Self {
        assert!(bits >= 64, "PrecisionContext requires bits >= 64");
        let cap = Float::with_val(bits, 2).pow(-(bits as i32) / 4);
        for (name, eps) in [
            ("eps_root", &eps_root),
            ("eps_residual", &eps_residual),
            ("eps_sign", &eps_sign),
        ] {
            assert!(
                eps.is_sign_positive() && !eps.is_zero() && *eps < cap,
                "{name} must lie in (0, 2^-(bits/4))"
            );
        }
        assert!(max_iter > 0);
        PrecisionContext {
            bits,
            eps_root,
            eps_residual,
            eps_sign,
            max_iter,
        }
    }

    /// Same tolerance ladder at double the mantissa size (precision-stability
    /// reruns).
    pub fn doubled(&self) -> Self {
        PrecisionContext::new(self.bits * 2)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn eps_root(&self) -> &Float {
        &self.eps_root
    }

    pub fn eps_residual(&self) -> &Float {
        &self.eps_residual
    }

    pub fn eps_sign(&self) -> &Float {
        &self.eps_sign
    }

    pub fn max_iter(&self) -> usize {
        self.max_iter
    }

    // ---- Float constructors at context precision ----

    pub fn f_i64(&self, v: i64) -> Float {
        Float::with_val(self.bits, v)
    }

    pub fn f_u32(&self, v: u32) -> Float {
        Float::with_val(self.bits, v)
    }

    /// Rational `num/den` as a context-precision float.
    pub fn f_ratio(&self, num: i64, den: i64) -> Float {
        Float::with_val(self.bits, num) / Float::with_val(self.bits, den)
    }

    /// Parse a decimal string at context precision.
    ///
    /// Panics on malformed input; CLI-facing parsing validates first.
    pub fn f_str(&self, s: &str) -> Float {
        Float::with_val(
            self.bits,
            Float::parse(s).unwrap_or_else(|_| panic!("invalid decimal literal: {s}")),
        )
    }

    pub fn zero(&self) -> Float {
        Float::new(self.bits)
    }

    pub fn one(&self) -> Float {
        Float::with_val(self.bits, 1)
    }
}

impl Default for PrecisionContext {
    /// 256-bit default; sufficient for every canonical run up to degree 40.
    fn default() -> Self {
        PrecisionContext::new(256)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ladder() {
        let ctx = PrecisionContext::new(256);
        assert_eq!(ctx.bits(), 256);
        let cap = Float::with_val(256, 2).pow(-64);
        assert!(*ctx.eps_root() < cap);
        assert!(*ctx.eps_residual() < cap);
        assert!(*ctx.eps_sign() < cap);
        assert!(*ctx.eps_sign() < *ctx.eps_root());
    }

    #[test]
    #[should_panic]
    fn rejects_small_bits() {
        PrecisionContext::new(32);
    }

    #[test]
    #[should_panic]
    fn rejects_oversized_eps() {
        let eps = Float::with_val(64, 0.5);
        PrecisionContext::with_tolerances(64, eps.clone(), eps.clone(), eps, 10);
    }

    #[test]
    fn doubling() {
        let ctx = PrecisionContext::new(128).doubled();
        assert_eq!(ctx.bits(), 256);
    }
}
