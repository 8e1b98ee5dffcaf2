//! Precision-aware scalars: [`Precision`] fixes the MPFR significand width for
//! a whole computation, [`Cx`] is complex arithmetic on top of `rug::Float`.

mod complex;

pub use complex::Cx;

use crate::error::{Error, Result};
use rug::float::Constant;
use rug::Float;

/// Working precision in significand bits. Every value inside one computation
/// is created at a single `Precision`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    /// IEEE double significand.
    pub const DOUBLE: Precision = Precision { bits: 53 };
    /// IEEE binary128 significand, first escalation level.
    pub const QUAD: Precision = Precision { bits: 113 };
    /// IEEE binary256 significand, second escalation level.
    pub const OCTUPLE: Precision = Precision { bits: 237 };

    pub fn new(bits: u32) -> Result<Precision> {
        if bits < 53 {
            return Err(Error::InvalidInput(format!(
                "precision must be at least 53 bits, got {bits}"
            )));
        }
        Ok(Precision { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Next precision in the 53 -> 113 -> 237 escalation path.
    pub fn escalate(self) -> Option<Precision> {
        if self.bits < 113 {
            Some(Precision::QUAD)
        } else if self.bits < 237 {
            Some(Precision::OCTUPLE)
        } else {
            None
        }
    }

    /// Add guard bits (used internally by series with known cancellation).
    pub fn with_guard(self, guard: u32) -> Precision {
        Precision { bits: self.bits + guard }
    }

    /// Unit roundoff scale 2^(1-bits).
    pub fn eps(self) -> Float {
        Float::with_val(self.bits, Float::i_exp(1, 1 - self.bits as i32))
    }

    pub fn float(self, x: f64) -> Float {
        Float::with_val(self.bits, x)
    }

    pub fn from_int(self, n: i64) -> Float {
        Float::with_val(self.bits, n)
    }

    pub fn zero(self) -> Float {
        Float::new(self.bits)
    }

    pub fn pi(self) -> Float {
        Float::with_val(self.bits, Constant::Pi)
    }

    pub fn two_pi(self) -> Float {
        Float::with_val(self.bits, Constant::Pi) * 2
    }

    /// Exact rational p/q at this precision.
    pub fn ratio(self, p: i64, q: i64) -> Float {
        Float::with_val(self.bits, p) / Float::with_val(self.bits, q)
    }

    pub fn cx(self, re: f64, im: f64) -> Cx {
        Cx::from_f64(self, re, im)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DOUBLE
    }
}

/// Reduce an angle to [0, 2*pi).
pub fn wrap_angle(theta: &Float) -> Float {
    let p = theta.prec();
    let two_pi = Float::with_val(p, Constant::Pi) * 2;
    let mut t = theta.clone();
    let q = Float::with_val(p, &t / &two_pi).floor();
    t -= q * &two_pi;
    if t >= two_pi {
        t = Float::new(p);
    }
    if t < 0 {
        t += Float::with_val(p, Constant::Pi) * 2;
    }
    t
}

/// Signed angular difference in (-pi, pi].
pub fn angle_diff(a: &Float, b: &Float) -> Float {
    let p = a.prec().max(b.prec());
    let pi = Float::with_val(p, Constant::Pi);
    let two_pi = pi.clone() * 2;
    let mut d = Float::with_val(p, a - b);
    let q = Float::with_val(p, &d / &two_pi).round();
    d -= q * &two_pi;
    if d > pi {
        d -= two_pi;
    } else {
        let neg_pi = -pi.clone();
        if d <= neg_pi {
            d += two_pi;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escalation_path() {
        assert_eq!(Precision::DOUBLE.escalate(), Some(Precision::QUAD));
        assert_eq!(Precision::QUAD.escalate(), Some(Precision::OCTUPLE));
        assert_eq!(Precision::OCTUPLE.escalate(), None);
        assert!(Precision::new(52).is_err());
        assert_eq!(Precision::new(80).unwrap().bits(), 80);
    }

    #[test]
    fn wrap_and_diff() {
        let p = Precision::DOUBLE;
        let t = wrap_angle(&p.float(-0.5));
        let expect = p.two_pi() - 0.5f64;
        assert!((t - expect).abs() < 1e-14);
        let d = angle_diff(&p.float(0.1), &p.float(6.2));
        // 0.1 - 6.2 + 2 pi ~ 0.18318
        assert!((d.to_f64() - (0.1 - 6.2 + std::f64::consts::TAU)).abs() < 1e-14);
    }
}
