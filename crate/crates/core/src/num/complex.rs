use super::Precision;
use rug::ops::Pow;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Complex number over `rug::Float`. Both parts always carry the same
/// precision; binary operations keep the precision of the left operand.
#[derive(Clone, PartialEq)]
pub struct Cx {
    pub re: Float,
    pub im: Float,
}

impl Cx {
    pub fn new(re: Float, im: Float) -> Cx {
        debug_assert_eq!(re.prec(), im.prec());
        Cx { re, im }
    }

    pub fn zero(p: Precision) -> Cx {
        Cx::new(p.zero(), p.zero())
    }

    pub fn one(p: Precision) -> Cx {
        Cx::new(p.float(1.0), p.zero())
    }

    pub fn i(p: Precision) -> Cx {
        Cx::new(p.zero(), p.float(1.0))
    }

    pub fn from_f64(p: Precision, re: f64, im: f64) -> Cx {
        Cx::new(p.float(re), p.float(im))
    }

    pub fn from_re(re: Float) -> Cx {
        let im = Float::new(re.prec());
        Cx { re, im }
    }

    pub fn from_polar(r: &Float, theta: &Float) -> Cx {
        let p = r.prec().max(theta.prec());
        let (s, c) = Float::with_val(p, theta).sin_cos(Float::new(p));
        Cx::new(Float::with_val(p, r * &c), Float::with_val(p, r * &s))
    }

    /// Unit complex e^{i theta}.
    pub fn cis(p: Precision, theta: &Float) -> Cx {
        let (s, c) = Float::with_val(p.bits(), theta).sin_cos(Float::new(p.bits()));
        Cx::new(c, s)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn precision(&self) -> Precision {
        Precision::new(self.re.prec()).expect("precision below 53 bits cannot be constructed")
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), -self.im.clone())
    }

    /// i * z
    pub fn mul_i(&self) -> Cx {
        Cx::new(-self.im.clone(), self.re.clone())
    }

    pub fn scale(&self, t: &Float) -> Cx {
        let p = self.prec();
        Cx::new(
            Float::with_val(p, &self.re * t),
            Float::with_val(p, &self.im * t),
        )
    }

    pub fn unscale(&self, t: &Float) -> Cx {
        let p = self.prec();
        Cx::new(
            Float::with_val(p, &self.re / t),
            Float::with_val(p, &self.im / t),
        )
    }

    pub fn norm_sqr(&self) -> Float {
        self.re.clone().mul_add_mul(&self.re, &self.im, &self.im)
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    pub fn recip(&self) -> Cx {
        let n = self.norm_sqr();
        Cx::new(
            Float::with_val(self.prec(), &self.re / &n),
            Float::with_val(self.prec(), -self.im.clone() / &n),
        )
    }

    pub fn exp(&self) -> Cx {
        let p = self.prec();
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        Cx::new(Float::with_val(p, &r * &c), Float::with_val(p, &r * &s))
    }

    /// Principal logarithm: log|z| + i arg z, arg in (-pi, pi].
    pub fn ln(&self) -> Cx {
        Cx::new(self.abs().ln(), self.arg())
    }

    /// Principal square root (cut on the negative real axis).
    pub fn sqrt(&self) -> Cx {
        if self.im.is_zero() && self.re >= 0 {
            return Cx::new(self.re.clone().sqrt(), Float::new(self.prec()));
        }
        let r = self.abs().sqrt();
        let half = self.arg() / 2u32;
        Cx::from_polar(&r, &half)
    }

    /// Principal power z^s for real s: exp(s log z).
    pub fn powf(&self, s: &Float) -> Cx {
        self.ln().scale(s).exp()
    }

    /// Integer power by binary exponentiation.
    pub fn powi(&self, n: i64) -> Cx {
        let p = self.precision();
        if n == 0 {
            return Cx::one(p);
        }
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Cx::one(p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// |self - other|
    pub fn dist(&self, other: &Cx) -> Float {
        (self - other).abs()
    }
}

impl fmt::Debug for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{} - {}i", self.re.to_f64(), -self.im.to_f64())
        } else {
            write!(f, "{} + {}i", self.re.to_f64(), self.im.to_f64())
        }
    }
}

impl Neg for &Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for Cx {
    type Output = Cx;
    fn neg(self) -> Cx {
        Cx::new(-self.re, -self.im)
    }
}

impl Add<&Cx> for &Cx {
    type Output = Cx;
    fn add(self, rhs: &Cx) -> Cx {
        let p = self.prec();
        Cx::new(
            Float::with_val(p, &self.re + &rhs.re),
            Float::with_val(p, &self.im + &rhs.im),
        )
    }
}

impl Sub<&Cx> for &Cx {
    type Output = Cx;
    fn sub(self, rhs: &Cx) -> Cx {
        let p = self.prec();
        Cx::new(
            Float::with_val(p, &self.re - &rhs.re),
            Float::with_val(p, &self.im - &rhs.im),
        )
    }
}

impl Mul<&Cx> for &Cx {
    type Output = Cx;
    fn mul(self, rhs: &Cx) -> Cx {
        let re = self.re.clone().mul_sub_mul(&rhs.re, &self.im, &rhs.im);
        let im = self.re.clone().mul_add_mul(&rhs.im, &self.im, &rhs.re);
        Cx::new(re, im)
    }
}

impl Div<&Cx> for &Cx {
    type Output = Cx;
    fn div(self, rhs: &Cx) -> Cx {
        let n = rhs.norm_sqr();
        let re = self.re.clone().mul_add_mul(&rhs.re, &self.im, &rhs.im);
        let im = self.im.clone().mul_sub_mul(&rhs.re, &self.re, &rhs.im);
        Cx::new(re / &n, im / &n)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<Cx> for Cx {
            type Output = Cx;
            fn $method(self, rhs: Cx) -> Cx {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cx> for Cx {
            type Output = Cx;
            fn $method(self, rhs: &Cx) -> Cx {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cx> for &Cx {
            type Output = Cx;
            fn $method(self, rhs: Cx) -> Cx {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Pow<i64> for &Cx {
    type Output = Cx;
    fn pow(self, n: i64) -> Cx {
        self.powi(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Cx, re: f64, im: f64, tol: f64) {
        assert!(
            (a.re.to_f64() - re).abs() < tol && (a.im.to_f64() - im).abs() < tol,
            "{a:?} vs ({re}, {im})"
        );
    }

    #[test]
    fn arithmetic() {
        let p = Precision::QUAD;
        let a = p.cx(1.0, 2.0);
        let b = p.cx(-0.5, 3.0);
        close(&(&a * &b), -6.5, 2.0, 1e-30);
        close(&(&a / &b), (1.0f64 * -0.5 + 2.0 * 3.0) / 9.25, (2.0f64 * -0.5 - 1.0 * 3.0) / 9.25, 1e-15);
        close(&(&a + &b), 0.5, 5.0, 0.0);
        close(&a.recip().powi(-1), 1.0, 2.0, 1e-30);
    }

    #[test]
    fn transcendental() {
        let p = Precision::QUAD;
        let z = p.cx(0.3, -1.2);
        let w = z.ln().exp();
        assert!(w.dist(&z).to_f64() < 1e-30);
        let s = z.sqrt();
        assert!((&s * &s).dist(&z).to_f64() < 1e-30);
        // principal branch: sqrt(-1) = i
        let m1 = p.cx(-1.0, 0.0);
        close(&m1.sqrt(), 0.0, 1.0, 1e-30);
        // ln(-1 - 0i) should still give arg = pi (im is +0 here)
        close(&m1.ln(), 0.0, std::f64::consts::PI, 1e-15);
        let e = Cx::i(p).scale(&p.pi()).exp();
        close(&e, -1.0, 0.0, 1e-30);
    }

    #[test]
    fn powers() {
        let p = Precision::DOUBLE;
        let z = Cx::from_polar(&p.float(1.1), &p.float(0.7));
        let z5 = z.powi(5);
        let alt = z.powf(&p.float(5.0));
        assert!(z5.dist(&alt).to_f64() < 1e-14);
    }
}
