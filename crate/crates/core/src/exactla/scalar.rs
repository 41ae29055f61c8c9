//! Coefficient fields: arbitrary-precision rationals and Gaussian rationals.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{Complex, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;
pub type Gaussian = Complex<BigRational>;

/// An exact field of characteristic zero with a conjugation.
///
/// Implemented for [`Rational`] (trivial conjugation) and [`Gaussian`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn conj(&self) -> Self;
    fn from_rational(q: Rational) -> Self;
    fn to_gaussian(&self) -> Gaussian;
    fn to_c64(&self) -> Complex64;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
}

impl Scalar for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn to_gaussian(&self) -> Gaussian {
        Complex::new(self.clone(), Rational::zero())
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(self), 0.0)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Scalar for Gaussian {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }
    fn from_rational(q: Rational) -> Self {
        Complex::new(q, Rational::zero())
    }
    fn to_gaussian(&self) -> Gaussian {
        self.clone()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// `n / d` as an exact rational.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn gauss(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

/// The imaginary unit.
pub fn i_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large numerators/denominators: fall back to a scaled division.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Exact binary expansion of a finite float.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions).
pub fn approximate(x: f64, max_den: i64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let sign = if x < 0.0 { -1 } else { 1 };
    let mut v = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e15 {
            break;
        }
        let a = a as i128;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a as f64;
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1 == 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(sign as i128 * p1), BigInt::from(q1))
}

/// Sign of a rational: -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn is_real(z: &Gaussian) -> bool {
    z.im.is_zero()
}

/// Display helper for Gaussian rationals: `3`, `-1/2i`, `(1+2i)`.
pub struct ShowGaussian<'a>(pub &'a Gaussian);

impl Display for ShowGaussian<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let z = self.0;
        match (z.re.is_zero(), z.im.is_zero()) {
            (_, true) => write!(f, "{}", z.re),
            (true, false) => write!(f, "{}i", z.im),
            (false, false) => {
                if z.im.is_negative() {
                    write!(f, "({}-{}i)", z.re, -z.im.clone())
                } else {
                    write!(f, "({}+{}i)", z.re, z.im)
                }
            }
        }
    }
}
