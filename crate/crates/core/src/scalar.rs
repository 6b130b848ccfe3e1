//! Scalar backends.

use core::fmt::Debug;
use core::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Tolerance used by [`Real::is_negligible`] on the float backend.
pub const FLOAT_NEGLIGIBLE: f64 = 1e-12;

/// A real scalar field: either exact rationals or `f64`.
pub trait Real: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;

    fn from_q(q: &Q) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact zero test on the exact backend, `|x| < 1e-12` on floats.
    fn is_negligible(&self) -> bool;

    fn ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n) / Self::from_i64(d)
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }
}

impl Real for Q {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_q(q: &Q) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Real for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_q(q: &Q) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negligible(&self) -> bool {
        libm::fabs(*self) < FLOAT_NEGLIGIBLE
    }
}

/// Rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Integer rational.
pub fn qi(n: i64) -> Q {
    Q::from_i64(n)
}

/// Gaussian rational `re + i im`.
pub fn cq(re: Q, im: Q) -> Complex<Q> {
    Complex::new(re, im)
}

pub fn c_real<S: Real>(re: S) -> Complex<S> {
    Complex::new(re, S::zero())
}

pub fn c_i<S: Real>() -> Complex<S> {
    Complex::new(S::zero(), S::one())
}

pub fn complex_to_f64<S: Real>(c: &Complex<S>) -> Complex<f64> {
    Complex::new(c.re.to_f64(), c.im.to_f64())
}

pub fn complex_from_q<S: Real>(c: &Complex<Q>) -> Complex<S> {
    Complex::new(S::from_q(&c.re), S::from_q(&c.im))
}

pub fn complex_abs(c: &Complex<f64>) -> f64 {
    libm::hypot(c.re, c.im)
}

/// Exact conversion of a finite float to a rational.
pub fn q_from_f64(x: f64) -> Option<Q> {
    BigRational::from_float(x)
}

/// Vector space over the real scalar `S`.
///
/// Used for covector coefficients (real, complex, quaternion or polynomial)
/// and for quadrature accumulation.
pub trait RealModule<S>: Clone + Zero + Neg<Output = Self> {
    fn scale_real(&self, s: &S) -> Self;
}

impl<S: Real> RealModule<S> for S {
    fn scale_real(&self, s: &S) -> Self {
        self.clone() * s.clone()
    }
}

impl<S: Real> RealModule<S> for Complex<S> {
    fn scale_real(&self, s: &S) -> Self {
        Complex::new(self.re.clone() * s.clone(), self.im.clone() * s.clone())
    }
}
