//! Quaternions in real and complex-pair coordinates, and the hypercomplex
//! structures acting on real covectors of `H`.
//!
//! A quaternion `q = x0 + i x1 + j x2 + k x3` is identified with the pair
//! `(z1, z2) = (x0 + i x1, x2 + i x3)` through `q = z1 + z2 j`. The only
//! commutation rule needed in complex form is `a j = j conj(a)`.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Real, RealModule};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion<S> {
    pub x0: S,
    pub x1: S,
    pub x2: S,
    pub x3: S,
}

/// `q = z1 + z2 j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPair<S> {
    pub z1: Complex<S>,
    pub z2: Complex<S>,
}

impl<S: Real> Quaternion<S> {
    pub fn new(x0: S, x1: S, x2: S, x3: S) -> Self {
        Self { x0, x1, x2, x3 }
    }

    pub fn from_real(x0: S) -> Self {
        Self::new(x0, S::zero(), S::zero(), S::zero())
    }

    pub fn i() -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn j() -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero())
    }

    pub fn k() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one())
    }

    pub fn from_array(x: [S; 4]) -> Self {
        let [x0, x1, x2, x3] = x;
        Self::new(x0, x1, x2, x3)
    }

    pub fn to_array(&self) -> [S; 4] {
        [self.x0.clone(), self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    /// `z1 + z2 j` from `(z1, z2)`.
    pub fn from_complex_pair(p: &ComplexPair<S>) -> Self {
        Self::new(p.z1.re.clone(), p.z1.im.clone(), p.z2.re.clone(), p.z2.im.clone())
    }

    pub fn to_complex_pair(&self) -> ComplexPair<S> {
        ComplexPair {
            z1: Complex::new(self.x0.clone(), self.x1.clone()),
            z2: Complex::new(self.x2.clone(), self.x3.clone()),
        }
    }

    /// `x0 - i x1 - j x2 - k x3`, i.e. `conj(z1) - z2 j`.
    pub fn conj(&self) -> Self {
        Self::new(self.x0.clone(), -self.x1.clone(), -self.x2.clone(), -self.x3.clone())
    }

    pub fn norm_sqr(&self) -> S {
        self.x0.clone() * self.x0.clone()
            + self.x1.clone() * self.x1.clone()
            + self.x2.clone() * self.x2.clone()
            + self.x3.clone() * self.x3.clone()
    }

    /// Real part.
    pub fn re(&self) -> S {
        self.x0.clone()
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            self.x0.clone() * s.clone(),
            self.x1.clone() * s.clone(),
            self.x2.clone() * s.clone(),
            self.x3.clone() * s.clone(),
        )
    }

    /// Left multiplication by a complex scalar `c` (embedded as `c + 0 j`).
    pub fn complex_mul(c: &Complex<S>, q: &Self) -> Self {
        Self::from_complex_pair(&ComplexPair::from_complex(c.clone()).mul(&q.to_complex_pair()))
    }

    pub fn to_f64(&self) -> Quaternion<f64> {
        Quaternion::new(self.x0.to_f64(), self.x1.to_f64(), self.x2.to_f64(), self.x3.to_f64())
    }
}

impl Quaternion<f64> {
    pub fn abs(&self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }
}

impl<S: Real> ComplexPair<S> {
    pub fn new(z1: Complex<S>, z2: Complex<S>) -> Self {
        Self { z1, z2 }
    }

    pub fn from_complex(z1: Complex<S>) -> Self {
        Self { z1, z2: Complex::zero() }
    }

    /// `(a1 + a2 j)(b1 + b2 j) = (a1 b1 - a2 conj(b2)) + (a1 b2 + a2 conj(b1)) j`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let (a1, a2) = (&self.z1, &self.z2);
        let (b1, b2) = (&rhs.z1, &rhs.z2);
        Self {
            z1: a1.clone() * b1.clone() - a2.clone() * b2.conj(),
            z2: a1.clone() * b2.clone() + a2.clone() * b1.conj(),
        }
    }

    /// `conj(z1) - z2 j`.
    pub fn conj(&self) -> Self {
        Self { z1: self.z1.conj(), z2: -self.z2.clone() }
    }
}

impl<S: Real> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.x0 + r.x0, self.x1 + r.x1, self.x2 + r.x2, self.x3 + r.x3)
    }
}

impl<S: Real> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.x0 - r.x0, self.x1 - r.x1, self.x2 - r.x2, self.x3 - r.x3)
    }
}

impl<S: Real> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

/// Hamilton product in real coordinates.
impl<S: Real> Mul for Quaternion<S> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let (a0, a1, a2, a3) = (self.x0, self.x1, self.x2, self.x3);
        let (b0, b1, b2, b3) = (r.x0, r.x1, r.x2, r.x3);
        Self::new(
            a0.clone() * b0.clone() - a1.clone() * b1.clone() - a2.clone() * b2.clone() - a3.clone() * b3.clone(),
            a0.clone() * b1.clone() + a1.clone() * b0.clone() + a2.clone() * b3.clone() - a3.clone() * b2.clone(),
            a0.clone() * b2.clone() - a1.clone() * b3.clone() + a2.clone() * b0.clone() + a3.clone() * b1.clone(),
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl<'a, S: Real> Mul<&'a Quaternion<S>> for &'a Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, r: &'a Quaternion<S>) -> Quaternion<S> {
        self.clone() * r.clone()
    }
}

impl<S: Real> Zero for Quaternion<S> {
    fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }
    fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }
}

impl<S: Real> One for Quaternion<S> {
    fn one() -> Self {
        Self::from_real(S::one())
    }
}

impl<S: Real> RealModule<S> for Quaternion<S> {
    fn scale_real(&self, s: &S) -> Self {
        self.scale(s)
    }
}

/// Unit imaginary quaternion `p = p1 i + p2 j + p3 k`, a point of `S^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ImaginaryUnit<S> {
    p: [S; 3],
}

impl<S: Real> ImaginaryUnit<S> {
    pub fn new(p1: S, p2: S, p3: S) -> Result<Self> {
        let norm_sq = p1.clone() * p1.clone() + p2.clone() * p2.clone() + p3.clone() * p3.clone();
        if !(norm_sq.clone() - S::one()).is_negligible() {
            return Err(Error::NotUnit { norm_sq: norm_sq.to_f64() });
        }
        Ok(Self { p: [p1, p2, p3] })
    }

    pub fn i() -> Self {
        Self { p: [S::one(), S::zero(), S::zero()] }
    }

    pub fn j() -> Self {
        Self { p: [S::zero(), S::one(), S::zero()] }
    }

    pub fn k() -> Self {
        Self { p: [S::zero(), S::zero(), S::one()] }
    }

    /// Inverse stereographic projection of `(s, t)`; rational inputs give
    /// exactly unit rational points.
    pub fn from_stereographic(s: S, t: S) -> Self {
        let two = S::from_i64(2);
        let r2 = s.clone() * s.clone() + t.clone() * t.clone();
        let den = S::one() + r2.clone();
        Self { p: [two.clone() * s / den.clone(), two * t / den.clone(), (S::one() - r2) / den] }
    }

    pub fn components(&self) -> &[S; 3] {
        &self.p
    }

    pub fn to_quaternion(&self) -> Quaternion<S> {
        Quaternion::new(S::zero(), self.p[0].clone(), self.p[1].clone(), self.p[2].clone())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.p.iter().zip(other.p.iter()).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// For orthogonal units, `pq = p x q` is again a unit.
    pub fn orthogonal_product(&self, other: &Self) -> Result<Self> {
        let dot = self.dot(other);
        if !dot.is_negligible() {
            return Err(Error::NotOrthonormal { dot: dot.to_f64() });
        }
        let pq = self.to_quaternion() * other.to_quaternion();
        Self::new(pq.x1, pq.x2, pq.x3)
    }
}

/// Real covector `c0 dx0 + c1 dx1 + c2 dx2 + c3 dx3` with coefficients in
/// any real vector space (reals, complex numbers, quaternions, polynomials).
#[derive(Clone, Debug, PartialEq)]
pub struct Covector4<T>(pub [T; 4]);

impl<T: Clone + Zero> Covector4<T> {
    pub fn zero() -> Self {
        Self([T::zero(), T::zero(), T::zero(), T::zero()])
    }

    pub fn basis(k: usize, one: T) -> Self {
        let mut c = Self::zero();
        c.0[k] = one;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Covector4<U> {
        Covector4([f(&self.0[0]), f(&self.0[1]), f(&self.0[2]), f(&self.0[3])])
    }

    pub fn add(&self, other: &Self) -> Self {
        Covector4(core::array::from_fn(|k| self.0[k].clone() + other.0[k].clone()))
    }
}

/// The complex structures `J1`, `J2`, `J3 = J1 J2` and `Jp = p1 J1 + p2 J2 + p3 J3`.
#[derive(Clone, Debug, PartialEq)]
pub enum ComplexStructure<S> {
    J1,
    J2,
    J3,
    Jp(ImaginaryUnit<S>),
}

/// Image of `dx_k` as `(sign, index)`.
///
/// Given entries: `J1 dx0 = -dx1`, `J1 dx2 = -dx3`, `J2 dx0 = -dx2`,
/// `J2 dx1 = dx3`, `J3 dx0 = dx3`, `J3 dx1 = dx2`. The rest follows from
/// `J^2 = -id`: `J dx_b = J(-J dx_a) = dx_a` whenever `J dx_a = -dx_b`, and
/// `J dx_b = -dx_a` whenever `J dx_a = dx_b`. So `J1 dx1 = dx0`,
/// `J1 dx3 = dx2`, `J2 dx2 = dx0`, `J2 dx3 = -dx1`, `J3 dx3 = -dx0`,
/// `J3 dx2 = -dx1`.
const J1_TABLE: [(i8, usize); 4] = [(-1, 1), (1, 0), (-1, 3), (1, 2)];
const J2_TABLE: [(i8, usize); 4] = [(-1, 2), (1, 3), (1, 0), (-1, 1)];
const J3_TABLE: [(i8, usize); 4] = [(1, 3), (1, 2), (-1, 1), (-1, 0)];

fn apply_table<T: Clone + Zero + Neg<Output = T>>(table: &[(i8, usize); 4], u: &Covector4<T>) -> Covector4<T> {
    let mut out = Covector4::<T>::zero();
    for (k, &(sign, idx)) in table.iter().enumerate() {
        let c = u.0[k].clone();
        out.0[idx] = out.0[idx].clone() + if sign > 0 { c } else { -c };
    }
    out
}

/// Linear action of a complex structure on a covector.
pub fn apply_j<S: Real, T: RealModule<S>>(structure: &ComplexStructure<S>, u: &Covector4<T>) -> Covector4<T> {
    match structure {
        ComplexStructure::J1 => apply_table(&J1_TABLE, u),
        ComplexStructure::J2 => apply_table(&J2_TABLE, u),
        ComplexStructure::J3 => apply_table(&J3_TABLE, u),
        ComplexStructure::Jp(p) => {
            let [p1, p2, p3] = p.components();
            let parts = [apply_table(&J1_TABLE, u), apply_table(&J2_TABLE, u), apply_table(&J3_TABLE, u)];
            Covector4(core::array::from_fn(|k| {
                parts[0].0[k].scale_real(p1) + parts[1].0[k].scale_real(p2) + parts[2].0[k].scale_real(p3)
            }))
        }
    }
}
