//! Sparse polynomials in `z1, conj(z1), z2, conj(z2)` with complex
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::quat::ComplexPair;
use crate::scalar::{c_i, c_real, complex_to_f64, Real, RealModule};

/// Exponents `(a, b, c, d)` of `z1^a conj(z1)^b z2^c conj(z2)^d`.
pub type Exponent = [u32; 4];

/// Wirtinger derivative selector. The discriminant is the exponent slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wirtinger {
    Z1 = 0,
    Z1Bar = 1,
    Z2 = 2,
    Z2Bar = 3,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WPoly<S> {
    terms: BTreeMap<Exponent, Complex<S>>,
}

pub fn total_degree(e: &Exponent) -> u32 {
    e.iter().sum()
}

/// `(p, q)`: degree in `(z1, z2)` and in `(conj z1, conj z2)`.
pub fn bidegree(e: &Exponent) -> (u32, u32) {
    (e[0] + e[2], e[1] + e[3])
}

/// Graded lexicographic order on exponents.
pub fn grlex_cmp(x: &Exponent, y: &Exponent) -> Ordering {
    total_degree(x).cmp(&total_degree(y)).then_with(|| x.cmp(y))
}

fn divides(small: &Exponent, big: &Exponent) -> bool {
    small.iter().zip(big.iter()).all(|(s, b)| s <= b)
}

impl<S: Real> WPoly<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn constant(c: Complex<S>) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn real_constant(c: S) -> Self {
        Self::constant(c_real(c))
    }

    pub fn one() -> Self {
        Self::real_constant(S::one())
    }

    pub fn monomial(e: Exponent, c: Complex<S>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn z1() -> Self {
        Self::monomial([1, 0, 0, 0], Complex::one())
    }

    pub fn z1bar() -> Self {
        Self::monomial([0, 1, 0, 0], Complex::one())
    }

    pub fn z2() -> Self {
        Self::monomial([0, 0, 1, 0], Complex::one())
    }

    pub fn z2bar() -> Self {
        Self::monomial([0, 0, 0, 1], Complex::one())
    }

    /// Real coordinate `x_k` where `z1 = x0 + i x1`, `z2 = x2 + i x3`.
    pub fn real_coordinate(k: usize) -> Self {
        let (z, zb) = if k < 2 { (Self::z1(), Self::z1bar()) } else { (Self::z2(), Self::z2bar()) };
        let half = S::half();
        if k.is_multiple_of(2) {
            (z + zb).scale_real(&half)
        } else {
            // (z - conj z) / (2i)
            (z - zb).scale(&Complex::new(S::zero(), -half))
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Complex<S>)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * monomial(e)`, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exponent, c: Complex<S>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Complex<S>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Complex<S> {
        self.terms.get(e).cloned().unwrap_or_else(Complex::zero)
    }

    /// Number of stored terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Every coefficient is negligible (exactly zero on the exact backend).
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.re.is_negligible() && c.im.is_negligible())
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(total_degree).max()
    }

    pub fn scale(&self, c: &Complex<S>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v.clone() * c.clone())))
    }

    pub fn map_coeffs<T: Real>(&self, f: impl Fn(&Complex<S>) -> Complex<T>) -> WPoly<T> {
        WPoly::from_terms(self.terms.iter().map(|(e, v)| (*e, f(v))))
    }

    pub fn to_f64(&self) -> WPoly<f64> {
        self.map_coeffs(complex_to_f64)
    }

    /// Complex conjugate function: conjugates coefficients and swaps
    /// `z <-> conj z` exponents.
    pub fn conj(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| ([e[1], e[0], e[3], e[2]], v.conj())))
    }

    /// `(f + conj f) / 2`.
    pub fn real_part(&self) -> Self {
        (self + &self.conj()).scale_real(&S::half())
    }

    /// `(f - conj f) / (2i)`.
    pub fn imag_part(&self) -> Self {
        (self - &self.conj()).scale(&Complex::new(S::zero(), -S::half()))
    }

    /// Real-valued at every point of `C^2`.
    pub fn is_real_valued(&self) -> bool {
        *self == self.conj()
    }

    /// No antiholomorphic variable appears.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|e| e[1] == 0 && e[3] == 0)
    }

    pub fn wirt(&self, which: Wirtinger) -> Self {
        let slot = which as usize;
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[slot] > 0).map(|(e, v)| {
            let mut d = *e;
            d[slot] -= 1;
            (d, v.scale_real(&S::from_i64(i64::from(e[slot]))))
        }))
    }

    /// Real partial derivative `d/dx_k`:
    /// `d/dx0 = d/dz1 + d/dz1bar`, `d/dx1 = i(d/dz1 - d/dz1bar)`, and the same
    /// for `x2, x3` with `z2`.
    pub fn partial_x(&self, k: usize) -> Self {
        let (w, wb) = if k < 2 { (Wirtinger::Z1, Wirtinger::Z1Bar) } else { (Wirtinger::Z2, Wirtinger::Z2Bar) };
        if k.is_multiple_of(2) {
            self.wirt(w) + self.wirt(wb)
        } else {
            (self.wirt(w) - self.wirt(wb)).scale(&c_i())
        }
    }

    pub fn gradient_x(&self) -> [Self; 4] {
        core::array::from_fn(|k| self.partial_x(k))
    }

    /// `4 (d^2/dz1 dz1bar + d^2/dz2 dz2bar)`, the Laplacian of `R^4`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            for (s, t) in [(0usize, 1usize), (2, 3)] {
                if e[s] > 0 && e[t] > 0 {
                    let mut d = *e;
                    d[s] -= 1;
                    d[t] -= 1;
                    let factor = S::from_i64(4 * i64::from(e[s]) * i64::from(e[t]));
                    out.add_term(d, v.scale_real(&factor));
                }
            }
        }
        out
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    /// Pullback by `gamma(z1, z2) = (z1, conj z2)`: swaps the `z2` exponents.
    pub fn gamma_pullback(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| ([e[0], e[1], e[3], e[2]], v.clone())))
    }

    /// Splits into bihomogeneous parts keyed by bidegree.
    pub fn bidegree_parts(&self) -> BTreeMap<(u32, u32), Self> {
        let mut out: BTreeMap<(u32, u32), Self> = BTreeMap::new();
        for (e, v) in &self.terms {
            out.entry(bidegree(e)).or_insert_with(Self::zero).add_term(*e, v.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Evaluation at `(z1, z2)`.
    pub fn eval(&self, z: &ComplexPair<S>) -> Complex<S> {
        let vars = [z.z1.clone(), z.z1.conj(), z.z2.clone(), z.z2.conj()];
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<Complex<S>>> = vars
            .iter()
            .map(|v| {
                let mut pw = Vec::with_capacity(max_exp + 1);
                pw.push(Complex::one());
                for n in 0..max_exp {
                    let next = pw[n].clone() * v.clone();
                    pw.push(next);
                }
                pw
            })
            .collect();
        let mut acc = Complex::zero();
        for (e, v) in &self.terms {
            let mut m = v.clone();
            for slot in 0..4 {
                if e[slot] > 0 {
                    m = m * powers[slot][e[slot] as usize].clone();
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Evaluation at real coordinates `(x0, x1, x2, x3)`.
    pub fn eval_real(&self, x: &[S; 4]) -> Complex<S> {
        self.eval(&ComplexPair::new(Complex::new(x[0].clone(), x[1].clone()), Complex::new(x[2].clone(), x[3].clone())))
    }

    /// Remainder of multivariate division by `divisor` under graded lex
    /// order. With a single divisor this is the canonical normal form modulo
    /// the principal ideal it generates: no remaining monomial is divisible
    /// by the leading monomial of `divisor`.
    pub fn normal_form(&self, divisor: &Self) -> Self {
        let Some((lead_e, lead_c)) = divisor.leading_term() else {
            return self.clone();
        };
        let lead_inv = Complex::<S>::one() / lead_c;
        let mut work: BTreeMap<GrlexKey, Complex<S>> =
            self.terms.iter().map(|(e, v)| (GrlexKey(*e), v.clone())).collect();
        let mut rem = Self::zero();
        while let Some((GrlexKey(e), c)) = work.pop_last() {
            if !divides(&lead_e, &e) {
                rem.add_term(e, c);
                continue;
            }
            let shift: Exponent = core::array::from_fn(|s| e[s] - lead_e[s]);
            let factor = c * lead_inv.clone();
            for (de, dv) in &divisor.terms {
                if *de == lead_e {
                    continue;
                }
                let ne: Exponent = core::array::from_fn(|s| de[s] + shift[s]);
                let delta = -(factor.clone() * dv.clone());
                let key = GrlexKey(ne);
                match work.get_mut(&key) {
                    Some(v) => {
                        *v = v.clone() + delta;
                        if v.is_zero() {
                            work.remove(&key);
                        }
                    }
                    None => {
                        if !delta.is_zero() {
                            work.insert(key, delta);
                        }
                    }
                }
            }
        }
        rem
    }

    /// Leading term under graded lex order.
    pub fn leading_term(&self) -> Option<(Exponent, Complex<S>)> {
        self.terms.iter().max_by(|x, y| grlex_cmp(x.0, y.0)).map(|(e, v)| (*e, v.clone()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GrlexKey(Exponent);

impl Ord for GrlexKey {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for GrlexKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a, S: Real> Add<&'a WPoly<S>> for &'a WPoly<S> {
    type Output = WPoly<S>;
    fn add(self, rhs: &'a WPoly<S>) -> WPoly<S> {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, v.clone());
        }
        out
    }
}

impl<'a, S: Real> Sub<&'a WPoly<S>> for &'a WPoly<S> {
    type Output = WPoly<S>;
    fn sub(self, rhs: &'a WPoly<S>) -> WPoly<S> {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, -v.clone());
        }
        out
    }
}

impl<'a, S: Real> Mul<&'a WPoly<S>> for &'a WPoly<S> {
    type Output = WPoly<S>;
    fn mul(self, rhs: &'a WPoly<S>) -> WPoly<S> {
        let mut out = WPoly::zero();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                let e: Exponent = core::array::from_fn(|s| e1[s] + e2[s]);
                out.add_term(e, v1.clone() * v2.clone());
            }
        }
        out
    }
}

impl<S: Real> Neg for &WPoly<S> {
    type Output = WPoly<S>;
    fn neg(self) -> WPoly<S> {
        WPoly { terms: self.terms.iter().map(|(e, v)| (*e, -v.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Real> $tr for WPoly<S> {
            type Output = WPoly<S>;
            fn $m(self, rhs: WPoly<S>) -> WPoly<S> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Real> Neg for WPoly<S> {
    type Output = WPoly<S>;
    fn neg(self) -> WPoly<S> {
        -&self
    }
}

impl<S: Real> Zero for WPoly<S> {
    fn zero() -> Self {
        WPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Real> RealModule<S> for WPoly<S> {
    fn scale_real(&self, s: &S) -> Self {
        self.scale(&c_real(s.clone()))
    }
}
