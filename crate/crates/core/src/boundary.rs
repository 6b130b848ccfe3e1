//! Domains `{rho < 0}` with polynomial `rho` and the first-order boundary
//! operators built from its Wirtinger derivatives.
//!
//! All operators are kept unnormalized: `dbar_n` returns
//! `|dbar rho| * dbar_n f` and `op_l` returns `|dbar rho| * L f`, wrapped in a
//! [`BoundaryQuotient`] that remembers the division still owed.

use alloc::string::String;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::poly::{WPoly, Wirtinger};
use crate::quadrature::{QuadOrders, SurfaceNode, SurfaceQuadrature};
use crate::scalar::Real;
use crate::wirtinger::QFunction;

#[derive(Clone, Debug, PartialEq)]
pub enum Shape<S> {
    Sphere,
    Ellipsoid { r1: S, r2: S },
    Custom,
}

#[derive(Clone, Debug)]
pub struct Domain<S> {
    label: String,
    shape: Shape<S>,
    rho: WPoly<S>,
    /// `d rho / d z1, d z1bar, d z2, d z2bar`, indexed by [`Wirtinger`].
    d_rho: [WPoly<S>; 4],
}

/// Numerator of a boundary operator whose value is `numerator / |dbar rho|`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryQuotient<S> {
    pub numerator: WPoly<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualKind {
    /// `(dbar_n - j L) f`
    Eq2,
    /// `(N - j T) f`
    Cor1,
}

impl<S: Real> Domain<S> {
    /// Domain from an arbitrary real-valued defining polynomial.
    pub fn new(label: impl Into<String>, rho: WPoly<S>) -> Result<Self> {
        if !rho.is_real_valued() {
            return Err(Error::InvalidDomain(String::from("defining function is not real-valued")));
        }
        Ok(Self::build(label.into(), Shape::Custom, rho))
    }

    fn build(label: String, shape: Shape<S>, rho: WPoly<S>) -> Self {
        let d_rho = [Wirtinger::Z1, Wirtinger::Z1Bar, Wirtinger::Z2, Wirtinger::Z2Bar].map(|w| rho.wirt(w));
        Self { label, shape, rho, d_rho }
    }

    /// `|z1|^2 + |z2|^2 - 1`
    pub fn unit_sphere() -> Self {
        let rho = &(&(&WPoly::z1() * &WPoly::z1bar()) + &(&WPoly::z2() * &WPoly::z2bar())) - &WPoly::one();
        Self::build(String::from("sphere"), Shape::Sphere, rho)
    }

    /// `|z1|^2 / r1^2 + |z2|^2 / r2^2 - 1`
    pub fn ellipsoid(r1: S, r2: S) -> Result<Self> {
        if !(r1.to_f64() > 0.0 && r2.to_f64() > 0.0) {
            return Err(Error::InvalidDomain(alloc::format!(
                "ellipsoid axes must be positive, got ({}, {})",
                r1.to_f64(),
                r2.to_f64()
            )));
        }
        let inv = |r: &S| Complex::new(S::one() / (r.clone() * r.clone()), S::zero());
        let rho = &(&(&WPoly::z1() * &WPoly::z1bar()).scale(&inv(&r1))
            + &(&WPoly::z2() * &WPoly::z2bar()).scale(&inv(&r2)))
            - &WPoly::one();
        let label = alloc::format!("ellipsoid({}, {})", r1.to_f64(), r2.to_f64());
        Ok(Self::build(label, Shape::Ellipsoid { r1, r2 }, rho))
    }

    /// Same domain, defining function multiplied by a positive constant.
    pub fn scaled(&self, c: S) -> Result<Self> {
        if !(c.to_f64() > 0.0) {
            return Err(Error::InvalidDomain(String::from("scale factor must be positive")));
        }
        let rho = self.rho.scale(&Complex::new(c, S::zero()));
        Ok(Self::build(alloc::format!("{}*", self.label), self.shape.clone(), rho))
    }

    /// `gamma^{-1}(Omega)` with `gamma(z1, z2) = (z1, conj z2)`.
    pub fn gamma_pullback(&self) -> Self {
        let shape = if self.rho.gamma_pullback() == self.rho { self.shape.clone() } else { Shape::Custom };
        Self::build(alloc::format!("gamma({})", self.label), shape, self.rho.gamma_pullback())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> &Shape<S> {
        &self.shape
    }

    pub fn rho(&self) -> &WPoly<S> {
        &self.rho
    }

    pub fn d_rho(&self, which: Wirtinger) -> &WPoly<S> {
        &self.d_rho[which as usize]
    }

    /// `|dbar rho|^2 = |rho_{z1bar}|^2 + |rho_{z2bar}|^2` as a polynomial.
    pub fn dbar_norm_sq(&self) -> WPoly<S> {
        let z1 = &self.d_rho[Wirtinger::Z1 as usize] * &self.d_rho[Wirtinger::Z1Bar as usize];
        let z2 = &self.d_rho[Wirtinger::Z2 as usize] * &self.d_rho[Wirtinger::Z2Bar as usize];
        &z1 + &z2
    }

    /// `sum_k f_{zk bar} rho_{zk}`
    pub fn op_dbar_n(&self, f: &WPoly<S>) -> BoundaryQuotient<S> {
        let a = &f.wirt(Wirtinger::Z1Bar) * self.d_rho(Wirtinger::Z1);
        let b = &f.wirt(Wirtinger::Z2Bar) * self.d_rho(Wirtinger::Z2);
        BoundaryQuotient { numerator: &a + &b }
    }

    /// `rho_{z2bar} f_{z1bar} - rho_{z1bar} f_{z2bar}`
    pub fn op_l(&self, f: &WPoly<S>) -> BoundaryQuotient<S> {
        let a = self.d_rho(Wirtinger::Z2Bar) * &f.wirt(Wirtinger::Z1Bar);
        let b = self.d_rho(Wirtinger::Z1Bar) * &f.wirt(Wirtinger::Z2Bar);
        BoundaryQuotient { numerator: &a - &b }
    }

    /// `N = rho_{z1} d/dz1bar + rho_{z2bar} d/dz2`
    pub fn op_n(&self, f: &WPoly<S>) -> WPoly<S> {
        let a = self.d_rho(Wirtinger::Z1) * &f.wirt(Wirtinger::Z1Bar);
        let b = self.d_rho(Wirtinger::Z2Bar) * &f.wirt(Wirtinger::Z2);
        &a + &b
    }

    /// `T = rho_{z2} d/dz1bar - rho_{z1bar} d/dz2`
    pub fn op_t(&self, f: &WPoly<S>) -> WPoly<S> {
        let a = self.d_rho(Wirtinger::Z2) * &f.wirt(Wirtinger::Z1Bar);
        let b = self.d_rho(Wirtinger::Z1Bar) * &f.wirt(Wirtinger::Z2);
        &a - &b
    }

    /// Canonical boundary representative: remainder modulo `(rho)`.
    pub fn reduce(&self, f: &WPoly<S>) -> WPoly<S> {
        f.normal_form(&self.rho)
    }

    /// Ideal membership `f in (rho)`.
    pub fn vanishes_on_boundary(&self, f: &WPoly<S>) -> bool {
        self.reduce(f).terms().all(|(_, c)| c.re.is_negligible() && c.im.is_negligible())
    }

    /// The two complex components of `(dbar_n - j L) f` or `(N - j T) f`,
    /// unnormalized. Uses `j (a + b j) = -conj(b) + conj(a) j`.
    pub fn residual_components(&self, kind: ResidualKind, f: &QFunction<S>) -> [WPoly<S>; 2] {
        let (n1, n2, t1, t2) = match kind {
            ResidualKind::Eq2 => (
                self.op_dbar_n(&f.f1).numerator,
                self.op_dbar_n(&f.f2).numerator,
                self.op_l(&f.f1).numerator,
                self.op_l(&f.f2).numerator,
            ),
            ResidualKind::Cor1 => (self.op_n(&f.f1), self.op_n(&f.f2), self.op_t(&f.f1), self.op_t(&f.f2)),
        };
        [&n1 + &t2.conj(), &n2 - &t1.conj()]
    }

    pub fn to_f64(&self) -> Domain<f64> {
        let shape = match &self.shape {
            Shape::Sphere => Shape::Sphere,
            Shape::Ellipsoid { r1, r2 } => Shape::Ellipsoid { r1: r1.to_f64(), r2: r2.to_f64() },
            Shape::Custom => Shape::Custom,
        };
        Domain::build(self.label.clone(), shape, self.rho.to_f64())
    }

    /// Boundary quadrature for the supported shapes.
    pub fn quadrature(&self, orders: QuadOrders) -> Result<SurfaceQuadrature> {
        match &self.shape {
            Shape::Sphere => SurfaceQuadrature::hopf(orders),
            Shape::Ellipsoid { r1, r2 } => SurfaceQuadrature::ellipsoid(r1.to_f64(), r2.to_f64(), orders),
            Shape::Custom => Err(Error::InvalidDomain(alloc::format!("no quadrature for {}", self.label))),
        }
    }
}

/// `Re(X) f = (X f + conj(X conj f)) / 2` for a complex-linear operator `X`.
pub fn real_part_of_operator<S: Real>(op: impl Fn(&WPoly<S>) -> WPoly<S>, f: &WPoly<S>) -> WPoly<S> {
    let sum = &op(f) + &op(&f.conj()).conj();
    sum.scale(&Complex::new(S::half(), S::zero()))
}

impl BoundaryQuotient<f64> {
    /// Numerator divided by `|dbar rho|` at a point.
    pub fn eval_normalized(&self, domain: &Domain<f64>, node: &SurfaceNode) -> Complex<f64> {
        let z = node.complex_pair();
        let norm = libm::sqrt(domain.dbar_norm_sq().eval(&z).re);
        self.numerator.eval(&z) / norm
    }
}
