//! The `dbar`-Neumann problem on the unit ball, solved exactly.
//!
//! Restricted to `S^3`, every polynomial is a sum of bigraded harmonics
//! `h_{p,q}` (degree `p` in `z`, `q` in `conj z`). On the sphere
//! `dbar_n = zbar1 d/dzbar1 + zbar2 d/dzbar2` acts on `h_{p,q}` as
//! multiplication by `q`, so `dbar_n f2 = g` is solved componentwise.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_complex::Complex;

use crate::boundary::Domain;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{bidegree, Exponent, WPoly};
use crate::scalar::Real;
use crate::wirtinger::{is_psi_regular, QFunction};

pub const DEFAULT_MAX_DEGREE: u32 = 10;

/// Monomials of bidegree `(p, q)` in ascending exponent order.
pub fn bidegree_monomials(p: u32, q: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(((p + 1) * (q + 1)) as usize);
    for a in 0..=p {
        for b in 0..=q {
            out.push([a, b, p - a, q - b]);
        }
    }
    out.sort();
    out
}

/// Basis of harmonic polynomials of bidegree `(p, q)`: the nullspace of the
/// Laplacian on the monomial space, with rational coefficients.
pub fn harmonic_basis<S: Real>(p: u32, q: u32) -> Vec<WPoly<S>> {
    let domain = bidegree_monomials(p, q);
    if p == 0 || q == 0 {
        return domain.iter().map(|e| WPoly::monomial(*e, Complex::new(S::one(), S::zero()))).collect();
    }
    let target = bidegree_monomials(p - 1, q - 1);
    let columns: Vec<Vec<S>> = domain
        .iter()
        .map(|e| {
            let lap = WPoly::<S>::monomial(*e, Complex::new(S::one(), S::zero())).laplacian();
            target.iter().map(|t| lap.coeff(t).re).collect()
        })
        .collect();
    Matrix::from_columns(target.len(), &columns)
        .nullspace()
        .into_iter()
        .map(|v| WPoly::from_terms(domain.iter().zip(v).map(|(e, c)| (*e, Complex::new(c, S::zero())))))
        .collect()
}

/// Change of basis for one bidegree block: monomial coordinates to the
/// coordinates in `{|z|^{2j} h : h in basis(H_{p-j,q-j})}`.
#[derive(Clone, Debug)]
struct Block<S> {
    monomials: Vec<Exponent>,
    /// For each basis vector: `(j, harmonic basis element of H_{p-j,q-j})`.
    basis: Vec<(u32, WPoly<S>)>,
    inverse: Matrix<S>,
}

/// Sphere-restricted polynomial split into harmonic bigraded pieces.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedHarmonic<S> {
    components: BTreeMap<(u32, u32), WPoly<S>>,
}

impl<S: Real> BigradedHarmonic<S> {
    pub fn from_components(components: impl IntoIterator<Item = ((u32, u32), WPoly<S>)>) -> Self {
        let mut out = Self { components: BTreeMap::new() };
        for (k, h) in components {
            out.add(k, h);
        }
        out
    }

    fn add(&mut self, key: (u32, u32), h: WPoly<S>) {
        let sum = match self.components.remove(&key) {
            Some(old) => &old + &h,
            None => h,
        };
        if !sum.is_zero() {
            self.components.insert(key, sum);
        }
    }

    pub fn components(&self) -> &BTreeMap<(u32, u32), WPoly<S>> {
        &self.components
    }

    pub fn get(&self, p: u32, q: u32) -> Option<&WPoly<S>> {
        self.components.get(&(p, q))
    }

    /// The harmonic polynomial `sum h_{p,q}`.
    pub fn sum(&self) -> WPoly<S> {
        self.components.values().fold(WPoly::zero(), |acc, h| &acc + h)
    }

    /// Nonzero components with `q = 0` (the holomorphic part).
    pub fn holomorphic_bidegrees(&self) -> Vec<(u32, u32)> {
        self.components.keys().filter(|(_, q)| *q == 0).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub compatible: bool,
    pub offending: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelVerdict {
    /// `C(f) = 0` modulo `(rho)`.
    pub restriction_vanishes: bool,
    pub psi_regular: bool,
    pub second_component_holomorphic: bool,
}

impl KernelVerdict {
    /// In `ker C`, i.e. `f = f2 j` with holomorphic `f2`.
    pub fn in_kernel(&self) -> bool {
        self.restriction_vanishes && self.psi_regular
    }

    /// The kernel description holds for this instance.
    pub fn consistent(&self) -> bool {
        !self.in_kernel() || self.second_component_holomorphic
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cor4Record<S> {
    pub f1: WPoly<S>,
    pub r: QFunction<S>,
    pub is_cr: bool,
    pub r_holomorphic: bool,
    pub right_inverse: bool,
    pub psi_regular: bool,
}

impl<S> Cor4Record<S> {
    pub fn holds(&self) -> bool {
        self.is_cr == self.r_holomorphic && self.right_inverse && self.psi_regular
    }
}

/// Precomputed bigraded blocks on the unit sphere up to a total degree.
#[derive(Clone, Debug)]
pub struct BallNeumann<S> {
    max_degree: u32,
    blocks: BTreeMap<(u32, u32), Block<S>>,
    sphere: Domain<S>,
}

impl<S: Real> BallNeumann<S> {
    pub fn new(max_degree: u32) -> Self {
        let mut harmonic: BTreeMap<(u32, u32), Vec<WPoly<S>>> = BTreeMap::new();
        for n in 0..=max_degree {
            for p in 0..=n {
                harmonic.insert((p, n - p), harmonic_basis(p, n - p));
            }
        }
        let r2 = &(&WPoly::<S>::z1() * &WPoly::z1bar()) + &(&WPoly::z2() * &WPoly::z2bar());
        let mut blocks = BTreeMap::new();
        for &(p, q) in harmonic.keys() {
            let monomials = bidegree_monomials(p, q);
            let mut basis = Vec::new();
            for j in 0..=p.min(q) {
                let weight = r2.pow(j);
                for h in &harmonic[&(p - j, q - j)] {
                    basis.push((j, (&weight * h, h.clone())));
                }
            }
            let columns: Vec<Vec<S>> =
                basis.iter().map(|(_, (full, _))| monomials.iter().map(|e| full.coeff(e).re).collect()).collect();
            let inverse = Matrix::from_columns(monomials.len(), &columns)
                .inverse()
                .expect("bigraded harmonic basis spans the monomial block");
            let basis = basis.into_iter().map(|(j, (_, h))| (j, h)).collect();
            blocks.insert((p, q), Block { monomials, basis, inverse });
        }
        Self { max_degree, blocks, sphere: Domain::unit_sphere() }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn sphere(&self) -> &Domain<S> {
        &self.sphere
    }

    fn check_degree(&self, f: &WPoly<S>) -> Result<()> {
        match f.degree() {
            Some(d) if d > self.max_degree => Err(Error::DegreeTooHigh { degree: d, max: self.max_degree }),
            _ => Ok(()),
        }
    }

    /// Components `h_{p,q}` with `sum h_{p,q} = P` on `S^3`.
    pub fn harmonic_decompose(&self, poly: &WPoly<S>) -> Result<BigradedHarmonic<S>> {
        self.check_degree(poly)?;
        let mut out = BigradedHarmonic::from_components([]);
        for ((p, q), part) in poly.bidegree_parts() {
            let block = &self.blocks[&(p, q)];
            let coords: Vec<Complex<S>> = block.monomials.iter().map(|e| part.coeff(e)).collect();
            let weights = block.inverse.mul_complex_vec(&coords);
            for ((j, h), w) in block.basis.iter().zip(weights) {
                if !(w.re.is_negligible() && w.im.is_negligible()) {
                    out.add((p - j, q - j), h.scale(&w));
                }
            }
        }
        Ok(out)
    }

    /// Harmonic polynomial with the same values on `S^3`.
    pub fn harmonic_extension(&self, poly: &WPoly<S>) -> Result<WPoly<S>> {
        Ok(self.harmonic_decompose(poly)?.sum())
    }

    /// `h_{p,q} -> q h_{p,q}`
    pub fn dbar_n_diagonal(&self, h: &BigradedHarmonic<S>) -> BigradedHarmonic<S> {
        BigradedHarmonic::from_components(
            h.components.iter().map(|(&(p, q), v)| ((p, q), v.scale(&Complex::new(S::from_i64(q.into()), S::zero())))),
        )
    }

    /// Orthogonality to holomorphic functions on `S^3`.
    pub fn compatibility_check(&self, g: &WPoly<S>) -> Result<Compatibility> {
        let offending = self.harmonic_decompose(g)?.holomorphic_bidegrees();
        Ok(Compatibility { compatible: offending.is_empty(), offending })
    }

    /// The solution of `dbar_n f2 = g` on `S^3` orthogonal to holomorphic
    /// functions: `f2 = sum_{q >= 1} h_{p,q} / q`.
    pub fn neumann_solve(&self, g: &WPoly<S>) -> Result<WPoly<S>> {
        let h = self.harmonic_decompose(g)?;
        let offending = h.holomorphic_bidegrees();
        if !offending.is_empty() {
            return Err(Error::Incompatible { components: offending });
        }
        Ok(h.components.iter().fold(WPoly::zero(), |acc, (&(_, q), v)| {
            &acc + &v.scale(&Complex::new(S::one() / S::from_i64(q.into()), S::zero()))
        }))
    }

    /// `R(f1) = f1 + f2 j` with `dbar_n f2 = conj(L f1)`.
    pub fn operator_r(&self, f1: &WPoly<S>) -> Result<QFunction<S>> {
        if !f1.is_harmonic() {
            return Err(Error::NotHarmonic { what: "f1" });
        }
        let data = self.sphere.reduce(&self.sphere.op_l(f1).numerator.conj());
        let f2 = match self.neumann_solve(&data) {
            Ok(f2) => f2,
            Err(Error::Incompatible { components }) => return Err(Error::ConstructionFailed { components }),
            Err(e) => return Err(e),
        };
        Ok(QFunction::new(f1.clone(), f2))
    }

    /// `C(f)`: the first component restricted to the sphere.
    pub fn operator_c(&self, f: &QFunction<S>) -> WPoly<S> {
        self.sphere.reduce(&f.f1)
    }

    pub fn kernel_verdict(&self, f: &QFunction<S>) -> KernelVerdict {
        KernelVerdict {
            restriction_vanishes: self.operator_c(f).is_zero(),
            psi_regular: is_psi_regular(f),
            second_component_holomorphic: f.f2.is_holomorphic(),
        }
    }

    /// `L f1 = 0` on the sphere.
    pub fn is_cr(&self, f1: &WPoly<S>) -> bool {
        self.sphere.vanishes_on_boundary(&self.sphere.op_l(f1).numerator)
    }

    /// Checks, for boundary data `f1` (replaced by its harmonic extension),
    /// that `f1` is CR iff `R(f1)` is a holomorphic pair, and that
    /// `C(R(f1)) = f1` on the sphere.
    pub fn cor4_instance_check(&self, f1: &WPoly<S>) -> Result<Cor4Record<S>> {
        let ext = self.harmonic_extension(f1)?;
        let r = self.operator_r(&ext)?;
        let right_inverse = self.sphere.vanishes_on_boundary(&(&self.operator_c(&r) - f1));
        Ok(Cor4Record {
            f1: f1.clone(),
            is_cr: self.is_cr(f1),
            r_holomorphic: r.is_holomorphic_pair(),
            right_inverse,
            psi_regular: is_psi_regular(&r),
            r,
        })
    }
}

/// `(p, q)` of a bihomogeneous polynomial.
pub fn bidegree_of<S: Real>(f: &WPoly<S>) -> Option<(u32, u32)> {
    let mut it = f.terms().map(|(e, _)| bidegree(e));
    let first = it.next()?;
    it.all(|b| b == first).then_some(first)
}
