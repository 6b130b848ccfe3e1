//! Boundary criteria for psi-regularity, regularity and holomorphy.
//!
//! Verdicts come from exact ideal membership modulo `(rho)`; the float
//! values at quadrature nodes are diagnostics (sup norm and witnesses).

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex;

use crate::boundary::{Domain, ResidualKind};
use crate::error::{Error, Result};
use crate::forms::{cauchy_fueter_transform, EvalGuard};
use crate::poly::{WPoly, Wirtinger};
use crate::quadrature::{QuadOrders, SurfaceQuadrature};
use crate::quat::{ComplexPair, Quaternion};
use crate::scalar::Real;
use crate::wirtinger::{apply_dprime, is_psi_regular, QFunction};

type C64 = Complex<f64>;
type H64 = Quaternion<f64>;

pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-10;
pub const DEFAULT_WITNESS_THRESHOLD: f64 = 1e-3;
pub const DEFAULT_MAX_WITNESSES: usize = 5;
pub const DEFAULT_COMMON_ZERO_RATIO: f64 = 1e-2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    /// Float sup norms below this count as zero.
    pub zero: f64,
    /// Nodes whose residual modulus exceeds this are reported as witnesses.
    pub witness: f64,
    pub max_witnesses: usize,
    /// `h` is taken to have a boundary zero when `min |h|^2` over the nodes
    /// falls below this fraction of `max |h|^2`.
    pub common_zero_ratio: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            zero: DEFAULT_ZERO_THRESHOLD,
            witness: DEFAULT_WITNESS_THRESHOLD,
            max_witnesses: DEFAULT_MAX_WITNESSES,
            common_zero_ratio: DEFAULT_COMMON_ZERO_RATIO,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Criterion {
    Eq2,
    Cor1,
    Cor2,
    Thm4,
}

impl Criterion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Criterion::Eq2 => "eq2",
            Criterion::Cor1 => "cor1",
            Criterion::Cor2 => "cor2",
            Criterion::Thm4 => "thm4",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub node: usize,
    pub value: [C64; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub criterion: Criterion,
    pub domain: String,
    /// Both residual components lie in `(rho)`.
    pub exact_zero: bool,
    /// `max |r1|^2 + |r2|^2` over nodes, square-rooted.
    pub sup_norm: f64,
    pub nodes: usize,
    pub orders: QuadOrders,
    pub values: Vec<[C64; 2]>,
    pub witnesses: Vec<Witness>,
}

impl ResidualReport {
    /// The float diagnostics agree with the exact verdict.
    pub fn float_consistent(&self, th: &Thresholds) -> bool {
        !self.exact_zero || self.sup_norm < th.zero
    }
}

fn modulus(v: &[C64; 2]) -> f64 {
    libm::sqrt(v[0].norm_sqr() + v[1].norm_sqr())
}

fn build_report<S: Real>(
    criterion: Criterion,
    domain: &Domain<S>,
    components: &[WPoly<S>; 2],
    quad: &SurfaceQuadrature,
    th: &Thresholds,
) -> ResidualReport {
    let exact_zero = components.iter().all(|c| domain.vanishes_on_boundary(c));
    let floats = [components[0].to_f64(), components[1].to_f64()];
    let values: Vec<[C64; 2]> = quad
        .nodes()
        .iter()
        .map(|n| {
            let z = n.complex_pair();
            [floats[0].eval(&z), floats[1].eval(&z)]
        })
        .collect();
    let sup_norm = values.iter().map(modulus).fold(0.0, f64::max);
    let mut ranked: Vec<(usize, f64)> =
        values.iter().map(modulus).enumerate().filter(|(_, m)| *m > th.witness).collect();
    ranked.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let witnesses =
        ranked.into_iter().take(th.max_witnesses).map(|(node, _)| Witness { node, value: values[node] }).collect();
    ResidualReport {
        criterion,
        domain: String::from(domain.label()),
        exact_zero,
        sup_norm,
        nodes: quad.len(),
        orders: quad.orders(),
        values,
        witnesses,
    }
}

fn require_harmonic<S: Real>(f: &QFunction<S>) -> Result<()> {
    if !f.f1.is_harmonic() {
        return Err(Error::NotHarmonic { what: "f1" });
    }
    if !f.f2.is_harmonic() {
        return Err(Error::NotHarmonic { what: "f2" });
    }
    Ok(())
}

/// `(dbar_n - j L) f = 0` on the boundary; for harmonic `f` this holds iff
/// `f` is psi-regular.
pub fn check_eq2<S: Real>(
    f: &QFunction<S>,
    domain: &Domain<S>,
    quad: &SurfaceQuadrature,
    th: &Thresholds,
) -> Result<ResidualReport> {
    require_harmonic(f)?;
    let r = domain.residual_components(ResidualKind::Eq2, f);
    Ok(build_report(Criterion::Eq2, domain, &r, quad, th))
}

/// `(N - j T) f = 0` on the boundary; for harmonic `f` this holds iff `f`
/// is regular.
pub fn check_cor1<S: Real>(
    f: &QFunction<S>,
    domain: &Domain<S>,
    quad: &SurfaceQuadrature,
    th: &Thresholds,
) -> Result<ResidualReport> {
    require_harmonic(f)?;
    let r = domain.residual_components(ResidualKind::Cor1, f);
    Ok(build_report(Criterion::Cor1, domain, &r, quad, th))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cor2Report {
    pub report: ResidualReport,
    /// `D' f = 0`, the conclusion the single condition should force.
    pub psi_regular: bool,
}

/// `a dbar_n f1 + b dbar_n f2 = -a conj(L f2) + b conj(L f1)`.
pub fn check_cor2<S: Real>(
    f: &QFunction<S>,
    a: &Complex<S>,
    b: &Complex<S>,
    domain: &Domain<S>,
    quad: &SurfaceQuadrature,
    th: &Thresholds,
) -> Result<Cor2Report> {
    if a.re.is_negligible() && a.im.is_negligible() && b.re.is_negligible() && b.im.is_negligible() {
        return Err(Error::ZeroCoefficients);
    }
    require_harmonic(f)?;
    let [r1, r2] = domain.residual_components(ResidualKind::Eq2, f);
    let combined = &r1.scale(a) + &r2.scale(b);
    let report = build_report(Criterion::Cor2, domain, &[combined, WPoly::zero()], quad, th);
    Ok(Cor2Report { report, psi_regular: apply_dprime(f).is_zero() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakKind {
    /// `int conj(f1) dbar_n phi = int f2 L phi`
    Eq3First,
    /// `int conj(f2) dbar_n phi = -int f1 L phi`
    Eq3Second,
    /// `int conj(f) (dbar_n - j L) phi dsigma = 0`
    Eq4,
}

/// Values of `f` at the quadrature nodes.
pub fn quaternion_trace(quad: &SurfaceQuadrature, f: &QFunction<f64>) -> Vec<H64> {
    quad.nodes().iter().map(|n| f.eval(&n.complex_pair())).collect()
}

pub fn complex_trace(quad: &SurfaceQuadrature, f: &WPoly<f64>) -> Vec<C64> {
    quad.nodes().iter().map(|n| f.eval(&n.complex_pair())).collect()
}

/// Normalized `dbar_n f` at the nodes.
pub fn dbar_n_trace(quad: &SurfaceQuadrature, domain: &Domain<f64>, f: &WPoly<f64>) -> Vec<C64> {
    let op = domain.op_dbar_n(f);
    quad.nodes().iter().map(|n| op.eval_normalized(domain, n)).collect()
}

/// Normalized `L f` at the nodes.
pub fn l_trace(quad: &SurfaceQuadrature, domain: &Domain<f64>, f: &WPoly<f64>) -> Vec<C64> {
    let op = domain.op_l(f);
    quad.nodes().iter().map(|n| op.eval_normalized(domain, n)).collect()
}

/// `L(f) = L f1 + (L f2) j` at the nodes.
pub fn quaternion_l_trace(quad: &SurfaceQuadrature, domain: &Domain<f64>, f: &QFunction<f64>) -> Vec<H64> {
    let a = l_trace(quad, domain, &f.f1);
    let b = l_trace(quad, domain, &f.f2);
    a.into_iter().zip(b).map(|(x, y)| H64::from_complex_pair(&ComplexPair::new(x, y))).collect()
}

/// Normalized `dbar_n phi` and `L phi` at the nodes, for a family of
/// harmonic test functions `phi`.
#[derive(Clone, Debug)]
pub struct WeakTests {
    dbar_n: Vec<Vec<C64>>,
    l: Vec<Vec<C64>>,
}

impl WeakTests {
    pub fn new(quad: &SurfaceQuadrature, domain: &Domain<f64>, phi_basis: &[WPoly<f64>]) -> Self {
        Self {
            dbar_n: phi_basis.iter().map(|phi| dbar_n_trace(quad, domain, phi)).collect(),
            l: phi_basis.iter().map(|phi| l_trace(quad, domain, phi)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.dbar_n.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dbar_n.is_empty()
    }

    /// Largest defect over the family, given the trace of `f` at the nodes.
    pub fn max_defect(&self, kind: WeakKind, quad: &SurfaceQuadrature, trace: &[H64]) -> f64 {
        assert_eq!(trace.len(), quad.len(), "trace must have one value per node");
        let pairs: Vec<ComplexPair<f64>> = trace.iter().map(|q| q.to_complex_pair()).collect();
        self.dbar_n
            .iter()
            .zip(&self.l)
            .map(|(dn, l)| {
                let values: Vec<H64> = quad
                    .nodes()
                    .iter()
                    .enumerate()
                    .map(|(i, n)| {
                        let (f1, f2) = (pairs[i].z1, pairs[i].z2);
                        let v = match kind {
                            WeakKind::Eq3First => {
                                H64::from_complex_pair(&ComplexPair::from_complex(f1.conj() * dn[i] - f2 * l[i]))
                            }
                            WeakKind::Eq3Second => {
                                H64::from_complex_pair(&ComplexPair::from_complex(f2.conj() * dn[i] + f1 * l[i]))
                            }
                            WeakKind::Eq4 => {
                                let op = H64::from_complex_pair(&ComplexPair::new(dn[i], -l[i].conj()));
                                &trace[i].conj() * &op
                            }
                        };
                        v.scale(&n.weight)
                    })
                    .collect();
                quad.reduce(&values).abs()
            })
            .fold(0.0, f64::max)
    }
}

/// Largest defect of a weak condition over a family of harmonic test
/// functions `phi`, given the trace of `f` at the nodes.
pub fn weak_condition(
    kind: WeakKind,
    quad: &SurfaceQuadrature,
    domain: &Domain<f64>,
    trace: &[H64],
    phi_basis: &[WPoly<f64>],
) -> f64 {
    WeakTests::new(quad, domain, phi_basis).max_defect(kind, quad, trace)
}

/// `max |F^-(z)|` over exterior sample points.
pub fn exterior_vanishing(
    quad: &SurfaceQuadrature,
    domain: &Domain<f64>,
    trace: &[H64],
    points: &[ComplexPair<f64>],
    guard: &EvalGuard,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for z in points {
        if domain.rho().eval(z).re <= 0.0 {
            return Err(Error::NotExterior { point: H64::from_complex_pair(z).to_array() });
        }
        worst = worst.max(cauchy_fueter_transform(quad, trace, z, guard)?.abs());
    }
    Ok(worst)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Thm4Report {
    pub report: ResidualReport,
    /// `h1 f` and `h2 f` are harmonic.
    pub hypothesis_harmonic: bool,
    /// `d f / d zbar1 = d f / d zbar2 = 0`.
    pub holomorphic: bool,
}

impl Thm4Report {
    /// The criterion says holomorphic.
    pub fn verdict_holomorphic(&self) -> bool {
        self.report.exact_zero
    }

    /// A zero residual (under the harmonic hypothesis) forces holomorphy, and
    /// a nonzero residual always rules it out.
    pub fn consistent(&self) -> bool {
        if self.report.exact_zero {
            !self.hypothesis_harmonic || self.holomorphic
        } else {
            !self.holomorphic
        }
    }
}

/// `h1 dbar_n f = conj(h2 L f)` on the boundary, unnormalized.
pub fn check_thm4<S: Real>(
    f: &WPoly<S>,
    h1: &WPoly<S>,
    h2: &WPoly<S>,
    domain: &Domain<S>,
    quad: &SurfaceQuadrature,
    th: &Thresholds,
) -> Result<Thm4Report> {
    if !h1.is_holomorphic() {
        return Err(Error::NotHolomorphic { what: "h1" });
    }
    if !h2.is_holomorphic() {
        return Err(Error::NotHolomorphic { what: "h2" });
    }
    let (g1, g2) = (h1.to_f64(), h2.to_f64());
    let sizes: Vec<f64> = quad
        .nodes()
        .iter()
        .map(|n| {
            let z = n.complex_pair();
            g1.eval(&z).norm_sqr() + g2.eval(&z).norm_sqr()
        })
        .collect();
    let largest = sizes.iter().copied().fold(0.0, f64::max);
    if let Some((node, &magnitude)) = sizes.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)) {
        if magnitude <= th.common_zero_ratio * largest {
            return Err(Error::CommonBoundaryZero { node, magnitude });
        }
    }
    let lhs = h1 * &domain.op_dbar_n(f).numerator;
    let rhs = (h2 * &domain.op_l(f).numerator).conj();
    let report = build_report(Criterion::Thm4, domain, &[&lhs - &rhs, WPoly::zero()], quad, th);
    Ok(Thm4Report {
        report,
        hypothesis_harmonic: (h1 * f).is_harmonic() && (h2 * f).is_harmonic(),
        holomorphic: f.wirt(Wirtinger::Z1Bar).is_zero() && f.wirt(Wirtinger::Z2Bar).is_zero(),
    })
}

/// `L f1 = 0` on the boundary.
pub fn is_cr<S: Real>(f1: &WPoly<S>, domain: &Domain<S>) -> bool {
    domain.vanishes_on_boundary(&domain.op_l(f1).numerator)
}

/// `D' f = 0`; re-exported for verdict comparisons.
pub fn psi_regular<S: Real>(f: &QFunction<S>) -> bool {
    is_psi_regular(f)
}
