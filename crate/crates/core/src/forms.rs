//! Boundary 3-forms and the Cauchy-Fueter / Bochner-Martinelli kernels.
//!
//! `dx[k]` is the plain product of `dx0 .. dx3` with `dx_k` deleted, in
//! increasing index order and without an extra sign. On a positively
//! oriented orthonormal boundary frame `dx[k] = (-1)^k nu_k dsigma`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quadrature::{det3, SurfaceNode, SurfaceQuadrature, Vec4};
use crate::quat::{ComplexPair, Quaternion};
use crate::scalar::RealModule;

pub const DEFAULT_SINGULAR_GUARD: f64 = 1e-12;
pub const DEFAULT_EVAL_DISTANCE: f64 = 0.1;

type C64 = Complex<f64>;
type H64 = Quaternion<f64>;

/// `sum_k c_k dx[k]`
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeForm<T> {
    pub coeffs: [T; 4],
}

/// `dx[k](t1, t2, t3)` for `k = 0..4`.
pub fn frame_minors(frame: &[Vec4; 3]) -> [f64; 4] {
    core::array::from_fn(|k| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != k).collect();
        det3(core::array::from_fn(|i| core::array::from_fn(|j| frame[j][rows[i]])))
    })
}

impl<T: RealModule<f64>> ThreeForm<T> {
    pub fn new(coeffs: [T; 4]) -> Self {
        Self { coeffs }
    }

    pub fn eval(&self, frame: &[Vec4; 3]) -> T {
        let m = frame_minors(frame);
        self.coeffs.iter().zip(m).fold(T::zero(), |acc, (c, mk)| acc + c.scale_real(&mk))
    }
}

/// `sigma = dx[0] - i dx[1] + j dx[2] + k dx[3]`
pub fn sigma() -> ThreeForm<H64> {
    ThreeForm::new([H64::new(1.0, 0.0, 0.0, 0.0), H64::new(0.0, -1.0, 0.0, 0.0), H64::j(), H64::k()])
}

/// Complex 1-form in the `dx_k` basis.
pub type OneForm = [C64; 4];

pub fn d_zeta(k: usize) -> OneForm {
    let mut f = [C64::new(0.0, 0.0); 4];
    f[2 * k] = C64::new(1.0, 0.0);
    f[2 * k + 1] = C64::new(0.0, 1.0);
    f
}

pub fn d_zeta_bar(k: usize) -> OneForm {
    d_zeta(k).map(|c| c.conj())
}

/// `a ^ b ^ c` expanded in the `dx[k]` basis.
pub fn wedge3(a: &OneForm, b: &OneForm, c: &OneForm) -> ThreeForm<C64> {
    ThreeForm::new(core::array::from_fn(|k| {
        let idx: Vec<usize> = (0..4).filter(|&r| r != k).collect();
        let m = |r: usize, s: usize| [a, b, c][r][idx[s]];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    }))
}

fn diff(zeta: &ComplexPair<f64>, z: &ComplexPair<f64>) -> (C64, C64, f64) {
    let d1 = zeta.z1 - z.z1;
    let d2 = zeta.z2 - z.z2;
    (d1, d2, d1.norm_sqr() + d2.norm_sqr())
}

fn guard(r2: f64, min: f64) -> Result<()> {
    let distance = libm::sqrt(r2);
    if distance < min {
        return Err(Error::SingularKernel { distance, guard: min });
    }
    Ok(())
}

/// Cauchy-Fueter kernel `G(p - q) = conj(p - q) / (2 pi^2 |p - q|^4)`.
pub fn kernel_g(p: &H64, q: &H64, min: f64) -> Result<H64> {
    let d = p.clone() - q.clone();
    let r2 = d.norm_sqr();
    guard(r2, min)?;
    Ok(d.conj().scale(&(1.0 / (2.0 * PI * PI * r2 * r2))))
}

/// Kernel for left-psi-regular functions:
/// `((y0-x0) - i(y1-x1) - j(y2-x2) + k(y3-x3)) / (2 pi^2 |p - q|^4)`.
pub fn kernel_gprime(p: &H64, q: &H64, min: f64) -> Result<H64> {
    let d = p.clone() - q.clone();
    let r2 = d.norm_sqr();
    guard(r2, min)?;
    let [y0, y1, y2, y3] = d.to_array();
    Ok(H64::new(y0, -y1, -y2, y3).scale(&(1.0 / (2.0 * PI * PI * r2 * r2))))
}

/// `g(zeta, z) = 1 / (4 pi^2 |zeta - z|^2)`
pub fn kernel_laplace_g(zeta: &ComplexPair<f64>, z: &ComplexPair<f64>, min: f64) -> Result<f64> {
    let (_, _, r2) = diff(zeta, z);
    guard(r2, min)?;
    Ok(1.0 / (4.0 * PI * PI * r2))
}

/// `G'(zeta - z) sigma(zeta)` as a quaternion-valued 3-form.
pub fn gprime_sigma(zeta: &ComplexPair<f64>, z: &ComplexPair<f64>, min: f64) -> Result<ThreeForm<H64>> {
    let k = kernel_gprime(&H64::from_complex_pair(zeta), &H64::from_complex_pair(z), min)?;
    Ok(ThreeForm::new(sigma().coeffs.map(|s| &k * &s)))
}

/// `G' sigma = U + omega j`, returned as `(U, omega)`.
pub fn split_u_omega(
    zeta: &ComplexPair<f64>,
    z: &ComplexPair<f64>,
    min: f64,
) -> Result<(ThreeForm<C64>, ThreeForm<C64>)> {
    let form = gprime_sigma(zeta, z, min)?;
    let pairs = form.coeffs.map(|c| c.to_complex_pair());
    Ok((ThreeForm::new(pairs.clone().map(|p| p.z1)), ThreeForm::new(pairs.map(|p| p.z2))))
}

/// `omega = -((zbar1 - zbar1') dzeta1 + (zbar2 - zbar2') dzeta2) ^ conj(dzeta1 ^ dzeta2)
/// / (4 pi^2 |zeta - z|^4)`, transcribed independently of `G' sigma`.
pub fn omega_display(zeta: &ComplexPair<f64>, z: &ComplexPair<f64>, min: f64) -> Result<ThreeForm<C64>> {
    let (d1, d2, r2) = diff(zeta, z);
    guard(r2, min)?;
    let w1 = wedge3(&d_zeta(0), &d_zeta_bar(0), &d_zeta_bar(1));
    let w2 = wedge3(&d_zeta(1), &d_zeta_bar(0), &d_zeta_bar(1));
    let s = -1.0 / (4.0 * PI * PI * r2 * r2);
    Ok(ThreeForm::new(core::array::from_fn(|k| (d1.conj() * w1.coeffs[k] + d2.conj() * w2.coeffs[k]) * s)))
}

/// Distance guards for kernel evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalGuard {
    /// Minimum distance from a target to the nearest boundary node.
    pub delta_eval: f64,
    /// Minimum `|zeta - z|` for any kernel evaluation.
    pub delta_min: f64,
}

impl Default for EvalGuard {
    fn default() -> Self {
        Self { delta_eval: DEFAULT_EVAL_DISTANCE, delta_min: DEFAULT_SINGULAR_GUARD }
    }
}

/// Kernel values at one `(node, target)` pair.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelSample {
    /// `G' sigma` evaluated on the node frame.
    pub gprime_sigma: H64,
    pub u: C64,
    pub omega: C64,
    pub g: f64,
}

pub fn kernel_sample(node: &SurfaceNode, z: &ComplexPair<f64>, min: f64) -> Result<KernelSample> {
    let zeta = node.complex_pair();
    let gs = gprime_sigma(&zeta, z, min)?.eval(&node.frame);
    let pair = gs.to_complex_pair();
    Ok(KernelSample { u: pair.z1, omega: pair.z2, g: kernel_laplace_g(&zeta, z, min)?, gprime_sigma: gs })
}

fn samples_for(quad: &SurfaceQuadrature, z: &ComplexPair<f64>, guard: &EvalGuard) -> Result<Vec<KernelSample>> {
    let p = H64::from_complex_pair(z).to_array();
    let distance = quad.min_distance(&p);
    if distance < guard.delta_eval {
        return Err(Error::TooCloseToBoundary { distance, min: guard.delta_eval });
    }
    quad.nodes().iter().map(|n| kernel_sample(n, z, guard.delta_min)).collect()
}

fn cf_from_samples(quad: &SurfaceQuadrature, samples: &[KernelSample], trace: &[H64]) -> H64 {
    let values: Vec<H64> =
        quad.nodes().iter().zip(samples).zip(trace).map(|((n, s), f)| (&s.gprime_sigma * f).scale(&n.weight)).collect();
    quad.reduce(&values)
}

fn bm_from_samples(quad: &SurfaceQuadrature, samples: &[KernelSample], f: &[C64], dbar_n_f: &[C64]) -> C64 {
    let values: Vec<C64> = quad
        .nodes()
        .iter()
        .zip(samples)
        .enumerate()
        .map(|(i, (n, s))| (s.u * f[i] + dbar_n_f[i] * (2.0 * s.g)) * n.weight)
        .collect();
    quad.reduce(&values)
}

fn prop1_from_samples(quad: &SurfaceQuadrature, samples: &[KernelSample], f: &[H64], lf: &[H64]) -> H64 {
    let j = H64::j();
    let values: Vec<H64> = quad
        .nodes()
        .iter()
        .zip(samples)
        .enumerate()
        .map(|(i, (n, s))| {
            let first = H64::complex_mul(&s.u, &f[i]);
            let second = (&j * &lf[i]).scale(&(2.0 * s.g));
            (first + second).scale(&n.weight)
        })
        .collect();
    quad.reduce(&values)
}

fn check_len(quad: &SurfaceQuadrature, len: usize) {
    assert_eq!(len, quad.len(), "trace must have one value per node");
}

/// `int G'(p - q) sigma(p) f(p)` over the boundary; `f(z)` inside and `0`
/// outside for psi-regular traces. `trace[i]` is `f` at node `i`.
pub fn cauchy_fueter_transform(
    quad: &SurfaceQuadrature,
    trace: &[H64],
    z: &ComplexPair<f64>,
    guard: &EvalGuard,
) -> Result<H64> {
    check_len(quad, trace.len());
    Ok(cf_from_samples(quad, &samples_for(quad, z, guard)?, trace))
}

/// `int U f + 2 int g dbar_n f dsigma`; reproduces harmonic `f`.
pub fn bm_harmonic_repr(
    quad: &SurfaceQuadrature,
    f: &[C64],
    dbar_n_f: &[C64],
    z: &ComplexPair<f64>,
    guard: &EvalGuard,
) -> Result<C64> {
    check_len(quad, f.len());
    check_len(quad, dbar_n_f.len());
    Ok(bm_from_samples(quad, &samples_for(quad, z, guard)?, f, dbar_n_f))
}

/// `int U f + 2 int g j L(f) dsigma` with `L(f) = L f1 + (L f2) j`.
pub fn prop1_reconstruction(
    quad: &SurfaceQuadrature,
    f: &[H64],
    lf: &[H64],
    z: &ComplexPair<f64>,
    guard: &EvalGuard,
) -> Result<H64> {
    check_len(quad, f.len());
    check_len(quad, lf.len());
    Ok(prop1_from_samples(quad, &samples_for(quad, z, guard)?, f, lf))
}

/// Kernel samples for a fixed set of targets, shared across transforms.
#[derive(Clone, Debug)]
pub struct KernelCache {
    targets: Vec<ComplexPair<f64>>,
    samples: Vec<Vec<KernelSample>>,
}

impl KernelCache {
    pub fn build(quad: &SurfaceQuadrature, targets: &[ComplexPair<f64>], guard: &EvalGuard) -> Result<Self> {
        let samples = targets.iter().map(|z| samples_for(quad, z, guard)).collect::<Result<Vec<_>>>()?;
        Ok(Self { targets: targets.to_vec(), samples })
    }

    pub fn targets(&self) -> &[ComplexPair<f64>] {
        &self.targets
    }

    pub fn cauchy_fueter(&self, quad: &SurfaceQuadrature, target: usize, trace: &[H64]) -> H64 {
        check_len(quad, trace.len());
        cf_from_samples(quad, &self.samples[target], trace)
    }

    pub fn bm_harmonic(&self, quad: &SurfaceQuadrature, target: usize, f: &[C64], dbar_n_f: &[C64]) -> C64 {
        check_len(quad, f.len());
        bm_from_samples(quad, &self.samples[target], f, dbar_n_f)
    }

    pub fn prop1(&self, quad: &SurfaceQuadrature, target: usize, f: &[H64], lf: &[H64]) -> H64 {
        check_len(quad, f.len());
        prop1_from_samples(quad, &self.samples[target], f, lf)
    }
}
