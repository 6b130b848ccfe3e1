//! Product quadrature on `S^3` and on axis-aligned ellipsoids in Hopf
//! coordinates `z1 = e^{i xi1} r1 cos(eta)`, `z2 = e^{i xi2} r2 sin(eta)`:
//! Gauss-Legendre in `eta in [0, pi/2]`, trapezoidal in `xi1, xi2`.
//!
//! Every node carries its surface weight `dsigma`, the outward unit normal and
//! an orthonormal tangent frame `(t1, t2, t3)` with `det[nu, t1, t2, t3] > 0`
//! for the standard orientation `dx0 ^ dx1 ^ dx2 ^ dx3` (which is the one
//! given by `dz1 ^ dz2 ^ conj(dz1) ^ conj(dz2) / 4`).

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quat::ComplexPair;
use crate::scalar::{qi, RealModule, Q};

pub type Vec4 = [f64; 4];

/// Gauss-Legendre rule on `[-1, 1]`, nodes ascending.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = alloc::vec![0.0; n];
        let mut weights = alloc::vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = libm::cos(PI * (i as f64 + 0.75) / (nf + 0.5));
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                if n == 1 {
                    p0 = 1.0;
                }
                dp = nf * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if libm::fabs(dx) < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }
}

/// Numbers of points in `eta`, `xi1`, `xi2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadOrders {
    pub eta: usize,
    pub xi1: usize,
    pub xi2: usize,
}

impl QuadOrders {
    pub fn new(eta: usize, xi1: usize, xi2: usize) -> Self {
        Self { eta, xi1, xi2 }
    }

    pub fn uniform(n: usize) -> Self {
        Self::new(n, n, n)
    }

    pub fn validate(&self) -> Result<()> {
        for order in [self.eta, self.xi1, self.xi2] {
            if order < 2 {
                return Err(Error::InvalidOrder { order, min: 2 });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceNode {
    pub point: Vec4,
    pub weight: f64,
    pub normal: Vec4,
    pub frame: [Vec4; 3],
    /// Construction index; fixes the reduction tree.
    pub key: u64,
}

impl SurfaceNode {
    pub fn complex_pair(&self) -> ComplexPair<f64> {
        ComplexPair::new(Complex::new(self.point[0], self.point[1]), Complex::new(self.point[2], self.point[3]))
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceQuadrature {
    label: String,
    orders: QuadOrders,
    nodes: Vec<SurfaceNode>,
    reduction_order: Vec<usize>,
}

fn dot(a: &Vec4, b: &Vec4) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(a: f64, x: &Vec4, y: &Vec4) -> Vec4 {
    core::array::from_fn(|k| a * x[k] + y[k])
}

fn normalized(v: &Vec4) -> Vec4 {
    let n = libm::sqrt(dot(v, v));
    core::array::from_fn(|k| v[k] / n)
}

/// Determinant of the 4x4 matrix with the given columns.
pub fn det4(cols: [&Vec4; 4]) -> f64 {
    let m = |r: usize, c: usize| cols[c][r];
    let mut det = 0.0;
    for r in 0..4 {
        let rows: Vec<usize> = (0..4).filter(|&x| x != r).collect();
        let minor = det3([
            [m(rows[0], 1), m(rows[0], 2), m(rows[0], 3)],
            [m(rows[1], 1), m(rows[1], 2), m(rows[1], 3)],
            [m(rows[2], 1), m(rows[2], 2), m(rows[2], 3)],
        ]);
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m(r, 0) * minor;
    }
    det
}

pub fn det3(a: [[f64; 3]; 3]) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Gram-Schmidt on the tangent triple, then swaps the last two vectors if
/// `(normal, frame)` is negatively oriented. Returns the frame and the
/// square root of the Gram determinant of the input triple.
fn orient_frame(normal: &Vec4, tangents: [Vec4; 3]) -> ([Vec4; 3], f64) {
    let [a, b, c] = tangents;
    let na = libm::sqrt(dot(&a, &a));
    let e1 = normalized(&a);
    let b1 = axpy(-dot(&b, &e1), &e1, &b);
    let nb = libm::sqrt(dot(&b1, &b1));
    let e2 = normalized(&b1);
    let c1 = axpy(-dot(&c, &e1), &e1, &c);
    let c2 = axpy(-dot(&c1, &e2), &e2, &c1);
    let nc = libm::sqrt(dot(&c2, &c2));
    let e3 = normalized(&c2);
    let jac = na * nb * nc;
    if det4([normal, &e1, &e2, &e3]) >= 0.0 {
        ([e1, e2, e3], jac)
    } else {
        ([e1, e3, e2], jac)
    }
}

struct HopfGrid {
    eta: Vec<(f64, f64)>,
    xi1: Vec<f64>,
    xi2: Vec<f64>,
    dxi: f64,
}

impl HopfGrid {
    fn new(orders: QuadOrders) -> Self {
        let gl = GaussLegendre::new(orders.eta);
        let half = PI / 4.0;
        let eta = gl.nodes.iter().zip(&gl.weights).map(|(x, w)| (half * (x + 1.0), half * w)).collect();
        let uniform = |n: usize| (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect::<Vec<_>>();
        Self {
            eta,
            xi1: uniform(orders.xi1),
            xi2: uniform(orders.xi2),
            dxi: (2.0 * PI / orders.xi1 as f64) * (2.0 * PI / orders.xi2 as f64),
        }
    }
}

impl SurfaceQuadrature {
    fn from_nodes(label: String, orders: QuadOrders, nodes: Vec<SurfaceNode>) -> Self {
        let mut reduction_order: Vec<usize> = (0..nodes.len()).collect();
        reduction_order.sort_by_key(|&i| nodes[i].key);
        Self { label, orders, nodes, reduction_order }
    }

    /// Quadrature on the unit sphere `S^3`.
    pub fn hopf(orders: QuadOrders) -> Result<Self> {
        orders.validate()?;
        let grid = HopfGrid::new(orders);
        let mut nodes = Vec::with_capacity(orders.eta * orders.xi1 * orders.xi2);
        for (ie, &(eta, w_eta)) in grid.eta.iter().enumerate() {
            let (s, c) = (libm::sin(eta), libm::cos(eta));
            for (i1, &xi1) in grid.xi1.iter().enumerate() {
                let (s1, c1) = (libm::sin(xi1), libm::cos(xi1));
                for (i2, &xi2) in grid.xi2.iter().enumerate() {
                    let (s2, c2) = (libm::sin(xi2), libm::cos(xi2));
                    let point = [c * c1, c * s1, s * c2, s * s2];
                    let d_eta = [-s * c1, -s * s1, c * c2, c * s2];
                    let d_xi1 = [-s1, c1, 0.0, 0.0];
                    let d_xi2 = [0.0, 0.0, -s2, c2];
                    let (frame, _) = orient_frame(&point, [d_eta, d_xi1, d_xi2]);
                    let key = ((ie * orders.xi1 + i1) * orders.xi2 + i2) as u64;
                    nodes.push(SurfaceNode { point, weight: s * c * w_eta * grid.dxi, normal: point, frame, key });
                }
            }
        }
        Ok(Self::from_nodes(String::from("sphere"), orders, nodes))
    }

    /// Quadrature on `|z1|^2/r1^2 + |z2|^2/r2^2 = 1`, the pushforward of the
    /// Hopf grid under `(z1, z2) -> (r1 z1, r2 z2)`.
    pub fn ellipsoid(r1: f64, r2: f64, orders: QuadOrders) -> Result<Self> {
        orders.validate()?;
        if !(r1 > 0.0 && r2 > 0.0 && r1.is_finite() && r2.is_finite()) {
            return Err(Error::InvalidDomain(alloc::format!("ellipsoid axes must be positive, got ({r1}, {r2})")));
        }
        let grid = HopfGrid::new(orders);
        let mut nodes = Vec::with_capacity(orders.eta * orders.xi1 * orders.xi2);
        for (ie, &(eta, w_eta)) in grid.eta.iter().enumerate() {
            let (s, c) = (libm::sin(eta), libm::cos(eta));
            for (i1, &xi1) in grid.xi1.iter().enumerate() {
                let (s1, c1) = (libm::sin(xi1), libm::cos(xi1));
                for (i2, &xi2) in grid.xi2.iter().enumerate() {
                    let (s2, c2) = (libm::sin(xi2), libm::cos(xi2));
                    let point = [r1 * c * c1, r1 * c * s1, r2 * s * c2, r2 * s * s2];
                    let d_eta = [-r1 * s * c1, -r1 * s * s1, r2 * c * c2, r2 * c * s2];
                    let d_xi1 = [-r1 * c * s1, r1 * c * c1, 0.0, 0.0];
                    let d_xi2 = [0.0, 0.0, -r2 * s * s2, r2 * s * c2];
                    let grad = [point[0] / (r1 * r1), point[1] / (r1 * r1), point[2] / (r2 * r2), point[3] / (r2 * r2)];
                    let normal = normalized(&grad);
                    let (frame, jac) = orient_frame(&normal, [d_eta, d_xi1, d_xi2]);
                    let key = ((ie * orders.xi1 + i1) * orders.xi2 + i2) as u64;
                    nodes.push(SurfaceNode { point, weight: jac * w_eta * grid.dxi, normal, frame, key });
                }
            }
        }
        Ok(Self::from_nodes(alloc::format!("ellipsoid({r1}, {r2})"), orders, nodes))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn orders(&self) -> QuadOrders {
        self.orders
    }

    pub fn nodes(&self) -> &[SurfaceNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Same nodes stored in a different order; the reduction tree follows the
    /// node keys, so integrals are bit-identical.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let nodes = perm.iter().map(|&i| self.nodes[i].clone()).collect();
        Self::from_nodes(self.label.clone(), self.orders, nodes)
    }

    pub fn total_weight(&self) -> f64 {
        self.integrate(|_| 1.0)
    }

    /// `sum_i w_i f(node_i)` with a fixed pairwise reduction tree.
    pub fn integrate<T: RealModule<f64>>(&self, f: impl Fn(&SurfaceNode) -> T) -> T {
        let values: Vec<T> = self.nodes.iter().map(|n| f(n).scale_real(&n.weight)).collect();
        self.reduce(&values)
    }

    /// Pairwise sum of already weighted per-node values given in storage
    /// order; allows callers to evaluate nodes in parallel.
    pub fn reduce<T: RealModule<f64>>(&self, weighted: &[T]) -> T {
        assert_eq!(weighted.len(), self.nodes.len(), "one value per node");
        let ordered: Vec<T> = self.reduction_order.iter().map(|&i| weighted[i].clone()).collect();
        pairwise_sum(&ordered)
    }

    /// Smallest distance from `z` to a node.
    pub fn min_distance(&self, z: &Vec4) -> f64 {
        self.nodes
            .iter()
            .map(|n| {
                let d: Vec4 = core::array::from_fn(|k| n.point[k] - z[k]);
                libm::sqrt(dot(&d, &d))
            })
            .fold(f64::INFINITY, f64::min)
    }
}

fn pairwise_sum<T: RealModule<f64>>(values: &[T]) -> T {
    match values.len() {
        0 => T::zero(),
        1 => values[0].clone(),
        n => {
            let (a, b) = values.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// `int_{S^3} z1^a conj(z1)^b z2^c conj(z2)^d dsigma` as a rational multiple
/// of `pi^2`: zero unless `a = b` and `c = d`, else `2 a! c! / (a + c + 1)!`.
pub fn sphere_monomial_integral(a: u32, b: u32, c: u32, d: u32) -> Q {
    if a != b || c != d {
        return Q::zero();
    }
    let fact = |n: u32| (1..=n).fold(qi(1), |acc, k| acc * qi(i64::from(k)));
    qi(2) * fact(a) * fact(c) / fact(a + c + 1)
}

pub fn sphere_monomial_integral_f64(a: u32, b: u32, c: u32, d: u32) -> f64 {
    use crate::scalar::Real;
    sphere_monomial_integral(a, b, c, d).to_f64() * PI * PI
}
