//! Quaternion-valued polynomial functions `f = f1 + f2 j` and the
//! Cauchy-Riemann-Fueter calculus on them.
//!
//! Quaternionic products are always carried out on complex pairs so the
//! rule `a j = j conj(a)` lives in one place:
//!
//! * product: `(f1 + f2 j)(g1 + g2 j) = (f1 g1 - f2 conj g2) + (f1 g2 + f2 conj g1) j`;
//! * `j (a + b j) = -conj(b) + conj(a) j`;
//! * `D' f / 2 = (df1/dz1bar - d(conj f2)/dz2) + (df2/dz1bar + d(conj f1)/dz2) j`,
//!   from `D' = 2 (d/dz1bar + j d/dz2bar)`;
//! * `D f / 2 = (df1/dz1bar - d(conj f2)/dz2bar) + (df2/dz1bar + d(conj f1)/dz2bar) j`,
//!   from `D = 2 (d/dz1bar + j d/dz2)`.

use core::ops::{Add, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::poly::{WPoly, Wirtinger};
use crate::quat::{apply_j, ComplexPair, ComplexStructure, Covector4, ImaginaryUnit, Quaternion};
use crate::scalar::{c_i, Real, RealModule};

#[derive(Clone, Debug, PartialEq)]
pub struct QFunction<S> {
    pub f1: WPoly<S>,
    pub f2: WPoly<S>,
}

/// Quaternion-valued one-form `sum_k c_k dx_k` with polynomial coefficients.
pub type QOneForm<S> = Covector4<QFunction<S>>;

impl<S: Real> QFunction<S> {
    pub fn new(f1: WPoly<S>, f2: WPoly<S>) -> Self {
        Self { f1, f2 }
    }

    pub fn complex(f1: WPoly<S>) -> Self {
        Self { f1, f2: WPoly::zero() }
    }

    pub fn constant(c: &Quaternion<S>) -> Self {
        let p = c.to_complex_pair();
        Self::new(WPoly::constant(p.z1), WPoly::constant(p.z2))
    }

    /// The identity map `z1 + z2 j`.
    pub fn identity() -> Self {
        Self::new(WPoly::z1(), WPoly::z2())
    }

    /// `f0 + i f1 + j f2 + k f3` from real-valued components.
    pub fn from_real_components(c: [WPoly<S>; 4]) -> Self {
        let [c0, c1, c2, c3] = c;
        let i = c_i();
        Self::new(&c0 + &c1.scale(&i), &c2 + &c3.scale(&i))
    }

    /// `[f0, f1, f2, f3]` with `f1 = f0 + i f1`, `f2 = f2 + i f3`.
    pub fn real_components(&self) -> [WPoly<S>; 4] {
        [self.f1.real_part(), self.f1.imag_part(), self.f2.real_part(), self.f2.imag_part()]
    }

    /// Real part as a real-valued polynomial.
    pub fn re(&self) -> WPoly<S> {
        self.f1.real_part()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.f1.degree().max(self.f2.degree())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.f1 * &rhs.f1) - &(&self.f2 * &rhs.f2.conj()),
            &(&self.f1 * &rhs.f2) + &(&self.f2 * &rhs.f1.conj()),
        )
    }

    pub fn left_mul_const(&self, c: &Quaternion<S>) -> Self {
        Self::constant(c).mul(self)
    }

    pub fn right_mul_const(&self, c: &Quaternion<S>) -> Self {
        self.mul(&Self::constant(c))
    }

    /// `j f = -conj(f2) + conj(f1) j`.
    pub fn j_mul(&self) -> Self {
        Self::new(-self.f2.conj(), self.f1.conj())
    }

    /// Quaternionic conjugate `conj(f1) - f2 j`.
    pub fn conj(&self) -> Self {
        Self::new(self.f1.conj(), -&self.f2)
    }

    pub fn gamma_pullback(&self) -> Self {
        Self::new(self.f1.gamma_pullback(), self.f2.gamma_pullback())
    }

    pub fn laplacian(&self) -> Self {
        Self::new(self.f1.laplacian(), self.f2.laplacian())
    }

    pub fn is_harmonic(&self) -> bool {
        self.f1.is_harmonic() && self.f2.is_harmonic()
    }

    /// Both complex components holomorphic.
    pub fn is_holomorphic_pair(&self) -> bool {
        self.f1.is_holomorphic() && self.f2.is_holomorphic()
    }

    pub fn partial_x(&self, k: usize) -> Self {
        Self::new(self.f1.partial_x(k), self.f2.partial_x(k))
    }

    pub fn eval(&self, z: &ComplexPair<S>) -> Quaternion<S> {
        Quaternion::from_complex_pair(&ComplexPair::new(self.f1.eval(z), self.f2.eval(z)))
    }

    pub fn to_f64(&self) -> QFunction<f64> {
        QFunction::new(self.f1.to_f64(), self.f2.to_f64())
    }
}

impl<S: Real> Add for QFunction<S> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(&self.f1 + &r.f1, &self.f2 + &r.f2)
    }
}

impl<S: Real> Sub for QFunction<S> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(&self.f1 - &r.f1, &self.f2 - &r.f2)
    }
}

impl<S: Real> Neg for QFunction<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.f1, -self.f2)
    }
}

impl<S: Real> Zero for QFunction<S> {
    fn zero() -> Self {
        Self::new(WPoly::zero(), WPoly::zero())
    }
    fn is_zero(&self) -> bool {
        QFunction::is_zero(self)
    }
}

impl<S: Real> RealModule<S> for QFunction<S> {
    fn scale_real(&self, s: &S) -> Self {
        Self::new(self.f1.scale_real(s), self.f2.scale_real(s))
    }
}

/// `D' f` with `D' = d/dx0 + i d/dx1 + j d/dx2 - k d/dx3`.
pub fn apply_dprime<S: Real>(f: &QFunction<S>) -> QFunction<S> {
    let two = S::from_i64(2);
    let f1b = f.f1.conj();
    let f2b = f.f2.conj();
    QFunction::new(
        &f.f1.wirt(Wirtinger::Z1Bar) - &f2b.wirt(Wirtinger::Z2),
        &f.f2.wirt(Wirtinger::Z1Bar) + &f1b.wirt(Wirtinger::Z2),
    )
    .scale_real(&two)
}

/// `D f` with `D = d/dx0 + i d/dx1 + j d/dx2 + k d/dx3`.
pub fn apply_d<S: Real>(f: &QFunction<S>) -> QFunction<S> {
    let two = S::from_i64(2);
    let f1b = f.f1.conj();
    let f2b = f.f2.conj();
    QFunction::new(
        &f.f1.wirt(Wirtinger::Z1Bar) - &f2b.wirt(Wirtinger::Z2Bar),
        &f.f2.wirt(Wirtinger::Z1Bar) + &f1b.wirt(Wirtinger::Z2Bar),
    )
    .scale_real(&two)
}

/// Left psi-regular: `D' f = 0`.
pub fn is_psi_regular<S: Real>(f: &QFunction<S>) -> bool {
    apply_dprime(f).is_zero()
}

/// Left Fueter-regular: `D f = 0`.
pub fn is_regular<S: Real>(f: &QFunction<S>) -> bool {
    apply_d(f).is_zero()
}

/// `df` as the one-form of real partials.
pub fn differential<S: Real>(f: &QFunction<S>) -> QOneForm<S> {
    Covector4(core::array::from_fn(|k| f.partial_x(k)))
}

fn left_mul_form<S: Real>(c: &Quaternion<S>, u: &QOneForm<S>) -> QOneForm<S> {
    u.map(|coef| coef.left_mul_const(c))
}

/// `df + i J1(df) + j J2(df) + k J3(df)`; zero exactly on q-holomorphic,
/// i.e. psi-regular, functions.
pub fn q_holomorphic_residual<S: Real>(f: &QFunction<S>) -> QOneForm<S> {
    let df = differential(f);
    let parts = [
        left_mul_form(&Quaternion::i(), &apply_j(&ComplexStructure::J1, &df)),
        left_mul_form(&Quaternion::j(), &apply_j(&ComplexStructure::J2, &df)),
        left_mul_form(&Quaternion::k(), &apply_j(&ComplexStructure::J3, &df)),
    ];
    parts.iter().fold(df, |acc, p| acc.add(p))
}

/// `f0 + p f1` for real-valued `f0, f1`.
pub fn jp_lift<S: Real>(f0: &WPoly<S>, f1: &WPoly<S>, p: &ImaginaryUnit<S>) -> QFunction<S> {
    QFunction::complex(f0.clone()) + QFunction::complex(f1.clone()).left_mul_const(&p.to_quaternion())
}

/// `(Re f~, Re(-p f~))`, inverse of [`jp_lift`].
pub fn jp_recover<S: Real>(ft: &QFunction<S>, p: &ImaginaryUnit<S>) -> (WPoly<S>, WPoly<S>) {
    let minus_p = -p.to_quaternion();
    (ft.re(), ft.left_mul_const(&minus_p).re())
}

/// `df0 - Jp(df1)`; zero iff `f0 + i f1` is `Jp`-holomorphic.
pub fn jp_holomorphic_residual<S: Real>(f0: &WPoly<S>, f1: &WPoly<S>, p: &ImaginaryUnit<S>) -> Covector4<WPoly<S>> {
    let df0 = Covector4(f0.gradient_x());
    let df1 = Covector4(f1.gradient_x());
    let jdf1 = apply_j(&ComplexStructure::Jp(p.clone()), &df1);
    Covector4(core::array::from_fn(|k| &df0.0[k] - &jdf1.0[k]))
}

/// A complex linear function which is `Jp`-holomorphic:
/// `<alpha, x> + i <-Jp alpha, x>`. Products and sums of these stay
/// `Jp`-holomorphic since `Jp` is a constant complex structure.
pub fn jp_linear_holomorphic<S: Real>(alpha: [S; 4], p: &ImaginaryUnit<S>) -> WPoly<S> {
    let a = Covector4(alpha);
    let b = apply_j(&ComplexStructure::Jp(p.clone()), &a);
    let mut out = WPoly::zero();
    for k in 0..4 {
        let xk = WPoly::real_coordinate(k);
        out = &out + &xk.scale(&Complex::new(a.0[k].clone(), -b.0[k].clone()));
    }
    out
}

/// Residual of `dbar_p f1 = Jq(d_p conj(f2))` where `f = f1 + f2 q` with
/// `C_p`-valued `f1 = f^0 + p f^1`, `f2 = f^2 + p f^3` in the basis
/// `{1, p, q, pq}`, `dbar_p = (d + p Jp d) / 2` and `d_p = (d - p Jp d) / 2`.
pub fn general_basis_residual<S: Real>(
    f: &QFunction<S>,
    p: &ImaginaryUnit<S>,
    q: &ImaginaryUnit<S>,
) -> Result<QOneForm<S>> {
    let pq = p.orthogonal_product(q)?;
    let (pp, qq, rr) = (p.to_quaternion(), q.to_quaternion(), pq.to_quaternion());
    // component along a unit imaginary e is Re(conj(e) f) = Re(-e f)
    let comp = |e: &Quaternion<S>| QFunction::complex(f.left_mul_const(&-e.clone()).re());
    let c0 = QFunction::complex(f.re());
    let (c1, c2, c3) = (comp(&pp), comp(&qq), comp(&rr));
    let first = c0 + c1.left_mul_const(&pp);
    let second_bar = c2 - c3.left_mul_const(&pp);

    let jp = ComplexStructure::Jp(p.clone());
    let jq = ComplexStructure::Jp(q.clone());
    let half = S::half();
    let d1 = differential(&first);
    let dbar_p = d1.add(&left_mul_form(&pp, &apply_j(&jp, &d1))).map(|c| c.scale_real(&half));
    let d2 = differential(&second_bar);
    let d_p = d2.add(&left_mul_form(&-pp.clone(), &apply_j(&jp, &d2))).map(|c| c.scale_real(&half));
    let rhs = apply_j(&jq, &d_p);
    Ok(Covector4(core::array::from_fn(|k| dbar_p.0[k].clone() - rhs.0[k].clone())))
}

/// Zero test for a quaternion-valued one-form.
pub fn form_is_zero<S: Real>(u: &QOneForm<S>) -> bool {
    u.0.iter().all(QFunction::is_zero)
}

impl<S: Real> QFunction<S> {
    /// `D' f` computed from real partials and quaternion left products,
    /// independently of the complex component formula.
    pub fn dprime_by_real_partials(&self) -> Self {
        let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), -Quaternion::k()];
        units.iter().enumerate().fold(QFunction::zero(), |acc, (k, e)| acc + self.partial_x(k).left_mul_const(e))
    }

    /// `D f` from real partials.
    pub fn d_by_real_partials(&self) -> Self {
        let units = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
        units.iter().enumerate().fold(QFunction::zero(), |acc, (k, e)| acc + self.partial_x(k).left_mul_const(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qi, Q};

    fn zb1() -> WPoly<Q> {
        WPoly::z1bar()
    }
    fn zb2() -> WPoly<Q> {
        WPoly::z2bar()
    }

    #[test]
    fn dprime_examples() {
        assert!(apply_dprime(&QFunction::<Q>::identity()).is_zero());
        assert!(apply_dprime(&QFunction::new(zb1(), zb2())).is_zero());
        let r = apply_dprime(&QFunction::complex(zb2()));
        assert!(!r.is_zero());
    }

    #[test]
    fn d_examples() {
        assert!(apply_d(&QFunction::<Q>::constant(&Quaternion::new(qi(1), qi(2), qi(3), qi(4)))).is_zero());
        assert!(apply_d(&QFunction::new(zb1(), WPoly::z2())).is_zero());
        assert!(!apply_d(&QFunction::<Q>::identity()).is_zero());
    }

    #[test]
    fn component_formulas_match_real_partials() {
        let f = QFunction::new(&(&WPoly::<Q>::z1() * &zb2()) + &zb1().pow(2), &(&WPoly::z2() * &zb1()) + &WPoly::z1());
        assert_eq!(apply_dprime(&f), f.dprime_by_real_partials());
        assert_eq!(apply_d(&f), f.d_by_real_partials());
    }

    #[test]
    fn q_holomorphic_examples() {
        assert!(form_is_zero(&q_holomorphic_residual(&QFunction::<Q>::identity())));
        assert!(!form_is_zero(&q_holomorphic_residual(&QFunction::complex(zb2()))));
    }

    #[test]
    fn jp_lift_at_i_gives_z1() {
        let x0 = WPoly::<Q>::real_coordinate(0);
        let x1 = WPoly::<Q>::real_coordinate(1);
        let ft = jp_lift(&x0, &x1, &ImaginaryUnit::i());
        assert_eq!(ft, QFunction::complex(WPoly::z1()));
    }

    #[test]
    fn jp_lift_at_j() {
        let x0 = WPoly::<Q>::real_coordinate(0);
        let x2 = WPoly::<Q>::real_coordinate(2);
        let p = ImaginaryUnit::j();
        let ft = jp_lift(&x0, &x2, &p);
        assert_eq!(ft, QFunction::from_real_components([x0.clone(), WPoly::zero(), x2.clone(), WPoly::zero()]));
        assert!(apply_dprime(&ft).is_zero());
        assert!(jp_holomorphic_residual(&x0, &x2, &p).is_zero());
    }

    #[test]
    fn jp_residual_standard_holomorphy() {
        let i = ImaginaryUnit::<Q>::i();
        let z1 = WPoly::<Q>::z1();
        assert!(jp_holomorphic_residual(&z1.real_part(), &z1.imag_part(), &i).is_zero());
        let z1b = zb1();
        assert!(!jp_holomorphic_residual(&z1b.real_part(), &z1b.imag_part(), &i).is_zero());
    }

    #[test]
    fn general_basis_examples() {
        let (i, j, k) = (ImaginaryUnit::<Q>::i(), ImaginaryUnit::j(), ImaginaryUnit::k());
        let f = QFunction::new(zb1(), zb2());
        assert!(form_is_zero(&general_basis_residual(&f, &i, &j).unwrap()));
        assert!(form_is_zero(&general_basis_residual(&f, &j, &k).unwrap()));
        let g = QFunction::complex(zb2());
        assert!(!form_is_zero(&general_basis_residual(&g, &i, &j).unwrap()));
        assert!(general_basis_residual(&g, &i, &i).is_err());
    }

    #[test]
    fn zero_function_satisfies_every_predicate() {
        let z = QFunction::<Q>::zero();
        assert!(is_psi_regular(&z) && is_regular(&z) && z.is_harmonic() && z.is_holomorphic_pair());
    }
}
