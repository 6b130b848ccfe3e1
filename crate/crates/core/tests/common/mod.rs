#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use fueter_core::neumann::{harmonic_basis, BallNeumann};
use fueter_core::scalar::{cq, q};
use fueter_core::wirtinger::{jp_lift, jp_linear_holomorphic};
use fueter_core::{ImaginaryUnit, QFunction, Quaternion, WPoly, Q};
use num_complex::Complex;
use proptest::prelude::*;

pub type P = WPoly<Q>;

pub fn small_q() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn small_c() -> impl Strategy<Value = Complex<Q>> {
    (small_q(), small_q()).prop_map(|(a, b)| cq(a, b))
}

pub fn quaternion() -> impl Strategy<Value = Quaternion<Q>> {
    (small_q(), small_q(), small_q(), small_q()).prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
}

pub fn unit_p() -> impl Strategy<Value = ImaginaryUnit<Q>> {
    (small_q(), small_q()).prop_map(|(s, t)| ImaginaryUnit::from_stereographic(s, t))
}

/// Unit quaternion with rational coordinates (inverse stereographic image
/// of a rational point of R^3).
pub fn rational_unit_quaternion() -> impl Strategy<Value = Quaternion<Q>> {
    (small_q(), small_q(), small_q()).prop_map(|(a, b, c)| {
        let s = a.clone() * a.clone() + b.clone() * b.clone() + c.clone() * c.clone();
        let one = q(1, 1);
        let two = q(2, 1);
        let den = one.clone() + s.clone();
        Quaternion::new(
            (one - s) / den.clone(),
            two.clone() * a / den.clone(),
            two.clone() * b / den.clone(),
            two * c / den,
        )
    })
}

/// Positive orthonormal pair `(u i conj u, u j conj u)`.
pub fn orthonormal_pair() -> impl Strategy<Value = (ImaginaryUnit<Q>, ImaginaryUnit<Q>)> {
    rational_unit_quaternion().prop_map(|u| {
        let rot = |e: Quaternion<Q>| {
            let r = u.clone() * e * u.conj();
            ImaginaryUnit::new(r.x1, r.x2, r.x3).unwrap()
        };
        (rot(Quaternion::i()), rot(Quaternion::j()))
    })
}

pub fn exponent(max_deg: u32) -> impl Strategy<Value = [u32; 4]> {
    (0..=max_deg, 0..=max_deg, 0..=max_deg, 0..=max_deg)
        .prop_filter_map("degree", move |(a, b, c, d)| (a + b + c + d <= max_deg).then_some([a, b, c, d]))
}

pub fn wpoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec((exponent(max_deg), small_c()), 0..=max_terms).prop_map(P::from_terms)
}

pub fn float_wpoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = WPoly<f64>> {
    wpoly(max_deg, max_terms).prop_map(|p| p.to_f64())
}

pub fn qfunction(max_deg: u32, max_terms: usize) -> impl Strategy<Value = QFunction<Q>> {
    (wpoly(max_deg, max_terms), wpoly(max_deg, max_terms)).prop_map(|(a, b)| QFunction::new(a, b))
}

pub fn holomorphic(max_deg: u32, max_terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), small_c()), 0..=max_terms).prop_map(move |terms| {
        P::from_terms(terms.into_iter().filter(|((a, c), _)| a + c <= max_deg).map(|((a, c), v)| ([a, 0, c, 0], v)))
    })
}

fn bases() -> &'static BTreeMap<(u32, u32), Vec<P>> {
    static BASES: OnceLock<BTreeMap<(u32, u32), Vec<P>>> = OnceLock::new();
    BASES.get_or_init(|| {
        let mut m = BTreeMap::new();
        for n in 0..=6u32 {
            for p in 0..=n {
                m.insert((p, n - p), harmonic_basis::<Q>(p, n - p));
            }
        }
        m
    })
}

pub fn neumann() -> &'static BallNeumann<Q> {
    static SOLVER: OnceLock<BallNeumann<Q>> = OnceLock::new();
    SOLVER.get_or_init(|| BallNeumann::new(8))
}

/// Random combination of bigraded harmonic basis elements, degree <= max_deg.
pub fn harmonic(max_deg: u32, max_terms: usize) -> impl Strategy<Value = P> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), any::<prop::sample::Index>(), small_c()), 1..=max_terms)
        .prop_map(move |items| {
            let mut out = P::zero();
            for ((p, qq), idx, c) in items {
                if p + qq > max_deg {
                    continue;
                }
                let basis = &bases()[&(p, qq)];
                out = &out + &basis[idx.index(basis.len())].scale(&c);
            }
            out
        })
}

fn jp_holomorphic(p: &ImaginaryUnit<Q>, alphas: &[[Q; 4]], c: &Complex<Q>) -> P {
    let mut prod = P::constant(c.clone());
    for a in alphas {
        prod = &prod * &jp_linear_holomorphic(a.clone(), p);
    }
    prod
}

/// psi-regular functions of degree <= 6 from the three constructions:
/// holomorphic pairs, `Jp` lifts (times a constant on the right) and `R`.
pub fn psi_regular() -> impl Strategy<Value = QFunction<Q>> {
    psi_regular_up_to(6)
}

pub fn psi_regular_up_to(max_deg: u32) -> impl Strategy<Value = QFunction<Q>> {
    let pair = (holomorphic(max_deg, 4), holomorphic(max_deg, 4)).prop_map(|(a, b)| QFunction::new(a, b));
    let alpha = (small_q(), small_q(), small_q(), small_q()).prop_map(|(a, b, c, d)| [a, b, c, d]);
    let lift = (unit_p(), prop::collection::vec(alpha, 0..=(max_deg.min(3) as usize)), small_c(), quaternion())
        .prop_map(|(p, al, c, r)| {
            let f = jp_holomorphic(&p, &al, &c);
            jp_lift(&f.real_part(), &f.imag_part(), &p).right_mul_const(&r)
        });
    let r = harmonic(max_deg, 4).prop_map(|f1| neumann().operator_r(&f1).unwrap());
    prop_oneof![pair, lift, r]
}

/// Harmonic monomial that is not holomorphic: `ab = cd = 0`, `b + d > 0`.
pub fn non_holomorphic_harmonic_monomial() -> impl Strategy<Value = P> {
    (0..=3u32, 0..=3u32, any::<bool>(), any::<bool>(), small_c()).prop_filter_map(
        "non-holomorphic",
        |(m, n, bar1, bar2, c)| {
            let e = [
                if bar1 { 0 } else { m },
                if bar1 { m } else { 0 },
                if bar2 { 0 } else { n },
                if bar2 { n } else { 0 },
            ];
            let zero = c.re == q(0, 1) && c.im == q(0, 1);
            (e[1] + e[3] > 0 && !zero).then(|| P::monomial(e, c))
        },
    )
}

/// psi-regular function plus a non-holomorphic harmonic monomial in one
/// component; never psi-regular.
pub fn perturbed() -> impl Strategy<Value = QFunction<Q>> {
    (psi_regular(), non_holomorphic_harmonic_monomial(), any::<bool>()).prop_map(|(f, m, second)| {
        if second {
            QFunction::new(f.f1, &f.f2 + &m)
        } else {
            QFunction::new(&f.f1 + &m, f.f2)
        }
    })
}

pub fn harmonic_qfunction() -> impl Strategy<Value = (QFunction<Q>, bool)> {
    prop_oneof![psi_regular().prop_map(|f| (f, true)), perturbed().prop_map(|f| (f, false))]
}
