mod common;

use std::sync::OnceLock;

use common::*;
use fueter_core::boundary::Domain;
use fueter_core::criteria::{
    check_cor1, check_cor2, check_eq2, check_thm4, exterior_vanishing, quaternion_trace, weak_condition, Thresholds,
    WeakKind,
};
use fueter_core::forms::EvalGuard;
use fueter_core::neumann::harmonic_basis;
use fueter_core::quadrature::{QuadOrders, SurfaceQuadrature};
use fueter_core::scalar::{q, qi};
use fueter_core::wirtinger::{is_psi_regular, is_regular};
use fueter_core::{ComplexPair, Error, QFunction, WPoly, Q};
use num_complex::Complex;
use proptest::prelude::*;

fn domains() -> &'static [(Domain<Q>, SurfaceQuadrature)] {
    static D: OnceLock<Vec<(Domain<Q>, SurfaceQuadrature)>> = OnceLock::new();
    D.get_or_init(|| {
        let orders = QuadOrders::new(6, 8, 8);
        [Domain::unit_sphere(), Domain::ellipsoid(qi(2), qi(1)).unwrap(), Domain::ellipsoid(q(1, 2), qi(3)).unwrap()]
            .into_iter()
            .map(|d| {
                let quad = d.quadrature(orders).unwrap();
                (d, quad)
            })
            .collect()
    })
}

fn hopf16() -> &'static SurfaceQuadrature {
    static Q16: OnceLock<SurfaceQuadrature> = OnceLock::new();
    Q16.get_or_init(|| SurfaceQuadrature::hopf(QuadOrders::uniform(16)).unwrap())
}

/// Harmonic test functions of degree <= `max_deg`.
fn phi_basis(max_deg: u32) -> Vec<WPoly<f64>> {
    let mut out = Vec::new();
    for n in 0..=max_deg {
        for p in 0..=n {
            out.extend(harmonic_basis::<f64>(p, n - p));
        }
    }
    out
}

fn gamma(f: &QFunction<Q>) -> QFunction<Q> {
    f.gamma_pullback()
}

#[test]
fn weak_examples() {
    let quad = hopf16();
    let sphere = Domain::<f64>::unit_sphere();
    let phis = phi_basis(3);
    let good = QFunction::<f64>::new(WPoly::z1bar(), WPoly::z2bar());
    let tr = quaternion_trace(quad, &good);
    for kind in [WeakKind::Eq3First, WeakKind::Eq3Second, WeakKind::Eq4] {
        assert!(weak_condition(kind, quad, &sphere, &tr, &phis) < 1e-12, "{kind:?}");
    }
    let bad = QFunction::<f64>::complex(WPoly::z2bar());
    let tr = quaternion_trace(quad, &bad);
    assert!(weak_condition(WeakKind::Eq4, quad, &sphere, &tr, &phis) > 1e-3);
    assert!(weak_condition(WeakKind::Eq3Second, quad, &sphere, &tr, &phis) > 1e-3);
}

#[test]
fn exterior_points_are_checked() {
    let quad = &SurfaceQuadrature::hopf(QuadOrders::uniform(32)).unwrap();
    let sphere = Domain::<f64>::unit_sphere();
    let tr = quaternion_trace(quad, &QFunction::identity());
    let inside = [ComplexPair::new(Complex::new(0.5, 0.0), Complex::new(0.0, 0.0))];
    assert!(matches!(
        exterior_vanishing(quad, &sphere, &tr, &inside, &EvalGuard::default()),
        Err(Error::NotExterior { .. })
    ));
    let outside = [ComplexPair::new(Complex::new(2.5, 0.0), Complex::new(0.0, 1.0))];
    let v = exterior_vanishing(quad, &sphere, &tr, &outside, &EvalGuard::default()).unwrap();
    assert!(v < 1e-8, "{v}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eq2_decides_psi_regularity((f, expected) in harmonic_qfunction()) {
        let th = Thresholds::default();
        prop_assert_eq!(is_psi_regular(&f), expected);
        for (d, quad) in domains() {
            let r = check_eq2(&f, d, quad, &th).unwrap();
            prop_assert_eq!(r.exact_zero, expected, "{}", d.label());
            prop_assert!(r.float_consistent(&th));
            prop_assert_eq!(r.nodes, quad.len());
        }
    }

    #[test]
    fn cor1_decides_regularity((f, expected) in harmonic_qfunction()) {
        let g = gamma(&f);
        prop_assert_eq!(is_regular(&g), expected);
        let th = Thresholds::default();
        for (d, quad) in domains() {
            let r = check_cor1(&g, d, quad, &th).unwrap();
            prop_assert_eq!(r.exact_zero, expected, "{}", d.label());
            prop_assert!(r.float_consistent(&th));
        }
    }

    #[test]
    fn verdicts_ignore_the_defining_function_scale((f, _) in harmonic_qfunction()) {
        let th = Thresholds::default();
        let (d, quad) = &domains()[1];
        let d2 = d.scaled(qi(2)).unwrap();
        let a = check_eq2(&f, d, quad, &th).unwrap();
        let b = check_eq2(&f, &d2, quad, &th).unwrap();
        prop_assert_eq!(a.exact_zero, b.exact_zero);
        let a = check_cor1(&f, d, quad, &th).unwrap();
        let b = check_cor1(&f, &d2, quad, &th).unwrap();
        prop_assert_eq!(a.exact_zero, b.exact_zero);
    }

    #[test]
    fn single_condition_holds_on_psi_regular(f in psi_regular(), a in small_c(), b in small_c()) {
        let zero = a.re == q(0, 1) && a.im == q(0, 1) && b.re == q(0, 1) && b.im == q(0, 1);
        prop_assume!(!zero);
        let (d, quad) = &domains()[0];
        let r = check_cor2(&f, &a, &b, d, quad, &Thresholds::default()).unwrap();
        prop_assert!(r.report.exact_zero && r.psi_regular);
    }

    #[test]
    fn single_condition_decides_psi_regularity((f, expected) in harmonic_qfunction(), a in small_c(), b in small_c()) {
        let zero = a.re == q(0, 1) && a.im == q(0, 1) && b.re == q(0, 1) && b.im == q(0, 1);
        prop_assume!(!zero);
        let (d, quad) = &domains()[0];
        let r = check_cor2(&f, &a, &b, d, quad, &Thresholds::default()).unwrap();
        prop_assert_eq!(r.psi_regular, expected);
        prop_assert_eq!(r.report.exact_zero, expected);
    }

    #[test]
    fn thm4_is_consistent(f in harmonic(4, 3), c in small_c()) {
        let (d, quad) = &domains()[0];
        let h2 = WPoly::constant(c);
        let r = check_thm4(&f, &WPoly::one(), &h2, d, quad, &Thresholds::default()).unwrap();
        prop_assert!(r.consistent());
        prop_assert_eq!(r.holomorphic, f.is_holomorphic());
        if f.is_holomorphic() {
            prop_assert!(r.verdict_holomorphic());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn strong_condition_implies_weak(f in psi_regular_up_to(4)) {
        let quad = hopf16();
        let sphere = Domain::<f64>::unit_sphere();
        let f = f.to_f64();
        let tr = quaternion_trace(quad, &f);
        let scale = 1.0 + tr.iter().map(|v| v.abs()).fold(0.0, f64::max);
        let phis = phi_basis(3);
        for kind in [WeakKind::Eq3First, WeakKind::Eq3Second, WeakKind::Eq4] {
            prop_assert!(weak_condition(kind, quad, &sphere, &tr, &phis) < 1e-10 * scale);
        }
    }
}
