mod common;

use common::*;
use fueter_core::quat::{apply_j, ComplexStructure, Covector4};
use fueter_core::scalar::qi;
use fueter_core::{ComplexPair, Quaternion, Q};
use proptest::prelude::*;

fn covector() -> impl Strategy<Value = Covector4<Q>> {
    (small_q(), small_q(), small_q(), small_q()).prop_map(|(a, b, c, d)| Covector4([a, b, c, d]))
}

fn neg(u: &Covector4<Q>) -> Covector4<Q> {
    u.map(|c| -c.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hamilton_product_matches_pair_formula(a in quaternion(), b in quaternion()) {
        let real = a.clone() * b.clone();
        let pair = a.to_complex_pair().mul(&b.to_complex_pair());
        prop_assert_eq!(real, Quaternion::from_complex_pair(&pair));
    }

    #[test]
    fn pair_round_trip(a in quaternion()) {
        prop_assert_eq!(Quaternion::from_complex_pair(&a.to_complex_pair()), a.clone());
        let p = a.to_complex_pair();
        prop_assert_eq!(Quaternion::from_complex_pair(&p).to_complex_pair(), p);
    }

    #[test]
    fn norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        let prod = a.clone() * b.clone();
        prop_assert_eq!(prod.norm_sqr() - a.norm_sqr() * b.norm_sqr(), qi(0));
    }

    #[test]
    fn conj_is_anti_automorphism(a in quaternion(), b in quaternion()) {
        prop_assert_eq!((a.clone() * b.clone()).conj(), b.conj() * a.conj());
        prop_assert_eq!(a.to_complex_pair().conj(), a.conj().to_complex_pair());
    }

    #[test]
    fn product_is_associative(a in quaternion(), b in quaternion(), c in quaternion()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn structures_square_to_minus_identity(p in unit_p(), u in covector()) {
        for s in [ComplexStructure::J1, ComplexStructure::J2, ComplexStructure::J3, ComplexStructure::Jp(p.clone())] {
            prop_assert_eq!(apply_j(&s, &apply_j(&s, &u)), neg(&u));
        }
    }

    #[test]
    fn j3_is_j1_after_j2(u in covector()) {
        let composed = apply_j(&ComplexStructure::J1, &apply_j(&ComplexStructure::J2, &u));
        prop_assert_eq!(apply_j(&ComplexStructure::J3, &u), composed);
    }

    #[test]
    fn structures_are_linear(p in unit_p(), u in covector(), v in covector(), a in small_q(), b in small_q()) {
        let comb = |x: &Covector4<Q>, y: &Covector4<Q>| Covector4(core::array::from_fn(|k| a.clone() * x.0[k].clone() + b.clone() * y.0[k].clone()));
        let s = ComplexStructure::Jp(p);
        prop_assert_eq!(apply_j(&s, &comb(&u, &v)), comb(&apply_j(&s, &u), &apply_j(&s, &v)));
    }
}

#[test]
fn one_plus_j_times_i_two_ways() {
    let a = Quaternion::new(qi(1), qi(0), qi(1), qi(0));
    let b = Quaternion::<Q>::i();
    let pair = ComplexPair::mul(&a.to_complex_pair(), &b.to_complex_pair());
    assert_eq!(a * b, Quaternion::from_complex_pair(&pair));
}
