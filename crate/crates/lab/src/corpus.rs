//! Seeded corpora of harmonic quaternionic polynomials.
//!
//! The generator is SplitMix64 (`rand_xoshiro::SplitMix64`), seeded with the
//! configured `u64`; every random choice is drawn in a fixed order, so a
//! seed determines the corpus on every platform.
//!
//! Positives are psi-regular by construction, cycling through holomorphic
//! pairs `(f1, f2)`, `Jp` lifts of `Jp`-holomorphic products (times a
//! constant quaternion on the right), and `R(f1)` for random harmonic `f1`.
//! Negatives add a harmonic non-holomorphic monomial
//! `z1^a conj(z1)^b z2^c conj(z2)^d` (`ab = cd = 0`, `b + d > 0`) to one
//! component of a positive; since `D'` of such a monomial alone is nonzero,
//! the sum is never psi-regular.

use std::collections::BTreeMap;

use fueter_core::neumann::{harmonic_basis, BallNeumann};
use fueter_core::scalar::{cq, q};
use fueter_core::wirtinger::{jp_lift, jp_linear_holomorphic};
use fueter_core::{ImaginaryUnit, QFunction, Quaternion, WPoly, Q};
use num_complex::Complex;
use num_traits::Zero;
use rand::{RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;

pub type Rng = SplitMix64;

pub fn rng(seed: u64) -> Rng {
    SplitMix64::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    HolomorphicPair,
    JpLift,
    ConjugateHarmonic,
    Perturbed,
}

impl Construction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Construction::HolomorphicPair => "holomorphic_pair",
            Construction::JpLift => "jp_lift",
            Construction::ConjugateHarmonic => "conjugate_harmonic",
            Construction::Perturbed => "perturbed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub index: usize,
    pub construction: Construction,
    /// psi-regular by construction.
    pub expected: bool,
    pub f: QFunction<Q>,
    /// `(a, b) != (0, 0)` for the single-condition check.
    pub cor2: (Complex<Q>, Complex<Q>),
}

pub fn small_q(rng: &mut Rng) -> Q {
    q(rng.random_range(-6i64..=6), rng.random_range(1i64..=4))
}

pub fn small_c(rng: &mut Rng) -> Complex<Q> {
    cq(small_q(rng), small_q(rng))
}

fn nonzero_c(rng: &mut Rng) -> Complex<Q> {
    loop {
        let c = small_c(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

fn quaternion(rng: &mut Rng) -> Quaternion<Q> {
    Quaternion::new(small_q(rng), small_q(rng), small_q(rng), small_q(rng))
}

/// Holomorphic polynomial with 1 to 3 terms of degree `<= max_deg`.
pub fn random_holomorphic(rng: &mut Rng, max_deg: u32) -> WPoly<Q> {
    let mut out = WPoly::zero();
    for _ in 0..rng.random_range(1..=3usize) {
        let n = rng.random_range(0..=max_deg);
        let a = rng.random_range(0..=n);
        out = &out + &WPoly::monomial([a, 0, n - a, 0], nonzero_c(rng));
    }
    out
}

/// Harmonic bases by bidegree, built on first use.
#[derive(Default)]
pub struct HarmonicBases {
    bases: BTreeMap<(u32, u32), Vec<WPoly<Q>>>,
}

impl HarmonicBases {
    pub fn get(&mut self, p: u32, qq: u32) -> &[WPoly<Q>] {
        self.bases.entry((p, qq)).or_insert_with(|| harmonic_basis(p, qq))
    }

    /// Combination of 1 to 4 basis elements of random bidegrees, total
    /// degree `<= max_deg`.
    pub fn random_harmonic(&mut self, rng: &mut Rng, max_deg: u32) -> WPoly<Q> {
        let mut out = WPoly::zero();
        for _ in 0..rng.random_range(1..=4usize) {
            let n = rng.random_range(0..=max_deg);
            let p = rng.random_range(0..=n);
            let c = nonzero_c(rng);
            let basis = self.get(p, n - p);
            let k = rng.random_range(0..basis.len());
            out = &out + &basis[k].scale(&c);
        }
        out
    }
}

/// `Jp`-holomorphic product of up to three linear factors, lifted.
fn random_jp_lift(rng: &mut Rng, max_deg: u32) -> QFunction<Q> {
    let p = ImaginaryUnit::from_stereographic(small_q(rng), small_q(rng));
    let mut prod = WPoly::constant(nonzero_c(rng));
    for _ in 0..rng.random_range(0..=max_deg.min(3)) {
        let alpha = [small_q(rng), small_q(rng), small_q(rng), small_q(rng)];
        prod = &prod * &jp_linear_holomorphic(alpha, &p);
    }
    jp_lift(&prod.real_part(), &prod.imag_part(), &p).right_mul_const(&quaternion(rng))
}

/// `z1^a conj(z1)^b z2^c conj(z2)^d` with `ab = cd = 0`, `b + d > 0`.
pub fn random_non_holomorphic_monomial(rng: &mut Rng, max_deg: u32) -> WPoly<Q> {
    loop {
        let m = rng.random_range(0..=max_deg);
        let n = rng.random_range(0..=max_deg - m);
        let (bar1, bar2) = (rng.random_bool(0.5), rng.random_bool(0.5));
        let e =
            [if bar1 { 0 } else { m }, if bar1 { m } else { 0 }, if bar2 { 0 } else { n }, if bar2 { n } else { 0 }];
        let c = nonzero_c(rng);
        if e[1] + e[3] > 0 {
            return WPoly::monomial(e, c);
        }
    }
}

/// Random psi-regular function of degree `<= max_deg` from the construction
/// selected by `which` (0, 1, 2).
pub fn positive(
    rng: &mut Rng,
    which: usize,
    max_deg: u32,
    bases: &mut HarmonicBases,
    solver: &BallNeumann<Q>,
) -> (Construction, QFunction<Q>) {
    match which % 3 {
        0 => {
            let f1 = random_holomorphic(rng, max_deg);
            let f2 = random_holomorphic(rng, max_deg);
            (Construction::HolomorphicPair, QFunction::new(f1, f2))
        }
        1 => (Construction::JpLift, random_jp_lift(rng, max_deg)),
        _ => {
            let f1 = bases.random_harmonic(rng, max_deg);
            let f = solver.operator_r(&f1).expect("R is total on harmonic polynomials of bounded degree");
            (Construction::ConjugateHarmonic, f)
        }
    }
}

/// Even indices are positives, odd indices perturbed positives.
pub fn generate(seed: u64, size: usize, max_deg: u32, solver: &BallNeumann<Q>) -> Vec<CorpusEntry> {
    let mut rng = rng(seed);
    let mut bases = HarmonicBases::default();
    (0..size)
        .map(|index| {
            let (construction, f, expected) = if index % 2 == 0 {
                let (c, f) = positive(&mut rng, index / 2, max_deg, &mut bases, solver);
                (c, f, true)
            } else {
                let (_, f) = positive(&mut rng, index / 2, max_deg, &mut bases, solver);
                let m = random_non_holomorphic_monomial(&mut rng, max_deg);
                let f = if rng.random_bool(0.5) {
                    QFunction::new(f.f1, &f.f2 + &m)
                } else {
                    QFunction::new(&f.f1 + &m, f.f2)
                };
                (Construction::Perturbed, f, false)
            };
            let a = small_c(&mut rng);
            let b = if a.is_zero() { nonzero_c(&mut rng) } else { small_c(&mut rng) };
            CorpusEntry { index, construction, expected, f, cor2: (a, b) }
        })
        .collect()
}

/// `count` random harmonic `f1` of degree `<= max_deg`; every fifth one is
/// holomorphic.
pub fn harmonic_family(seed: u64, count: usize, max_deg: u32) -> Vec<WPoly<Q>> {
    let mut rng = rng(seed);
    let mut bases = HarmonicBases::default();
    (0..count)
        .map(
            |k| {
                if k % 5 == 4 {
                    random_holomorphic(&mut rng, max_deg)
                } else {
                    bases.random_harmonic(&mut rng, max_deg)
                }
            },
        )
        .collect()
}
