//! `verify`: equivalence suites over a seeded corpus.
//!
//! * eq2: exact-zero verdict against `D' f = 0`.
//! * cor1: the corpus pulled back by `gamma`, verdict against `D f = 0`.
//! * cor2: the single combined condition with per-entry `(a, b)`.
//! * thm4: `h = (1, 0)` and `h = (1, z1)` against direct holomorphy.
//! * weak: the quaternionic integral condition on positive traces, plus
//!   the `conj z2` witness.

use std::path::PathBuf;

use fueter_core::boundary::Domain;
use fueter_core::criteria::{check_cor1, check_cor2, check_eq2, check_thm4, quaternion_trace, WeakKind, WeakTests};
use fueter_core::neumann::{harmonic_basis, BallNeumann};
use fueter_core::scalar::{complex_from_q, cq, qi};
use fueter_core::wirtinger::{is_psi_regular, is_regular};
use fueter_core::{QFunction, Real, WPoly, Q};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Backend, SuiteConfig};
use crate::corpus::{self, CorpusEntry};
use crate::error::LabError;
use crate::parallel;
use crate::polyjson::{pretty, JsonScalar};
use crate::report::{orders_array, to_json, write_file, ResidualJson, ThresholdsJson};

pub const REPORT_FILE: &str = "verify.json";

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Confusion {
    pub true_positive: usize,
    pub false_negative: usize,
    pub false_positive: usize,
    pub true_negative: usize,
}

impl Confusion {
    fn record(&mut self, predicted: bool, actual: bool) {
        match (actual, predicted) {
            (true, true) => self.true_positive += 1,
            (true, false) => self.false_negative += 1,
            (false, true) => self.false_positive += 1,
            (false, false) => self.true_negative += 1,
        }
    }

    pub fn diagonal(&self) -> bool {
        self.false_positive == 0 && self.false_negative == 0
    }

    pub fn total(&self) -> usize {
        self.true_positive + self.false_negative + self.false_positive + self.true_negative
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cor2Json {
    pub a: [String; 2],
    pub b: [String; 2],
    pub report: ResidualJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub index: usize,
    pub construction: &'static str,
    pub expected_psi_regular: bool,
    pub psi_regular: bool,
    pub regular_after_gamma: bool,
    pub eq2: ResidualJson,
    pub cor1: ResidualJson,
    pub cor2: Cor2Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Thm4Json {
    pub h: &'static str,
    pub f: String,
    pub exact_zero: bool,
    pub holomorphic: bool,
    pub hypothesis_harmonic: bool,
    pub sup_norm: f64,
    pub witnesses: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeakEntry {
    pub index: usize,
    pub expected_psi_regular: bool,
    pub defect: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeakJson {
    pub orders: [usize; 3],
    pub phi_degree: u32,
    pub phi_count: usize,
    pub tolerance: f64,
    pub max_positive_defect: f64,
    pub zbar2_defect: f64,
    pub entries: Vec<WeakEntry>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfusionSet {
    pub eq2: Confusion,
    pub cor1: Confusion,
    pub cor2: Confusion,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Header {
    pub command: &'static str,
    pub seed: u64,
    pub backend: &'static str,
    pub domain: String,
    pub corpus_size: usize,
    pub max_degree: u32,
    pub residual_orders: [usize; 3],
    pub thresholds: ThresholdsJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub header: Header,
    pub entries: Vec<EntryReport>,
    pub confusion: ConfusionSet,
    /// Corpus labels agree with `D' f = 0` and `D (f o gamma) = 0`.
    pub corpus_consistent: bool,
    pub thm4: Vec<Thm4Json>,
    pub weak: WeakJson,
    pub passed: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

fn lift_poly<S: Real>(p: &WPoly<Q>) -> WPoly<S> {
    p.map_coeffs(complex_from_q)
}

fn lift<S: Real>(f: &QFunction<Q>) -> QFunction<S> {
    QFunction::new(lift_poly(&f.f1), lift_poly(&f.f2))
}

pub fn corpus(cfg: &SuiteConfig) -> Vec<CorpusEntry> {
    let solver = BallNeumann::<Q>::new(cfg.corpus.max_degree);
    corpus::generate(cfg.seed, cfg.corpus.size, cfg.corpus.max_degree, &solver)
}

/// Per-entry eq2, cor1 and cor2 checks.
pub fn check_entries<S: Real + JsonScalar>(
    cfg: &SuiteConfig,
    entries: &[CorpusEntry],
    domain: &Domain<S>,
) -> Result<Vec<EntryReport>, LabError> {
    let th = cfg.thresholds();
    let quad = domain.quadrature(cfg.residual_orders())?;
    parallel::pool().install(|| {
        entries
            .par_iter()
            .map(|e| {
                let f: QFunction<S> = lift(&e.f);
                let g = f.gamma_pullback();
                let eq2 = check_eq2(&f, domain, &quad, &th)?;
                let cor1 = check_cor1(&g, domain, &quad, &th)?;
                let (a, b) = (complex_from_q::<S>(&e.cor2.0), complex_from_q::<S>(&e.cor2.1));
                let cor2 = check_cor2(&f, &a, &b, domain, &quad, &th)?;
                Ok(EntryReport {
                    index: e.index,
                    construction: e.construction.as_str(),
                    expected_psi_regular: e.expected,
                    psi_regular: is_psi_regular(&f),
                    regular_after_gamma: is_regular(&g),
                    eq2: (&eq2).into(),
                    cor1: (&cor1).into(),
                    cor2: Cor2Json {
                        a: [a.re.to_json(), a.im.to_json()],
                        b: [b.re.to_json(), b.im.to_json()],
                        report: (&cor2.report).into(),
                    },
                })
            })
            .collect()
    })
}

pub fn confusion(entries: &[EntryReport]) -> ConfusionSet {
    let mut out = ConfusionSet { eq2: Confusion::default(), cor1: Confusion::default(), cor2: Confusion::default() };
    for e in entries {
        out.eq2.record(e.eq2.exact_zero, e.psi_regular);
        out.cor1.record(e.cor1.exact_zero, e.regular_after_gamma);
        out.cor2.record(e.cor2.report.exact_zero, e.psi_regular);
    }
    out
}

/// Test functions for the holomorphy criterion: fixed examples and the
/// first components of holomorphic-pair entries.
pub fn thm4_functions(entries: &[CorpusEntry]) -> Vec<WPoly<Q>> {
    let (z1, z2, zb1, zb2) = (WPoly::<Q>::z1(), WPoly::z2(), WPoly::z1bar(), WPoly::z2bar());
    let mut out = vec![
        WPoly::one(),
        &z1 * &z2,
        &(&z1 * &z1) - &z2.scale(&cq(qi(3), qi(0))),
        zb1.clone(),
        zb2.clone(),
        &z1 * &zb2,
        &(&z1 * &zb1) - &(&z2 * &zb2),
    ];
    out.extend(
        entries.iter().filter(|e| e.construction == corpus::Construction::HolomorphicPair).map(|e| e.f.f1.clone()),
    );
    out
}

pub fn check_thm4_suite<S: Real + JsonScalar>(
    cfg: &SuiteConfig,
    functions: &[WPoly<Q>],
    domain: &Domain<S>,
) -> Result<Vec<Thm4Json>, LabError> {
    let th = cfg.thresholds();
    let quad = domain.quadrature(cfg.residual_orders())?;
    let suites: [(&'static str, WPoly<S>, WPoly<S>); 2] =
        [("(1,0)", WPoly::one(), WPoly::zero()), ("(1,z1)", WPoly::one(), WPoly::z1())];
    let mut out = Vec::new();
    for (label, h1, h2) in &suites {
        for f in functions {
            let f: WPoly<S> = lift_poly(f);
            let r = check_thm4(&f, h1, h2, domain, &quad, &th)?;
            out.push(Thm4Json {
                h: label,
                f: pretty(&f),
                exact_zero: r.report.exact_zero,
                holomorphic: r.holomorphic,
                hypothesis_harmonic: r.hypothesis_harmonic,
                sup_norm: r.report.sup_norm,
                witnesses: r.report.witnesses.len(),
                matches: r.verdict_holomorphic() == r.holomorphic && (r.holomorphic || !r.report.witnesses.is_empty()),
            });
        }
    }
    Ok(out)
}

/// Harmonic test functions of degree `<= max_deg` (all bigraded bases).
pub fn phi_basis(max_deg: u32) -> Vec<WPoly<f64>> {
    let mut out = Vec::new();
    for n in 0..=max_deg {
        for p in 0..=n {
            out.extend(harmonic_basis::<Q>(p, n - p).iter().map(|h| h.to_f64()));
        }
    }
    out
}

pub fn check_weak(cfg: &SuiteConfig, entries: &[CorpusEntry], domain: &Domain<Q>) -> Result<WeakJson, LabError> {
    let domain = domain.to_f64();
    let quad = domain.quadrature(cfg.weak_orders())?;
    let phis = phi_basis(cfg.weak.phi_degree);
    let tests = WeakTests::new(&quad, &domain, &phis);
    let results: Vec<WeakEntry> = parallel::pool().install(|| {
        entries
            .par_iter()
            .map(|e| {
                let trace = quaternion_trace(&quad, &e.f.to_f64());
                WeakEntry {
                    index: e.index,
                    expected_psi_regular: e.expected,
                    defect: tests.max_defect(WeakKind::Eq4, &quad, &trace),
                }
            })
            .collect()
    });
    let zb2 = QFunction::<f64>::complex(WPoly::z2bar());
    let zbar2_defect = tests.max_defect(WeakKind::Eq4, &quad, &quaternion_trace(&quad, &zb2));
    let max_positive_defect = results.iter().filter(|e| e.expected_psi_regular).map(|e| e.defect).fold(0.0, f64::max);
    let tolerance = cfg.weak.tolerance;
    Ok(WeakJson {
        orders: cfg.weak.orders,
        phi_degree: cfg.weak.phi_degree,
        phi_count: phis.len(),
        tolerance,
        max_positive_defect,
        zbar2_defect,
        passed: max_positive_defect < tolerance && zbar2_defect > cfg.thresholds.witness,
        entries: results,
    })
}

fn run_backend<S: Real + JsonScalar>(
    cfg: &SuiteConfig,
    entries: &[CorpusEntry],
    domain: &Domain<S>,
) -> Result<(Vec<EntryReport>, Vec<Thm4Json>), LabError> {
    let reports = check_entries(cfg, entries, domain)?;
    let thm4 = check_thm4_suite(cfg, &thm4_functions(entries), domain)?;
    Ok((reports, thm4))
}

pub fn run(cfg: &SuiteConfig) -> Result<VerifyReport, LabError> {
    let domain = cfg.domain()?;
    let entries = corpus(cfg);
    let (reports, thm4) = match cfg.backend {
        Backend::Exact => run_backend(cfg, &entries, &domain)?,
        Backend::Float => run_backend(cfg, &entries, &domain.to_f64())?,
    };
    let weak = check_weak(cfg, &entries, &domain)?;
    let confusion = confusion(&reports);
    let corpus_consistent =
        reports.iter().all(|e| e.psi_regular == e.expected_psi_regular && e.regular_after_gamma == e.psi_regular);
    let passed = corpus_consistent
        && confusion.eq2.diagonal()
        && confusion.cor1.diagonal()
        && confusion.cor2.diagonal()
        && thm4.iter().all(|t| t.matches)
        && weak.passed;
    Ok(VerifyReport {
        header: Header {
            command: "verify",
            seed: cfg.seed,
            backend: cfg.backend.as_str(),
            domain: domain.label().to_string(),
            corpus_size: cfg.corpus.size,
            max_degree: cfg.corpus.max_degree,
            residual_orders: orders_array(cfg.residual_orders()),
            thresholds: (&cfg.thresholds()).into(),
        },
        entries: reports,
        confusion,
        corpus_consistent,
        thm4,
        weak,
        passed,
    })
}

/// Runs the suites and writes `verify.json` under `out`.
pub fn command(cfg: &SuiteConfig, out: &std::path::Path) -> Result<(VerifyReport, PathBuf), LabError> {
    let report = run(cfg)?;
    let path = out.join(REPORT_FILE);
    write_file(&path, &report.to_json())?;
    Ok((report, path))
}
