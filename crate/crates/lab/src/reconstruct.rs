//! `reconstruct`: convergence table of the boundary-integral transforms.
//!
//! `f = conj z1 + conj z2 j` is reconstructed at an interior target (where
//! it must reproduce `f`) and an exterior target (where it must vanish),
//! with both the Cauchy-Fueter transform and the `L`-corrected
//! Bochner-Martinelli form; the constant trace `1` is reconstructed at the
//! origin.

use std::path::{Path, PathBuf};
use std::time::Instant;

use fueter_core::boundary::Domain;
use fueter_core::criteria::{quaternion_l_trace, quaternion_trace};
use fueter_core::forms::{cauchy_fueter_transform, prop1_reconstruction, EvalGuard};
use fueter_core::quadrature::QuadOrders;
use fueter_core::{ComplexPair, QFunction, Quaternion, WPoly};
use num_complex::Complex;
use serde::Serialize;

use crate::config::SuiteConfig;
use crate::error::LabError;

pub const TABLE_FILE: &str = "reconstruct.csv";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub function: &'static str,
    pub method: &'static str,
    pub target: &'static str,
    pub eta: usize,
    pub xi1: usize,
    pub xi2: usize,
    pub z0: f64,
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
    pub exact0: f64,
    pub exact1: f64,
    pub exact2: f64,
    pub exact3: f64,
    pub computed0: f64,
    pub computed1: f64,
    pub computed2: f64,
    pub computed3: f64,
    pub abs_error: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub rows: Vec<Row>,
    pub failures: Vec<String>,
}

impl Table {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(r).expect("row serializes");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
    }
}

fn pair(x: [f64; 4]) -> ComplexPair<f64> {
    ComplexPair::new(Complex::new(x[0], x[1]), Complex::new(x[2], x[3]))
}

struct Case {
    function: &'static str,
    target: &'static str,
    f: QFunction<f64>,
    z: [f64; 4],
    exterior: bool,
}

/// Rows in the order `case, method, orders`.
pub fn run(cfg: &SuiteConfig) -> Result<Table, LabError> {
    let domain: Domain<f64> = cfg.domain()?.to_f64();
    let rho = |x: [f64; 4]| domain.rho().eval(&pair(x)).re;
    let rc = &cfg.reconstruct;
    if !(rho(rc.interior) < 0.0) {
        return Err(LabError::Precondition(format!("reconstruct.interior {:?} is not inside the domain", rc.interior)));
    }
    if !(rho(rc.exterior) > 0.0) {
        return Err(LabError::Precondition(format!(
            "reconstruct.exterior {:?} is not outside the domain",
            rc.exterior
        )));
    }
    let f = QFunction::<f64>::new(WPoly::z1bar(), WPoly::z2bar());
    let one = QFunction::<f64>::constant(&Quaternion::from_real(1.0));
    let cases = [
        Case { function: "zb1+zb2*j", target: "interior", f: f.clone(), z: rc.interior, exterior: false },
        Case { function: "zb1+zb2*j", target: "exterior", f, z: rc.exterior, exterior: true },
        Case { function: "1", target: "origin", f: one, z: [0.0; 4], exterior: false },
    ];
    let orders = cfg.reconstruct_orders();
    let quads = orders.iter().map(|o| domain.quadrature(*o)).collect::<Result<Vec<_>, _>>()?;
    let guard = EvalGuard::default();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for case in &cases {
        let z = pair(case.z);
        let exact = if case.exterior { Quaternion::from_real(0.0) } else { case.f.eval(&z) };
        for method in ["cauchy_fueter", "prop1"] {
            let mut errors = Vec::new();
            for (o, quad) in orders.iter().zip(&quads) {
                let start = Instant::now();
                let trace = quaternion_trace(quad, &case.f);
                let value = if method == "prop1" {
                    let lf = quaternion_l_trace(quad, &domain, &case.f);
                    prop1_reconstruction(quad, &trace, &lf, &z, &guard)?
                } else {
                    cauchy_fueter_transform(quad, &trace, &z, &guard)?
                };
                let seconds = start.elapsed().as_secs_f64();
                let err = (value.clone() - exact.clone()).abs();
                errors.push(err);
                rows.push(make_row(case, method, *o, &exact, &value, err, seconds));
            }
            failures.extend(assess(case, method, &errors, cfg));
        }
    }
    Ok(Table { rows, failures })
}

fn make_row(
    case: &Case,
    method: &'static str,
    o: QuadOrders,
    exact: &Quaternion<f64>,
    value: &Quaternion<f64>,
    abs_error: f64,
    seconds: f64,
) -> Row {
    let (e, v) = (exact.to_array(), value.to_array());
    Row {
        function: case.function,
        method,
        target: case.target,
        eta: o.eta,
        xi1: o.xi1,
        xi2: o.xi2,
        z0: case.z[0],
        z1: case.z[1],
        z2: case.z[2],
        z3: case.z[3],
        exact0: e[0],
        exact1: e[1],
        exact2: e[2],
        exact3: e[3],
        computed0: v[0],
        computed1: v[1],
        computed2: v[2],
        computed3: v[3],
        abs_error,
        seconds,
    }
}

fn assess(case: &Case, method: &str, errors: &[f64], cfg: &SuiteConfig) -> Vec<String> {
    let rc = &cfg.reconstruct;
    let label = format!("{} {} {}", case.function, case.target, method);
    let mut out = Vec::new();
    let last = *errors.last().expect("at least one order");
    if case.target == "origin" {
        if let Some(e) = errors.iter().find(|e| **e >= rc.constant_tolerance) {
            out.push(format!("{label}: error {e:e} >= {:e}", rc.constant_tolerance));
        }
        return out;
    }
    if last >= rc.tolerance {
        out.push(format!("{label}: error {last:e} at the top order >= {:e}", rc.tolerance));
    }
    if !case.exterior && errors.windows(2).any(|w| w[1] >= w[0] && w[1] >= rc.noise_floor) {
        out.push(format!("{label}: errors {errors:?} do not decrease"));
    }
    out
}

pub fn command(cfg: &SuiteConfig, out: &Path) -> Result<(Table, PathBuf), LabError> {
    let table = run(cfg)?;
    let path = out.join(TABLE_FILE);
    crate::report::write_file(&path, &table.to_csv())?;
    Ok((table, path))
}
