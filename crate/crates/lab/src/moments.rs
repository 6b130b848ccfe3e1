//! `moments`: Hopf quadrature against the closed-form sphere moments
//! `int_{S^3} z1^a conj(z1)^b z2^c conj(z2)^d`, plus a node dump.

use std::path::{Path, PathBuf};

use fueter_core::quadrature::{sphere_monomial_integral_f64, QuadOrders, SurfaceQuadrature};
use serde::Serialize;

use crate::error::LabError;

pub const TABLE_FILE: &str = "moments.csv";
pub const NODES_FILE: &str = "quadrature.csv";
/// Moments with `a + c <= MAX_DEGREE` and `b + d <= MAX_DEGREE`.
pub const MAX_DEGREE: u32 = 8;
pub const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub exact: f64,
    pub quadrature_re: f64,
    pub quadrature_im: f64,
    /// Relative error, or absolute error when the exact moment is zero.
    pub rel_err: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NodeRow {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub weight: f64,
    pub n0: f64,
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
}

pub fn table(quad: &SurfaceQuadrature) -> Vec<Row> {
    let mut rows = Vec::new();
    for a in 0..=MAX_DEGREE {
        for c in 0..=MAX_DEGREE - a {
            for b in 0..=MAX_DEGREE {
                for d in 0..=MAX_DEGREE - b {
                    let value = quad.integrate(|n| {
                        let z = n.complex_pair();
                        z.z1.powu(a) * z.z1.conj().powu(b) * z.z2.powu(c) * z.z2.conj().powu(d)
                    });
                    let exact = sphere_monomial_integral_f64(a, b, c, d);
                    let err = ((value.re - exact).powi(2) + value.im.powi(2)).sqrt();
                    let rel_err = if exact == 0.0 { err } else { err / exact.abs() };
                    rows.push(Row { a, b, c, d, exact, quadrature_re: value.re, quadrature_im: value.im, rel_err });
                }
            }
        }
    }
    rows
}

pub fn nodes(quad: &SurfaceQuadrature) -> Vec<NodeRow> {
    quad.nodes()
        .iter()
        .map(|n| NodeRow {
            x0: n.point[0],
            x1: n.point[1],
            x2: n.point[2],
            x3: n.point[3],
            weight: n.weight,
            n0: n.normal[0],
            n1: n.normal[1],
            n2: n.normal[2],
            n3: n.normal[3],
        })
        .collect()
}

pub fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("row serializes");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

pub fn worst(rows: &[Row]) -> f64 {
    rows.iter().map(|r| r.rel_err).fold(0.0, f64::max)
}

pub struct Outcome {
    pub rows: Vec<Row>,
    pub worst: f64,
    pub table: PathBuf,
    pub nodes: PathBuf,
}

/// Moments are always taken on the unit sphere, where the closed form holds.
pub fn command(orders: QuadOrders, out: &Path) -> Result<Outcome, LabError> {
    let quad = SurfaceQuadrature::hopf(orders)?;
    let rows = table(&quad);
    let table_path = out.join(TABLE_FILE);
    let nodes_path = out.join(NODES_FILE);
    crate::report::write_file(&table_path, &to_csv(&rows))?;
    crate::report::write_file(&nodes_path, &to_csv(&nodes(&quad)))?;
    Ok(Outcome { worst: worst(&rows), rows, table: table_path, nodes: nodes_path })
}
