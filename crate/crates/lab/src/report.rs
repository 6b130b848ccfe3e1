//! JSON shapes of the reports.

use fueter_core::criteria::{ResidualReport, Thresholds};
use fueter_core::quadrature::QuadOrders;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessJson {
    pub node: usize,
    /// Two complex residual components as `[re, im]` pairs.
    pub value: [[f64; 2]; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualJson {
    pub criterion: &'static str,
    pub domain: String,
    pub exact_zero: bool,
    pub sup_norm: f64,
    pub nodes: usize,
    pub orders: [usize; 3],
    pub witnesses: Vec<WitnessJson>,
}

pub fn orders_array(o: QuadOrders) -> [usize; 3] {
    [o.eta, o.xi1, o.xi2]
}

impl From<&ResidualReport> for ResidualJson {
    fn from(r: &ResidualReport) -> Self {
        Self {
            criterion: r.criterion.as_str(),
            domain: r.domain.clone(),
            exact_zero: r.exact_zero,
            sup_norm: r.sup_norm,
            nodes: r.nodes,
            orders: orders_array(r.orders),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    node: w.node,
                    value: [[w.value[0].re, w.value[0].im], [w.value[1].re, w.value[1].im]],
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdsJson {
    pub zero: f64,
    pub witness: f64,
    pub max_witnesses: usize,
    pub common_zero_ratio: f64,
}

impl From<&Thresholds> for ThresholdsJson {
    fn from(t: &Thresholds) -> Self {
        Self {
            zero: t.zero,
            witness: t.witness,
            max_witnesses: t.max_witnesses,
            common_zero_ratio: t.common_zero_ratio,
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn write_file(path: &std::path::Path, contents: &str) -> Result<(), crate::LabError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(|e| crate::LabError::io(dir, e))?;
    }
    std::fs::write(path, contents).map_err(|e| crate::LabError::io(path, e))
}
