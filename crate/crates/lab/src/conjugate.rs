//! `conjugate`: the conjugate harmonic `f2` of a harmonic `f1` on the unit
//! ball, with an exactness certificate.

use std::path::{Path, PathBuf};

use fueter_core::neumann::BallNeumann;
use fueter_core::wirtinger::apply_dprime;
use fueter_core::{QFunction, Real, WPoly, Q};
use serde::{Deserialize, Serialize};

use crate::config::{Backend, SuiteConfig};
use crate::error::LabError;
use crate::polyjson::{poly_from_json, poly_to_json, pretty, JsonScalar, TermRecord};

pub const OUTPUT_FILE: &str = "conjugate.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// `D'(f1 + f2 j) = 0` (exactly on the exact backend).
    pub dprime_residual_exact_zero: bool,
    /// Holomorphic bidegrees `(p, 0)` of the Neumann data `conj(L f1)`;
    /// empty when the data is compatible.
    pub compat_components: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugateOutput {
    pub f1: Vec<TermRecord>,
    pub f2: Vec<TermRecord>,
    pub certificate: Certificate,
}

impl ConjugateOutput {
    pub fn passed(&self) -> bool {
        self.certificate.dprime_residual_exact_zero && self.certificate.compat_components.is_empty()
    }
}

pub fn read_input(path: &Path) -> Result<Vec<TermRecord>, LabError> {
    let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    serde_json::from_str(&text)
        .map_err(|e| LabError::Format { path: path.display().to_string(), message: e.to_string() })
}

pub fn solve<S: Real + JsonScalar>(f1: &WPoly<S>, max_degree: u32) -> Result<ConjugateOutput, LabError> {
    if !f1.is_harmonic() {
        return Err(LabError::Precondition(format!("f1 is not harmonic: laplacian(f1) = {}", pretty(&f1.laplacian()))));
    }
    let solver = BallNeumann::<S>::new(max_degree);
    let sphere = solver.sphere();
    let data = sphere.reduce(&sphere.op_l(f1).numerator.conj());
    let compat = solver.compatibility_check(&data)?;
    let compat_components = compat.offending.iter().map(|&(p, q)| [p, q]).collect();
    let f2 = if compat.compatible { solver.neumann_solve(&data)? } else { WPoly::zero() };
    let f = QFunction::new(f1.clone(), f2);
    Ok(ConjugateOutput {
        f1: poly_to_json(f1),
        f2: poly_to_json(&f.f2),
        certificate: Certificate {
            dprime_residual_exact_zero: compat.compatible && apply_dprime(&f).is_zero(),
            compat_components,
        },
    })
}

fn parse<S: JsonScalar>(records: &[TermRecord], input: &Path) -> Result<WPoly<S>, LabError> {
    poly_from_json(records).map_err(|message| LabError::Format { path: input.display().to_string(), message })
}

pub fn command(cfg: &SuiteConfig, input: &Path, out: &Path) -> Result<(ConjugateOutput, PathBuf), LabError> {
    let records = read_input(input)?;
    let output = match cfg.backend {
        Backend::Exact => solve(&parse::<Q>(&records, input)?, cfg.neumann.max_degree)?,
        Backend::Float => solve(&parse::<f64>(&records, input)?, cfg.neumann.max_degree)?,
    };
    let path = out.join(OUTPUT_FILE);
    crate::report::write_file(&path, &crate::report::to_json(&output))?;
    Ok((output, path))
}
