//! Suite configuration (TOML).
//!
//! Every field has a default, so an empty file is a valid configuration.
//! [`SuiteConfig::to_canonical`] is the canonical text form: parsing it
//! gives back an identical value.

use std::path::Path;

use fueter_core::boundary::Domain;
use fueter_core::criteria::{
    Thresholds, DEFAULT_COMMON_ZERO_RATIO, DEFAULT_MAX_WITNESSES, DEFAULT_WITNESS_THRESHOLD, DEFAULT_ZERO_THRESHOLD,
};
use fueter_core::neumann::DEFAULT_MAX_DEGREE;
use fueter_core::quadrature::QuadOrders;
use fueter_core::scalar::q_from_f64;
use fueter_core::Q;
use serde::{Deserialize, Serialize};

use crate::error::LabError;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Exact,
    Float,
}

impl Backend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DomainSpec {
    #[default]
    Sphere,
    Ellipsoid {
        r1: f64,
        r2: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct QuadratureConfig {
    /// Orders `(eta, xi1, xi2)` for transforms and moments.
    pub orders: [usize; 3],
    /// Orders of the node grid on which residual reports are sampled.
    pub residual_orders: [usize; 3],
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { orders: [32, 32, 32], residual_orders: [6, 8, 8] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub size: usize,
    pub max_degree: u32,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self { size: 50, max_degree: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ThresholdConfig {
    pub zero: f64,
    pub witness: f64,
    pub max_witnesses: usize,
    pub common_zero_ratio: f64,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self {
            zero: DEFAULT_ZERO_THRESHOLD,
            witness: DEFAULT_WITNESS_THRESHOLD,
            max_witnesses: DEFAULT_MAX_WITNESSES,
            common_zero_ratio: DEFAULT_COMMON_ZERO_RATIO,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NeumannConfig {
    pub max_degree: u32,
}

impl Default for NeumannConfig {
    fn default() -> Self {
        Self { max_degree: DEFAULT_MAX_DEGREE }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WeakConfig {
    /// Harmonic test functions of degree up to this.
    pub phi_degree: u32,
    pub orders: [usize; 3],
    pub tolerance: f64,
}

impl Default for WeakConfig {
    fn default() -> Self {
        Self { phi_degree: 4, orders: [16, 16, 16], tolerance: 1e-8 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReconstructConfig {
    pub orders: Vec<[usize; 3]>,
    pub interior: [f64; 4],
    pub exterior: [f64; 4],
    pub tolerance: f64,
    pub constant_tolerance: f64,
    /// Errors below this count as converged in the monotonicity check.
    pub noise_floor: f64,
}

impl Default for ReconstructConfig {
    fn default() -> Self {
        Self {
            orders: vec![[8, 8, 8], [16, 16, 16], [32, 32, 32]],
            interior: [0.25, 0.0, 0.25, 0.0],
            exterior: [3.0, 0.0, 0.0, 0.0],
            tolerance: 1e-8,
            constant_tolerance: 1e-12,
            noise_floor: 1e-14,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub backend: Backend,
    pub out: String,
    pub domain: DomainSpec,
    pub quadrature: QuadratureConfig,
    pub corpus: CorpusConfig,
    pub thresholds: ThresholdConfig,
    pub neumann: NeumannConfig,
    pub weak: WeakConfig,
    pub reconstruct: ReconstructConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            backend: Backend::Exact,
            out: String::from("out"),
            domain: DomainSpec::Sphere,
            quadrature: QuadratureConfig::default(),
            corpus: CorpusConfig::default(),
            thresholds: ThresholdConfig::default(),
            neumann: NeumannConfig::default(),
            weak: WeakConfig::default(),
            reconstruct: ReconstructConfig::default(),
        }
    }
}

fn orders(o: [usize; 3]) -> QuadOrders {
    QuadOrders::new(o[0], o[1], o[2])
}

impl SuiteConfig {
    /// Parses and validates; `origin` names the source in diagnostics.
    pub fn parse(text: &str, origin: &str) -> Result<Self, LabError> {
        let cfg: SuiteConfig =
            toml::from_str(text).map_err(|e| LabError::Config { path: origin.to_string(), message: e.to_string() })?;
        cfg.validate().map_err(|message| LabError::Config { path: origin.to_string(), message })?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, LabError> {
        let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn to_canonical(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    pub fn validate(&self) -> Result<(), String> {
        let check_orders = |name: &str, o: &[usize; 3]| orders(*o).validate().map_err(|e| format!("{name}: {e}"));
        check_orders("quadrature.orders", &self.quadrature.orders)?;
        check_orders("quadrature.residual_orders", &self.quadrature.residual_orders)?;
        check_orders("weak.orders", &self.weak.orders)?;
        if self.reconstruct.orders.is_empty() {
            return Err("reconstruct.orders must not be empty".into());
        }
        for o in &self.reconstruct.orders {
            check_orders("reconstruct.orders", o)?;
        }
        if let DomainSpec::Ellipsoid { r1, r2 } = self.domain {
            if !(r1 > 0.0 && r2 > 0.0 && r1.is_finite() && r2.is_finite()) {
                return Err(format!("domain radii must be positive and finite, got ({r1}, {r2})"));
            }
        }
        if self.corpus.size < 2 {
            return Err("corpus.size must be at least 2".into());
        }
        if self.corpus.max_degree == 0 || self.corpus.max_degree > self.neumann.max_degree {
            return Err(format!("corpus.max_degree must lie in 1..={} (neumann.max_degree)", self.neumann.max_degree));
        }
        let t = &self.thresholds;
        for (name, v) in [
            ("thresholds.zero", t.zero),
            ("thresholds.witness", t.witness),
            ("thresholds.common_zero_ratio", t.common_zero_ratio),
            ("weak.tolerance", self.weak.tolerance),
            ("reconstruct.tolerance", self.reconstruct.tolerance),
            ("reconstruct.constant_tolerance", self.reconstruct.constant_tolerance),
            ("reconstruct.noise_floor", self.reconstruct.noise_floor),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("{name} must be positive, got {v}"));
            }
        }
        Ok(())
    }

    pub fn thresholds(&self) -> Thresholds {
        let t = &self.thresholds;
        Thresholds {
            zero: t.zero,
            witness: t.witness,
            max_witnesses: t.max_witnesses,
            common_zero_ratio: t.common_zero_ratio,
        }
    }

    pub fn orders(&self) -> QuadOrders {
        orders(self.quadrature.orders)
    }

    pub fn residual_orders(&self) -> QuadOrders {
        orders(self.quadrature.residual_orders)
    }

    pub fn weak_orders(&self) -> QuadOrders {
        orders(self.weak.orders)
    }

    pub fn reconstruct_orders(&self) -> Vec<QuadOrders> {
        self.reconstruct.orders.iter().copied().map(orders).collect()
    }

    /// The configured domain with exact rational radii.
    pub fn domain(&self) -> Result<Domain<Q>, LabError> {
        match self.domain {
            DomainSpec::Sphere => Ok(Domain::unit_sphere()),
            DomainSpec::Ellipsoid { r1, r2 } => {
                let to_q = |r: f64| {
                    q_from_f64(r).ok_or_else(|| LabError::Config {
                        path: String::from("domain"),
                        message: format!("radius {r} is not a finite number"),
                    })
                };
                Ok(Domain::ellipsoid(to_q(r1)?, to_q(r2)?)?)
            }
        }
    }
}
