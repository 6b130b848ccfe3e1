use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("imaginary unit has squared norm {norm_sq} instead of 1")]
    NotUnit { norm_sq: f64 },
    #[error("basis {{1, p, q, pq}} is not orthonormal (p.q = {dot})")]
    NotOrthonormal { dot: f64 },
    #[error("{what} is not harmonic")]
    NotHarmonic { what: &'static str },
    #[error("{what} is not holomorphic")]
    NotHolomorphic { what: &'static str },
    #[error("kernel evaluated at distance {distance:e} below the singularity guard {guard:e}")]
    SingularKernel { distance: f64, guard: f64 },
    #[error("evaluation point at distance {distance} from the boundary nodes, minimum is {min}")]
    TooCloseToBoundary { distance: f64, min: f64 },
    #[error("polynomial degree {degree} exceeds the configured maximum {max}")]
    DegreeTooHigh { degree: u32, max: u32 },
    #[error("Neumann data is not orthogonal to holomorphic functions; offending bidegrees {components:?}")]
    Incompatible { components: Vec<(u32, u32)> },
    #[error("h1 and h2 have a common boundary zero near node {node} (|h|^2 = {magnitude:e})")]
    CommonBoundaryZero { node: usize, magnitude: f64 },
    #[error("coefficients (a, b) must not both vanish")]
    ZeroCoefficients,
    #[error("quadrature order {order} is below the minimum {min}")]
    InvalidOrder { order: usize, min: usize },
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("sample point {point:?} is not outside the domain")]
    NotExterior { point: [f64; 4] },
    #[error("harmonic data produced incompatible Neumann data at bidegrees {components:?}")]
    ConstructionFailed { components: Vec<(u32, u32)> },
}
