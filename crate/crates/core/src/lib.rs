//! Quaternionic regularity on domains of `C^2 = H`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation:
//!
//! * [`quat`]: quaternions, complex pairs and the hypercomplex structures
//!   `J1`, `J2`, `J3`, `Jp` acting on real covectors.
//! * [`poly`] and [`wirtinger`]: exact polynomial calculus in Wirtinger
//!   coordinates, the Cauchy-Riemann-Fueter operators `D` and `D'`, the
//!   q-holomorphic and `Jp` formulations of psi-regularity.
//! * [`boundary`] and [`quadrature`]: domains `{rho < 0}`, the boundary
//!   operators `dbar_n`, `L`, `N`, `T`, and product quadrature on the
//!   boundary hypersurface.
//! * [`forms`]: three-form evaluation, the Cauchy-Fueter and
//!   Bochner-Martinelli kernels and the integral transforms built on them.
//! * [`criteria`]: boundary criteria for psi-regularity, regularity and
//!   holomorphy, strong and weak.
//! * [`neumann`]: the exact bigraded harmonic decomposition on the unit
//!   sphere and the conjugate-harmonic construction through the diagonal
//!   `dbar`-Neumann problem.
//!
//! Two scalar backends are supported through [`scalar::Real`]: exact
//! rationals ([`scalar::Q`], Gaussian rationals once complexified) and `f64`.
#![no_std]

extern crate alloc;

pub mod boundary;
pub mod criteria;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod neumann;
pub mod poly;
pub mod quadrature;
pub mod quat;
pub mod scalar;
pub mod wirtinger;

pub use error::{Error, Result};
pub use poly::WPoly;
pub use quat::{ComplexPair, ImaginaryUnit, Quaternion};
pub use scalar::{Real, Q};
pub use wirtinger::QFunction;
