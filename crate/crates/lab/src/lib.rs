//! Verification suites, file formats and the command-line driver for
//! `fueter-core`.
//!
//! Configuration is TOML ([`config`]), polynomials and reports are JSON
//! ([`polyjson`], [`report`]), tables are CSV. The four commands live in
//! [`verify`], [`reconstruct`], [`conjugate`] and [`moments`].

pub mod config;
pub mod conjugate;
pub mod corpus;
pub mod error;
pub mod moments;
pub mod parallel;
pub mod polyjson;
pub mod reconstruct;
pub mod report;
pub mod verify;

pub use config::{Backend, DomainSpec, SuiteConfig};
pub use error::{LabError, EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_PRECONDITION};
