use std::path::PathBuf;

use fueter_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{path}: {message}")]
    Config { path: String, message: String },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Format { path: String, message: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl LabError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Config { .. } | LabError::Io { .. } | LabError::Format { .. } => EXIT_CONFIG,
            LabError::Precondition(_) => EXIT_PRECONDITION,
            LabError::Core(e) => match e {
                CoreError::InvalidOrder { .. } | CoreError::InvalidDomain(_) => EXIT_CONFIG,
                CoreError::Incompatible { .. } | CoreError::ConstructionFailed { .. } => EXIT_MISMATCH,
                _ => EXIT_PRECONDITION,
            },
        }
    }
}
