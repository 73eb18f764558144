use std::path::PathBuf;

use mmwave_core::ErrorKind;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_OUT_OF_RANGE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Model(#[from] mmwave_core::Error),

    #[error("{0}")]
    Input(String),

    #[error("scenario file {path}")]
    Scenario {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("{path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(e) => match e.kind() {
                ErrorKind::InvalidInput => EXIT_INVALID_INPUT,
                ErrorKind::OutOfModelRange => EXIT_OUT_OF_RANGE,
                ErrorKind::Asset => EXIT_IO,
            },
            CliError::Input(_) | CliError::Scenario { .. } => EXIT_INVALID_INPUT,
            CliError::Io { .. } => EXIT_IO,
        }
    }

    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io { source, .. } if source.kind() == std::io::ErrorKind::BrokenPipe)
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
