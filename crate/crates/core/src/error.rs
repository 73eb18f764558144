use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Attenuation mechanism, used to tag errors raised while composing a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mechanism {
    FreeSpace,
    Rain,
    Fog,
    Gas,
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mechanism::FreeSpace => "free-space",
            Mechanism::Rain => "rain",
            Mechanism::Fog => "fog",
            Mechanism::Gas => "gas",
        })
    }
}

/// Coarse error classification, stable across variants. The CLI maps it to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    OutOfModelRange,
    Asset,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid {quantity}: {value} ({reason})")]
    InvalidQuantity {
        quantity: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{parameter} = {value} is outside the {model} validity range [{min}, {max}]")]
    OutOfModelRange {
        model: &'static str,
        parameter: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("data asset {name}: {reason}")]
    Asset { name: String, reason: String },

    #[error("{mechanism} attenuation: {source}")]
    Mechanism {
        mechanism: Mechanism,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidQuantity { .. } | Error::InvalidInput(_) => ErrorKind::InvalidInput,
            Error::OutOfModelRange { .. } => ErrorKind::OutOfModelRange,
            Error::Asset { .. } => ErrorKind::Asset,
            Error::Mechanism { source, .. } => source.kind(),
        }
    }

    pub(crate) fn in_mechanism(self, mechanism: Mechanism) -> Self {
        Error::Mechanism {
            mechanism,
            source: Box::new(self),
        }
    }

    pub(crate) fn asset(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Asset {
            name: name.into(),
            reason: reason.into(),
        }
    }
}

pub(crate) fn check_range(
    model: &'static str,
    parameter: &'static str,
    value: f64,
    min: f64,
    max: f64,
) -> Result<()> {
    if value >= min && value <= max {
        Ok(())
    } else {
        Err(Error::OutOfModelRange {
            model,
            parameter,
            value,
            min,
            max,
        })
    }
}
