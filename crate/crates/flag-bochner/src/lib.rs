//! Command-line driver and file formats around [`flag_bochner_core`]:
//! request parsing, JSON and table reports, parallel sweeps, and a numerical
//! cross-check of the exact expansions.

pub mod cli;
pub mod numeric;
pub mod report;
pub mod request;
pub mod sweep;

pub use flag_bochner_core as core;

use flag_bochner_core::Error;

/// Anything that stops a run, grouped by process exit code.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error(transparent)]
    Parse(#[from] request::ParseError),
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(Error),
    #[error("numeric evaluation failed: {0}")]
    Numeric(numeric::NumericError),
    #[error("numeric check failed: {0}")]
    CheckFailed(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Failure {
    /// 1 for bad input, 2 for a broken internal invariant, 3 for a failed
    /// numeric check.
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Parse(_) | Failure::Validation(_) | Failure::Io(_) => 1,
            Failure::Core(e) => match e {
                Error::InvalidGroup { .. }
                | Error::EmptyPainting
                | Error::NodeOutOfRange { .. }
                | Error::UnitTail { .. }
                | Error::NotARoot(_)
                | Error::NotPositive(_)
                | Error::MinorTooLarge { .. }
                | Error::CoefficientCount { .. }
                | Error::DegreeTooLow(_)
                | Error::NonPositiveCoefficient => 1,
                Error::PoincareNotPolynomial
                | Error::PoincareOverflow
                | Error::PositionCollision { .. }
                | Error::TruncationMismatch(..)
                | Error::NonlinearCoefficient
                | Error::NonzeroConstant
                | Error::Invariant(_) => 2,
            },
            Failure::Numeric(_) | Failure::CheckFailed(_) => 3,
        }
    }
}
