//! Job files in, deterministic Poincaré tables out.

pub mod job;
pub mod pipeline;
pub mod report;

use fhcalc_core::fdalg::AlgebraError;
use fhcalc_core::functor_calc::CalcError;
use fhcalc_core::symgrp::SymError;
use thiserror::Error;

pub use job::{Format, JobSpec, MAX_TRUNCATION, SCHEMA};
pub use pipeline::run_job;
pub use report::{Report, ReportBody};

#[derive(Debug, Error)]
pub enum JobError {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("computation guard: {0}")]
    Guard(String),
    #[error("computation failed: {0}")]
    Internal(String),
}

impl JobError {
    /// Process exit status: 1 validation, 2 computation guard.
    pub fn exit_code(&self) -> i32 {
        match self {
            JobError::Validation(_) => 1,
            JobError::Guard(_) | JobError::Internal(_) => 2,
        }
    }
}

/// Exit status for a failed verification run.
pub const EXIT_VERIFICATION_FAILED: i32 = 3;

impl From<AlgebraError> for JobError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::SizeGuard(_) => JobError::Guard(e.to_string()),
            AlgebraError::NotExact(_) | AlgebraError::Linalg(_) => JobError::Internal(e.to_string()),
            _ => JobError::Validation(e.to_string()),
        }
    }
}

impl From<SymError> for JobError {
    fn from(e: SymError) -> Self {
        match e {
            SymError::EnumerationLimit(_) => JobError::Guard(e.to_string()),
            // Surfaced verbatim: a hypothesis the job did not establish.
            _ => JobError::Validation(e.to_string()),
        }
    }
}

impl From<CalcError> for JobError {
    fn from(e: CalcError) -> Self {
        match e {
            CalcError::Sym(s) => s.into(),
            CalcError::Guard(_) => JobError::Guard(e.to_string()),
            CalcError::TruncationMismatch(..) | CalcError::Invalid(_) => JobError::Validation(e.to_string()),
        }
    }
}
