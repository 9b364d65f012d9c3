//! Enumeration, sweeps, claim re-verification, counterexample hunts, and the
//! weight-grid experiment, all persisted through an append-only ledger.

pub mod chromatic;
pub mod claims;
pub mod enumerate;
pub mod hunt;
pub mod ledger;
pub mod subdivision;
pub mod sweep;
pub mod weights_experiment;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("enumeration for n = {n} exceeds the built-in limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("line {line}: {msg}")]
    MalformedGraph6 { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    BadInput(String),
}

/// Version stamp written into ledgers and reports.
pub fn engine_version() -> String {
    format!("subpack-core {}", env!("CARGO_PKG_VERSION"))
}
