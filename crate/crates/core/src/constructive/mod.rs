//! Constructive coloring pipelines. Each is an executable proof: it reduces
//! the input with invertible rewrites, builds a coloring of the reduced core
//! from structural invariants, replays the rewrites backward with bounded
//! local repairs, and verifies the result. A verification failure is reported
//! as `Failed` with a full trace, never as a wrong coloring.

pub mod distance2;
pub mod partition;
pub mod paths;
pub mod rewrite;
pub mod weighted;

use crate::classify::ClassTag;
use thiserror::Error;

/// Full diagnostic emitted when a pipeline's internal checks or final
/// verification fail. This is the primary debugging artifact.
#[derive(Clone, Debug)]
pub struct ConstructionTrace {
    pub graph6: String,
    pub violated: String,
    pub report: String,
}

impl std::fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "construction failed on {}", self.graph6)?;
        writeln!(f, "violated: {}", self.violated)?;
        write!(f, "{}", self.report)
    }
}

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("graph is not in class {required}")]
    NotInClass { required: ClassTag },
    #[error("{0}")]
    Failed(Box<ConstructionTrace>),
    #[error("extension stuck while restoring vertex {vertex}")]
    ExtensionStuck { vertex: usize },
    #[error("search budget exhausted ({context})")]
    Budget { context: &'static str },
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("minimum degree 2 required, vertex {vertex} has degree {degree}")]
    MinDegree { vertex: usize, degree: usize },
}

impl ConstructError {
    pub fn is_failed(&self) -> bool {
        matches!(self, ConstructError::Failed(_))
    }
}
