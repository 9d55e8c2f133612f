use crate::elements::ElementSet;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {got} exceeds the supported maximum of {max}")]
    DimensionTooLarge { got: usize, max: usize },

    #[error("enumeration cap exceeded in {what}: {size} > {cap}")]
    EnumerationCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("circuit axioms violated: {reason} (sets {c1} and {c2})")]
    InvalidCircuitAxioms {
        c1: ElementSet,
        c2: ElementSet,
        reason: &'static str,
    },

    #[error("{0} is not a circuit of this matroid")]
    NotACircuit(ElementSet),

    #[error("operation requires a simple matroid (no loops or parallel elements)")]
    NotSimple,

    #[error("{0} is not a flat of this matroid")]
    NotAFlat(ElementSet),

    #[error("seed set {0} is not a circuit of this matroid")]
    SeedNotCircuits(ElementSet),

    #[error("the chains do not belong to the same matroid")]
    DifferentMatroids,

    #[error("invalid M-chain: {0}")]
    InvalidChain(String),

    #[error("no deformation path found between the given M-chains")]
    NoPathFound,

    #[error("graph is not connected")]
    NotConnected,

    #[error("operation requires a simple graph: {0}")]
    NotSimpleGraph(String),

    #[error("invalid S-labeling: {0}")]
    InvalidSLabel(String),

    #[error("invalid M-partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal property violation: {0}")]
    PropertyViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
