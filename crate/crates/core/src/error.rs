use crate::graph::{EdgeId, VertexId};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown edge identity {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex identity {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate edge identity {0}")]
    DuplicateEdge(EdgeId),
    #[error("duplicate vertex identity {0}")]
    DuplicateVertex(VertexId),
    #[error("{what} needs {required} steps, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        required: String,
        cap: String,
    },
    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(i64),
    #[error("interpolation needs at least one sample point")]
    NoSamplePoints,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("assignment has modulus {found}, expected {expected}")]
    ModulusMismatch { expected: u32, found: u32 },
    #[error("assignment has no value for edge {0}")]
    MissingEdgeValue(EdgeId),
    #[error("assignment has no value for vertex {0}")]
    MissingVertexValue(VertexId),
    #[error("assignment is not a flow")]
    NotAFlow,
    #[error("assignment is not a tension")]
    NotATension,
    #[error("reorientation is not totally cyclic")]
    NotTotallyCyclic,
    #[error("edge {0} is a loop or a coloop")]
    LoopOrColoop(EdgeId),
    #[error("invalid spanning forest: {0}")]
    InvalidForest(String),
    #[error("right-hand side {0:?} is not feasible")]
    InfeasibleRhs(Vec<i64>),
    #[error("right-hand side has length {found}, graph has {expected} vertices")]
    RhsLength { expected: usize, found: usize },
    #[error("structure constants must be nonzero")]
    ZeroStructureConstant,
    #[error("invalid triple: {0}")]
    InvalidTriple(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn cap(what: &'static str, required: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            required: required.to_string(),
            cap: cap.to_string(),
        }
    }
}
