use std::io;

use thiserror::Error;

/// Errors raised while building or querying graphs.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("malformed edge at index {index}: expected two vertex ids, got {got}")]
    MalformedPair { index: usize, got: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u64, n: usize },
    #[error("common-neighbor probe needs two distinct vertices, got {0} twice")]
    SameVertex(u32),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("graph has {0} vertices, more than a 32-bit id space allows")]
    TooManyVertices(u64),
}

/// Errors raised by the edge-list reader and the output writers.
#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: token {token:?} is not a non-negative integer")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected 2 ids, found {found}")]
    WrongArity { line: usize, found: usize },
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl IngestError {
    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        IngestError::Io {
            context: context.into(),
            source,
        }
    }
}

/// Errors raised by the reference enumerator.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; oracle limit is {limit}")]
    LimitExceeded { n: usize, limit: usize },
}
