use thiserror::Error;

use crate::graph::Edge;

/// Errors produced by the library.
///
/// The variants fall into four families which the CLI maps onto exit codes:
/// malformed or inconsistent input, exceeded search/closure limits, violated
/// construction hypotheses, and internal invariant violations (bugs).
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("{what} exceeds the limit of {limit}")]
    Resource { what: &'static str, limit: usize },

    #[error("generator {generator} is not an automorphism of the graph (edge {edge} maps to a non-edge)")]
    NotAutomorphism { generator: usize, edge: Edge },

    #[error("generator {generator} maps block {block} onto a set that is not a block")]
    NotInvariant { generator: usize, block: usize },

    #[error("block {block} contains the edge {edge}; blocks must be independent sets")]
    AdjacentInBlock { block: usize, edge: Edge },

    #[error("part {part} does not induce a complete subgraph: edge {missing} is missing")]
    IncompletePart { part: usize, missing: Edge },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("pipeline stage `{stage}` failed: {source}")]
    Pipeline {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::Pipeline { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
