use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A connection-set spec violated an invariant.
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// Malformed textual input, with 1-based position information.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A vertex mask was built for a different graph order.
    #[error("fill state is over {mask} vertices but the graph has {graph}")]
    OrderMismatch { mask: usize, graph: usize },

    /// Exact search refused to run; never answered heuristically.
    #[error("graph has {order} vertices, above the search ceiling {ceiling}")]
    CeilingExceeded { order: usize, ceiling: usize },

    /// Two operands live in different quadratic contexts.
    #[error("mismatched quadratic contexts: sqrt({left}) vs sqrt({right})")]
    ContextMismatch { left: String, right: String },

    /// Matrix shapes incompatible with the requested operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A construction that must verify internally failed to; this is a bug
    /// or a wrong hypothesis, never silently ignored.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// Operation preconditions not met.
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
