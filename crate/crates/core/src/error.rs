use thiserror::Error;

use crate::weight::WeightError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Construction and query errors shared by every layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty label")]
    EmptyLabel,
    #[error("duplicate node {0:?}")]
    DuplicateNode(String),
    #[error("duplicate hyperedge {0:?}")]
    DuplicateEdge(String),
    #[error("hyperedge {edge:?} references unknown node {vertex:?}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("hyperedge {0:?} has an empty head or tail")]
    EmptyHeadOrTail(String),
    #[error("hyperedge {edge:?} has node {vertex:?} in both head and tail")]
    HeadTailOverlap { edge: String, vertex: String },
    #[error("graph edge {src:?} -> {dst:?} has unknown endpoint {missing:?}")]
    UnknownEndpoint { src: String, dst: String, missing: String },
    #[error("invalid weight on {context}: {source}")]
    InvalidWeight {
        context: String,
        #[source]
        source: WeightError,
    },
    #[error("unknown id {0:?}")]
    UnknownId(String),
    #[error("source and target are the same node {0:?}")]
    DegenerateQuery(String),
    #[error("malformed hyperpath: {0}")]
    MalformedHyperpath(String),
    #[error("sequence is not a hyperpath")]
    NotAHyperpath,
    #[error("connector {from:?} -> {to:?} references a missing endpoint")]
    DanglingConnector { from: String, to: String },
    #[error("{0:?} already has a connector")]
    DuplicateSourceConnector(String),
    #[error("invalid route: {0}")]
    InvalidRoute(String),
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("trace does not follow the route: {0}")]
    TraceMismatch(String),
}

impl Error {
    /// True for [`Error::InvalidWeight`] caused by a negative value.
    pub fn is_negative_weight(&self) -> bool {
        matches!(
            self,
            Error::InvalidWeight {
                source: WeightError::Negative(_),
                ..
            }
        )
    }
}
