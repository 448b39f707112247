use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a spanning tree: {0}")]
    NotSpanningTree(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid successor map: {0}")]
    InvalidSuccessor(String),

    /// A t-uncovering requires edge connectivity strictly greater than t.
    #[error("t = {t} requires edge connectivity > t, but \u{3bb} = {lambda}")]
    UncoveringParameters { t: usize, lambda: usize },

    #[error("construction unsupported: {0}")]
    ConstructionUnsupported(String),

    #[error("resource ceiling exceeded: {0}")]
    ResourceCeiling(String),

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
