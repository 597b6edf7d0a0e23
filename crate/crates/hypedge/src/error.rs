use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    ShapeMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("{op} produced a non-finite value (NaN or infinity)")]
    NonFinite { op: &'static str },

    #[error("backward requires a scalar loss, got a {rows}x{cols} tensor")]
    NonScalarLoss { rows: usize, cols: usize },

    #[error("hyperedge is empty")]
    EmptyHyperedge,

    #[error("node id {id} out of range for {nodes} nodes{context}")]
    NodeIdOutOfRange {
        id: usize,
        nodes: usize,
        context: String,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid split ratios: {0}")]
    InvalidSplit(String),

    #[error("split produced an empty {part} set; use a larger dataset or different ratios")]
    EmptySplitPart { part: &'static str },

    #[error("sampler gave up after {attempts} attempts: {reason}")]
    SamplerExhausted { attempts: usize, reason: String },

    #[error("invalid sampler input: {0}")]
    InvalidSample(String),

    #[error("ranking metrics need at least one positive and one negative sample")]
    DegenerateRanking,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("training diverged at epoch {epoch}: loss is non-finite; try a smaller learning rate")]
    Diverged { epoch: usize },

    #[error("checkpoint format error: {0}")]
    Checkpoint(String),

    #[error("candidate enumeration would exceed {cap} sets; use a smaller subgraph or order range")]
    EnumerationTooLarge { cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
