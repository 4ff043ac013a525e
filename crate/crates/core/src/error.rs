use thiserror::Error;

/// Errors produced by graph loading, signature construction and the
/// similarity pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An input line did not hold exactly two node labels.
    #[error("line {line}: expected two node labels, found {found}")]
    MalformedLine { line: usize, found: usize },

    /// CSV input did not start with the `source,target` header.
    #[error("line {line}: expected CSV header 'source,target'")]
    MissingCsvHeader { line: usize },

    /// The input contained no nodes at all.
    #[error("input contains no nodes")]
    EmptyGraph,

    /// A node index outside the graph was used.
    #[error("unknown node index {0}")]
    UnknownIndex(usize),

    /// A node label that does not occur in the input.
    #[error("unknown node '{0}'")]
    UnknownNode(String),

    /// Signatures are undefined for isolated nodes: the member degree sum
    /// would be zero.
    #[error("node '{0}' has degree 0, so its signature is undefined")]
    UndefinedSignature(String),

    /// A signature or signature set violated a structural invariant.
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    /// `top_k_similar` requires k >= 1.
    #[error("top-k size must be at least 1")]
    InvalidTopK,

    /// A dataset name that is not in the manifest.
    #[error("unknown dataset '{0}'")]
    UnknownDataset(String),

    /// A known dataset whose file is not shipped with the crate.
    #[error("dataset '{0}' is not bundled; supply a local edge-list file")]
    NotBundled(String),

    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
