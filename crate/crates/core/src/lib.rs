//! Structural similarity of nodes in undirected networks.
//!
//! Every node is summarized by a degree signature: the whole-graph degrees
//! of its local network (the node plus its neighbors), sorted descending
//! and normalized by their sum. Two nodes are compared by the symmetrized
//! relative entropy of their signatures, truncated to common support, and
//! a node's total similarity to all others ranks it from "similar to
//! everyone" down to "marginal".
//!
//! ```
//! use egosim::{Graph, ParseOptions, similarity_matrix};
//!
//! let (graph, _) = Graph::from_edge_list("1 2\n2 3\n1 3\n", &ParseOptions::default())?;
//! let matrix = similarity_matrix(&graph)?;
//! // all three corners of a triangle look alike
//! assert_eq!(matrix.get(0, 1), 1.0);
//!
//! let ranking = matrix.similarity_sums();
//! assert_eq!(ranking.top().label, "1");
//! # Ok::<(), egosim::Error>(())
//! ```

mod error;

pub mod datasets;
pub mod export;
pub mod graph;
pub mod signature;
pub mod similarity;

pub use error::{Error, Result};
pub use graph::{Graph, InputFormat, LocalNetwork, NodeIndex, ParseOptions, ParseWarnings};
pub use signature::{all_signatures, signature, DegreeSignature, SignatureSet};
pub use similarity::{
    kl_divergence, similarity, similarity_matrix, NodeRanking, RankedNode, SimilarityMatrix,
};

// Compile the guide's code snippets as doctests so the book cannot drift
// from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/signatures.md")]
    pub mod signatures {}
    #[doc = include_str!("../../../book/src/similarity.md")]
    pub mod similarity {}
    #[doc = include_str!("../../../book/src/ranking.md")]
    pub mod ranking {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
