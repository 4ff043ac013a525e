//! Relative entropy on degree signatures, pairwise similarity, the full
//! similarity matrix and similarity-sum rankings.
//!
//! The divergence is truncated to the common support of the two signatures:
//! terms are summed only where both components are positive. Since both
//! signatures are descending, the common support is the first
//! `min(support(p), support(q))` components. The truncated divergence can be
//! negative; the symmetrized form never is, which bounds the similarity at 1.

use rayon::prelude::*;

use crate::graph::{Graph, NodeIndex};
use crate::signature::{DegreeSignature, SignatureSet};
use crate::{Error, Result};

/// Relative entropy of `p` against `q`, truncated to common support,
/// natural logarithm. Accumulated in ascending component order so the
/// result is reproducible bit for bit.
pub fn kl_divergence(p: &DegreeSignature, q: &DegreeSignature) -> f64 {
    let common = p.support_len().min(q.support_len());
    let mut acc = 0.0;
    for k in 0..common {
        let pk = p.probability(k);
        let qk = q.probability(k);
        acc += pk * (pk / qk).ln();
    }
    acc
}

/// Similarity of two signatures: one minus the symmetrized truncated
/// divergence. At most 1, with equality exactly when the signatures are
/// equal as probability vectors; can go negative for very dissimilar
/// signatures and is not clamped.
pub fn similarity(p: &DegreeSignature, q: &DegreeSignature) -> f64 {
    1.0 - (kl_divergence(p, q) + kl_divergence(q, p))
}

/// Symmetric matrix of pairwise node similarities, with the label mapping
/// of the signature set it was computed from.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    labels: Vec<String>,
    n: usize,
    values: Vec<f64>,
}

/// One node with its similarity score, used by rankings and top-k lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedNode {
    pub label: String,
    pub score: f64,
}

/// Nodes ordered by total similarity to all other nodes, highest first.
/// Ties keep first-appearance index order, so the ranking is deterministic.
#[derive(Debug, Clone)]
pub struct NodeRanking {
    entries: Vec<RankedNode>,
}

impl SimilarityMatrix {
    /// Computes the matrix on the current rayon thread pool. Each unordered
    /// pair is evaluated once and mirrored, so the matrix is symmetric bit
    /// for bit and identical regardless of worker count; the diagonal is
    /// exactly 1.
    pub fn compute(set: &SignatureSet) -> Self {
        let n = set.len();
        let sigs = set.signatures();
        let mut values = vec![0.0f64; n * n];
        values
            .par_chunks_mut(n)
            .enumerate()
            .for_each(|(i, row)| {
                row[i] = 1.0;
                for j in (i + 1)..n {
                    row[j] = similarity(&sigs[i], &sigs[j]);
                }
            });
        for i in 1..n {
            for j in 0..i {
                values[i * n + j] = values[j * n + i];
            }
        }
        Self {
            labels: set.labels().to_vec(),
            n,
            values,
        }
    }

    /// Like [`SimilarityMatrix::compute`], on a dedicated pool of
    /// `threads` workers; 0 means the default pool.
    pub fn compute_with_threads(set: &SignatureSet, threads: usize) -> Result<Self> {
        if threads == 0 {
            return Ok(Self::compute(set));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        Ok(pool.install(|| Self::compute(set)))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_index(&self, label: &str) -> Option<NodeIndex> {
        self.labels.iter().position(|l| l == label)
    }

    /// Value at row `i`, column `j`. Panics when out of bounds.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "matrix index out of bounds");
        self.values[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    /// Ranks nodes by their similarity sum to all other nodes (diagonal
    /// excluded; including it would shift every score by exactly one and
    /// never change the order).
    pub fn similarity_sums(&self) -> NodeRanking {
        let mut entries: Vec<RankedNode> = (0..self.n)
            .map(|i| {
                let mut score = 0.0;
                for j in 0..self.n {
                    if j != i {
                        score += self.get(i, j);
                    }
                }
                RankedNode {
                    label: self.labels[i].clone(),
                    score,
                }
            })
            .collect();
        // stable sort: equal scores keep ascending index order
        entries.sort_by(|a, b| b.score.total_cmp(&a.score));
        NodeRanking { entries }
    }

    /// The `k` nodes most similar to `node`, descending, ties by ascending
    /// index; all other nodes when `k` exceeds their count.
    pub fn top_k_similar(&self, node: NodeIndex, k: usize) -> Result<Vec<RankedNode>> {
        if k == 0 {
            return Err(Error::InvalidTopK);
        }
        if node >= self.n {
            return Err(Error::UnknownIndex(node));
        }
        let mut scored: Vec<RankedNode> = (0..self.n)
            .filter(|&j| j != node)
            .map(|j| RankedNode {
                label: self.labels[j].clone(),
                score: self.get(node, j),
            })
            .collect();
        scored.sort_by(|a, b| b.score.total_cmp(&a.score));
        scored.truncate(k);
        Ok(scored)
    }
}

/// Full pipeline from a graph: signatures, then the pairwise matrix.
pub fn similarity_matrix(g: &Graph) -> Result<SimilarityMatrix> {
    Ok(SimilarityMatrix::compute(&SignatureSet::from_graph(g)?))
}

impl NodeRanking {
    pub fn entries(&self) -> &[RankedNode] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The node most similar to all others.
    pub fn top(&self) -> &RankedNode {
        &self.entries[0]
    }

    /// The most marginal node: lowest similarity sum.
    pub fn bottom(&self) -> &RankedNode {
        &self.entries[self.entries.len() - 1]
    }
}
