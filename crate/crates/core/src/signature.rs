//! Degree-based probability signatures of ego networks.
//!
//! The signature of a node collects the whole-graph degrees of every member
//! of its local network (the node plus its neighbors), sorts them in
//! descending order and normalizes by their sum. Components are kept as
//! exact integers over an integer total; they are materialized as floating
//! point only when a divergence or a rendering needs them. The padded
//! component count (`width`) is the graph's maximum degree plus one, so all
//! signatures of one graph print with the same number of columns.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::graph::{Graph, NodeIndex};
use crate::{Error, Result};

/// The degree-probability signature of one node.
///
/// Stored exactly: `degrees` are the descending whole-graph degrees of the
/// ego members and `total` is their sum, so the k-th probability component
/// is `degrees[k] / total` for `k < degrees.len()` and exactly zero for the
/// remaining `width - degrees.len()` padded components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSignature {
    node: NodeIndex,
    degrees: Vec<u32>,
    total: u64,
    width: usize,
}

impl DegreeSignature {
    /// Builds a signature from raw parts, validating the invariants:
    /// degrees non-empty, descending, all positive, and at most `width`.
    pub fn from_degrees(node: NodeIndex, degrees: Vec<u32>, width: usize) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSignature("no degree components".into()));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::InvalidSignature("zero degree component".into()));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSignature(
                "degree components must be non-increasing".into(),
            ));
        }
        if degrees.len() > width {
            return Err(Error::InvalidSignature(format!(
                "{} components exceed width {width}",
                degrees.len()
            )));
        }
        let total = degrees.iter().map(|&d| u64::from(d)).sum();
        Ok(Self {
            node,
            degrees,
            total,
            width,
        })
    }

    pub fn node(&self) -> NodeIndex {
        self.node
    }

    /// Descending whole-graph degrees of the ego members.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Sum of the degree components (always positive).
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Padded component count: maximum graph degree plus one.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of positive components, `degree(node) + 1`.
    pub fn support_len(&self) -> usize {
        self.degrees.len()
    }

    /// The k-th probability component; exactly zero beyond the support.
    pub fn probability(&self, k: usize) -> f64 {
        match self.degrees.get(k) {
            Some(&d) => d as f64 / self.total as f64,
            None => 0.0,
        }
    }

    /// All `width` probability components as floating point.
    pub fn probabilities(&self) -> Vec<f64> {
        (0..self.width).map(|k| self.probability(k)).collect()
    }

    /// Exact equality as probability vectors: same support length and the
    /// same component fractions after cross-multiplication, so `(2,2)/4`
    /// and `(3,3)/6` compare equal.
    pub fn same_distribution(&self, other: &DegreeSignature) -> bool {
        self.degrees.len() == other.degrees.len()
            && self
                .degrees
                .iter()
                .zip(&other.degrees)
                .all(|(&a, &b)| u128::from(a) * u128::from(other.total) == u128::from(b) * u128::from(self.total))
    }

    /// Renders all `width` components at the given number of decimals,
    /// space-separated, zeros included.
    pub fn render(&self, precision: usize) -> String {
        let mut out = String::new();
        for k in 0..self.width {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.precision$}", self.probability(k));
        }
        out
    }
}

/// Computes the signature of one node.
///
/// The member degrees are whole-graph degrees, not degrees inside the
/// induced ego subgraph. Errors for isolated nodes, whose degree sum would
/// be zero.
pub fn signature(g: &Graph, node: NodeIndex) -> Result<DegreeSignature> {
    let local = g.local_network(node)?;
    if local.len() < 2 {
        return Err(Error::UndefinedSignature(g.label(node)?.to_owned()));
    }
    let mut degrees: Vec<u32> = local
        .members()
        .iter()
        .map(|&m| g.degree(m).expect("member index is valid") as u32)
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let total = degrees.iter().map(|&d| u64::from(d)).sum();
    Ok(DegreeSignature {
        node,
        degrees,
        total,
        width: g.max_degree() + 1,
    })
}

/// Signatures for every node, in index order. All share the same width.
/// Errors on the first isolated node, naming it.
pub fn all_signatures(g: &Graph) -> Result<Vec<DegreeSignature>> {
    (0..g.node_count()).map(|i| signature(g, i)).collect()
}

/// A labelled collection of signatures sharing one width: the input of the
/// similarity pipeline, whether it came from a graph or straight from a
/// bundled signature table.
#[derive(Debug, Clone)]
pub struct SignatureSet {
    labels: Vec<String>,
    index_by_label: HashMap<String, usize>,
    signatures: Vec<DegreeSignature>,
}

impl SignatureSet {
    pub fn new(labels: Vec<String>, signatures: Vec<DegreeSignature>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidSignature("empty signature set".into()));
        }
        if labels.len() != signatures.len() {
            return Err(Error::InvalidSignature(format!(
                "{} labels but {} signatures",
                labels.len(),
                signatures.len()
            )));
        }
        let width = signatures[0].width();
        for (i, sig) in signatures.iter().enumerate() {
            if sig.width() != width {
                return Err(Error::InvalidSignature(format!(
                    "signature {i} has width {} but the set has width {width}",
                    sig.width()
                )));
            }
            if sig.node() != i {
                return Err(Error::InvalidSignature(format!(
                    "signature {i} carries node index {}",
                    sig.node()
                )));
            }
        }
        let index_by_label = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(Self {
            labels,
            index_by_label,
            signatures,
        })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Self::new(g.labels().to_vec(), all_signatures(g)?)
    }

    pub fn len(&self) -> usize {
        self.signatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signatures.is_empty()
    }

    pub fn width(&self) -> usize {
        self.signatures[0].width()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Result<&str> {
        self.labels
            .get(i)
            .map(String::as_str)
            .ok_or(Error::UnknownIndex(i))
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.index_by_label.get(label).copied()
    }

    pub fn get(&self, i: usize) -> Result<&DegreeSignature> {
        self.signatures.get(i).ok_or(Error::UnknownIndex(i))
    }

    pub fn signatures(&self) -> &[DegreeSignature] {
        &self.signatures
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ParseOptions;
    use proptest::prelude::*;

    fn parse(text: &str) -> Graph {
        Graph::from_edge_list(text, &ParseOptions::default()).unwrap().0
    }

    /// Nine-node fragment whose hub (node "4") has six neighbors with
    /// whole-graph degrees {2,2,3,4,4,2}; the hub itself has degree 6,
    /// so the member degree sum is 23.
    fn hub_fragment() -> Graph {
        parse("4 1\n4 2\n4 3\n4 5\n4 6\n4 7\n1 2\n3 5\n3 6\n5 6\n5 8\n6 9\n7 8\n")
    }

    #[test]
    fn hub_signature_matches_hand_computed_fractions() {
        let g = hub_fragment();
        let hub = g.node_index("4").unwrap();
        assert_eq!(g.degree(hub).unwrap(), 6);
        assert_eq!(g.max_degree(), 6);

        let sig = signature(&g, hub).unwrap();
        assert_eq!(sig.degrees(), &[6, 4, 4, 3, 2, 2, 2]);
        assert_eq!(sig.total(), 23);
        assert_eq!(sig.width(), 7);
        let expected: Vec<f64> = [6.0, 4.0, 4.0, 3.0, 2.0, 2.0, 2.0]
            .iter()
            .map(|d| d / 23.0)
            .collect();
        assert_eq!(sig.probabilities(), expected);

        let local = g.local_network(hub).unwrap();
        let member_labels: Vec<&str> = local
            .members()
            .iter()
            .map(|&m| g.label(m).unwrap())
            .collect();
        let mut sorted = member_labels.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec!["1", "2", "3", "4", "5", "6", "7"]);
    }

    #[test]
    fn triangle_signatures_are_identical_thirds() {
        let g = parse("1 2\n2 3\n1 3\n");
        let sigs = all_signatures(&g).unwrap();
        assert_eq!(sigs.len(), 3);
        for sig in &sigs {
            assert_eq!(sig.degrees(), &[2, 2, 2]);
            assert_eq!(sig.total(), 6);
            assert_eq!(sig.width(), 3);
            assert_eq!(sig.probabilities(), vec![2.0 / 6.0, 2.0 / 6.0, 2.0 / 6.0]);
        }
        assert!(sigs[0].same_distribution(&sigs[1]));
    }

    #[test]
    fn star_center_and_leaf_signatures() {
        let g = parse("c a\nc b\nc d\n");
        let center = signature(&g, g.node_index("c").unwrap()).unwrap();
        assert_eq!(center.degrees(), &[3, 1, 1, 1]);
        assert_eq!(center.width(), 4);
        assert_eq!(
            center.probabilities(),
            vec![3.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0]
        );

        let leaf = signature(&g, g.node_index("a").unwrap()).unwrap();
        assert_eq!(leaf.degrees(), &[3, 1]);
        assert_eq!(leaf.probabilities(), vec![3.0 / 4.0, 1.0 / 4.0, 0.0, 0.0]);
    }

    #[test]
    fn four_cycle_signatures_are_identical() {
        let g = parse("1 2\n2 3\n3 4\n4 1\n");
        let sigs = all_signatures(&g).unwrap();
        for sig in &sigs {
            assert_eq!(sig.degrees(), &[2, 2, 2]);
            assert_eq!(sig.width(), 3);
        }
    }

    #[test]
    fn isolated_node_signature_is_an_error() {
        let g = parse("v v\na b\n");
        let v = g.node_index("v").unwrap();
        match signature(&g, v) {
            Err(Error::UndefinedSignature(label)) => assert_eq!(label, "v"),
            other => panic!("expected undefined-signature error, got {other:?}"),
        }
        match all_signatures(&g) {
            Err(Error::UndefinedSignature(label)) => assert_eq!(label, "v"),
            other => panic!("expected undefined-signature error, got {other:?}"),
        }
    }

    #[test]
    fn from_degrees_validates_invariants() {
        assert!(DegreeSignature::from_degrees(0, vec![3, 1], 7).is_ok());
        assert!(DegreeSignature::from_degrees(0, vec![], 7).is_err());
        assert!(DegreeSignature::from_degrees(0, vec![1, 3], 7).is_err());
        assert!(DegreeSignature::from_degrees(0, vec![3, 0], 7).is_err());
        assert!(DegreeSignature::from_degrees(0, vec![1, 1, 1], 2).is_err());
    }

    #[test]
    fn same_distribution_compares_fractions_not_representations() {
        let a = DegreeSignature::from_degrees(0, vec![2, 2], 3).unwrap();
        let b = DegreeSignature::from_degrees(1, vec![3, 3], 4).unwrap();
        let c = DegreeSignature::from_degrees(2, vec![3, 1], 4).unwrap();
        assert!(a.same_distribution(&b));
        assert!(!a.same_distribution(&c));
        assert!(!b.same_distribution(&c));
    }

    #[test]
    fn render_pads_with_zeros_to_width() {
        let sig = DegreeSignature::from_degrees(0, vec![3, 1], 7).unwrap();
        assert_eq!(sig.render(2), "0.75 0.25 0.00 0.00 0.00 0.00 0.00");
        assert_eq!(sig.render(0), "1 0 0 0 0 0 0");
        assert_eq!(sig.render(4), "0.7500 0.2500 0.0000 0.0000 0.0000 0.0000 0.0000");
    }

    fn edge_pairs_strategy() -> impl Strategy<Value = Vec<(String, String)>> {
        (3usize..=12).prop_flat_map(|n| {
            let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
            let extras = proptest::collection::vec(prop::bool::weighted(0.25), n * (n - 1) / 2);
            (Just(n), parents, extras).prop_map(|(n, parents, extras)| {
                let mut pairs = Vec::new();
                for (i, pick) in parents.iter().enumerate() {
                    let child = i + 1;
                    pairs.push((pick.index(child).to_string(), child.to_string()));
                }
                let mut bit = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if extras[bit] {
                            pairs.push((i.to_string(), j.to_string()));
                        }
                        bit += 1;
                    }
                }
                pairs
            })
        })
    }

    /// Brute-force signature straight from the raw pair list: dedup the
    /// edges, count incident edges per member, sort, normalize. Kept
    /// independent of `Graph` on purpose.
    fn brute_force_signature(pairs: &[(String, String)], target: &str) -> Vec<f64> {
        use std::collections::BTreeSet;
        let mut edges: BTreeSet<(&str, &str)> = BTreeSet::new();
        for (a, b) in pairs {
            if a != b {
                let (x, y) = if a <= b { (a, b) } else { (b, a) };
                edges.insert((x.as_str(), y.as_str()));
            }
        }
        let degree_of =
            |v: &str| edges.iter().filter(|(a, b)| *a == v || *b == v).count();
        let mut members: Vec<&str> = vec![target];
        for (a, b) in &edges {
            if *a == target {
                members.push(b);
            }
            if *b == target {
                members.push(a);
            }
        }
        let mut degrees: Vec<usize> = members.iter().map(|m| degree_of(m)).collect();
        degrees.sort_unstable_by(|x, y| y.cmp(x));
        let total: usize = degrees.iter().sum();
        degrees.iter().map(|&d| d as f64 / total as f64).collect()
    }

    proptest! {
        #[test]
        fn matches_brute_force_oracle(pairs in edge_pairs_strategy()) {
            let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let (g, _) = Graph::from_edges(refs).unwrap();
            for i in 0..g.node_count() {
                let sig = signature(&g, i).unwrap();
                let expected = brute_force_signature(&pairs, g.label(i).unwrap());
                prop_assert_eq!(sig.support_len(), expected.len());
                for (k, want) in expected.iter().enumerate() {
                    prop_assert_eq!(sig.probability(k), *want);
                }
            }
        }

        #[test]
        fn probabilities_sum_to_one_within_ulps(pairs in edge_pairs_strategy()) {
            let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let (g, _) = Graph::from_edges(refs).unwrap();
            for sig in all_signatures(&g).unwrap() {
                let sum: f64 = sig.probabilities().iter().sum();
                let budget = f64::EPSILON * sig.width() as f64;
                prop_assert!((sum - 1.0).abs() <= budget, "sum {} width {}", sum, sig.width());
            }
        }

        #[test]
        fn relabeling_permutes_but_preserves_degree_multisets(
            pairs in edge_pairs_strategy(),
            offset in 100usize..200,
        ) {
            let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let (g, _) = Graph::from_edges(refs).unwrap();
            let renamed: Vec<(String, String)> = pairs
                .iter()
                .map(|(a, b)| {
                    let ra = format!("n{}", a.parse::<usize>().unwrap() + offset);
                    let rb = format!("n{}", b.parse::<usize>().unwrap() + offset);
                    (ra, rb)
                })
                .collect();
            let renamed_refs: Vec<(&str, &str)> =
                renamed.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let (h, _) = Graph::from_edges(renamed_refs).unwrap();
            for i in 0..g.node_count() {
                let original = g.label(i).unwrap();
                let renamed_label = format!("n{}", original.parse::<usize>().unwrap() + offset);
                let j = h.node_index(&renamed_label).unwrap();
                let a = signature(&g, i).unwrap();
                let b = signature(&h, j).unwrap();
                prop_assert_eq!(a.degrees(), b.degrees());
                prop_assert_eq!(a.total(), b.total());
            }
        }

        /// Regular graphs (cycles here) give one shared signature with
        /// r + 1 equal components of value 1 / (r + 1).
        #[test]
        fn cycle_signatures_are_uniform(n in 3usize..=24) {
            let pairs: Vec<(String, String)> = (0..n)
                .map(|i| (i.to_string(), ((i + 1) % n).to_string()))
                .collect();
            let refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let (g, _) = Graph::from_edges(refs).unwrap();
            let sigs = all_signatures(&g).unwrap();
            for sig in &sigs {
                prop_assert_eq!(sig.degrees(), &[2, 2, 2][..]);
                prop_assert_eq!(sig.width(), 3);
                for k in 0..3 {
                    prop_assert_eq!(sig.probability(k), 1.0 / 3.0);
                }
                prop_assert!(sig.same_distribution(&sigs[0]));
            }
        }
    }
}
