//! Undirected simple graphs with string labels mapped to dense indices.
//!
//! Graphs are immutable once built: every constructor validates its input,
//! collapses duplicate edges, drops self-loops (tallied in
//! [`ParseWarnings`]) and symmetrizes the adjacency. All queries are
//! read-only, so a `Graph` can be shared freely across worker threads.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::{Error, Result};

/// Dense node index, assigned in first-appearance order of the labels.
pub type NodeIndex = usize;

/// Input layout accepted by [`Graph::from_edge_list`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputFormat {
    /// One edge per line: two labels separated by whitespace or commas.
    /// Lines starting with `#` or `%` are comments; blank lines are skipped.
    #[default]
    EdgeList,
    /// Comma-separated values with a leading `source,target` header.
    Csv,
}

/// Parse options for [`Graph::from_edge_list`].
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub format: InputFormat,
}

/// Tally of input lines that were dropped rather than rejected.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseWarnings {
    /// Self-loop lines dropped while parsing. Their endpoint label still
    /// registers as a node.
    pub self_loops_dropped: usize,
}

/// An undirected simple graph.
///
/// Invariants, enforced at construction:
/// - the adjacency is symmetric and free of self-loops and parallel edges;
/// - every neighbor list is sorted ascending;
/// - labels are unique and map bijectively onto `0..node_count()`;
/// - the graph has at least one node.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index_by_label: HashMap<String, NodeIndex>,
    adjacency: Vec<Vec<NodeIndex>>,
    edge_count: usize,
}

/// The local network of a node: the node itself plus its direct neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalNetwork {
    center: NodeIndex,
    members: Vec<NodeIndex>,
}

impl LocalNetwork {
    pub fn center(&self) -> NodeIndex {
        self.center
    }

    /// Member indices sorted ascending; always contains the center.
    pub fn members(&self) -> &[NodeIndex] {
        &self.members
    }

    /// Number of members; always `degree(center) + 1`.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    index_by_label: HashMap<String, NodeIndex>,
    edges: Vec<(NodeIndex, NodeIndex)>,
}

impl Builder {
    fn intern(&mut self, label: &str) -> NodeIndex {
        if let Some(&i) = self.index_by_label.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index_by_label.insert(label.to_owned(), i);
        i
    }

    fn add_edge(&mut self, a: &str, b: &str, warnings: &mut ParseWarnings) {
        let i = self.intern(a);
        let j = self.intern(b);
        if i == j {
            warnings.self_loops_dropped += 1;
            return;
        }
        self.edges.push((i, j));
    }

    fn finish(self) -> Result<Graph> {
        if self.labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); self.labels.len()];
        for (i, j) in self.edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            labels: self.labels,
            index_by_label: self.index_by_label,
            adjacency,
            edge_count,
        })
    }
}

impl Graph {
    /// Parses an edge list (or the CSV variant) into a graph.
    ///
    /// Duplicate edges collapse to one, directed duplicates (`a b` and
    /// `b a`) become the same undirected edge, and self-loops are dropped
    /// with a warning tally. Node indices follow first appearance; labels
    /// are kept verbatim.
    pub fn from_edge_list(text: &str, options: &ParseOptions) -> Result<(Graph, ParseWarnings)> {
        let mut builder = Builder::default();
        let mut warnings = ParseWarnings::default();
        let mut header_seen = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
                continue;
            }
            if options.format == InputFormat::Csv && !header_seen {
                header_seen = true;
                if !is_csv_header(line) {
                    return Err(Error::MissingCsvHeader { line: line_no });
                }
                continue;
            }
            let (a, b) = split_edge_line(line, options.format, line_no)?;
            builder.add_edge(a, b, &mut warnings);
        }
        Ok((builder.finish()?, warnings))
    }

    /// Builds a graph from label pairs, with the same collapsing rules as
    /// [`Graph::from_edge_list`].
    pub fn from_edges<'a, I>(pairs: I) -> Result<(Graph, ParseWarnings)>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut builder = Builder::default();
        let mut warnings = ParseWarnings::default();
        for (a, b) in pairs {
            builder.add_edge(a, b, &mut warnings);
        }
        Ok((builder.finish()?, warnings))
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Labels in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, node: NodeIndex) -> Result<&str> {
        self.labels
            .get(node)
            .map(String::as_str)
            .ok_or(Error::UnknownIndex(node))
    }

    pub fn node_index(&self, label: &str) -> Option<NodeIndex> {
        self.index_by_label.get(label).copied()
    }

    /// Degree of `node` in the whole graph.
    pub fn degree(&self, node: NodeIndex) -> Result<usize> {
        self.adjacency
            .get(node)
            .map(Vec::len)
            .ok_or(Error::UnknownIndex(node))
    }

    /// Neighbors of `node`, sorted ascending.
    pub fn neighbors(&self, node: NodeIndex) -> Result<&[NodeIndex]> {
        self.adjacency
            .get(node)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownIndex(node))
    }

    /// The maximum degree over all nodes. Graphs are never empty.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The local network of `node`: itself plus its neighbors, sorted.
    pub fn local_network(&self, node: NodeIndex) -> Result<LocalNetwork> {
        let neighbors = self.neighbors(node)?;
        let mut members = neighbors.to_vec();
        let pos = members.binary_search(&node).unwrap_err();
        members.insert(pos, node);
        Ok(LocalNetwork {
            center: node,
            members,
        })
    }

    /// Edges as index pairs with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeIndex, NodeIndex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Serializes the graph back to edge-list text, one edge per line.
    /// Re-parsing the output yields a graph with identical labels and
    /// adjacency (provided no label contains whitespace or commas).
    pub fn to_edge_list_text(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[i], self.labels[j]);
        }
        out
    }
}

fn is_csv_header(line: &str) -> bool {
    let mut fields = line.split(',').map(str::trim);
    matches!(
        (fields.next(), fields.next(), fields.next()),
        (Some(a), Some(b), None)
            if a.eq_ignore_ascii_case("source") && b.eq_ignore_ascii_case("target")
    )
}

fn split_edge_line(line: &str, format: InputFormat, line_no: usize) -> Result<(&str, &str)> {
    let tokens: Vec<&str> = match format {
        InputFormat::EdgeList => line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect(),
        InputFormat::Csv => line.split(',').map(str::trim).collect(),
    };
    match tokens.as_slice() {
        [a, b] if !a.is_empty() && !b.is_empty() => Ok((a, b)),
        _ => Err(Error::MalformedLine {
            line: line_no,
            found: tokens.iter().filter(|t| !t.is_empty()).count(),
        }),
    }
}
