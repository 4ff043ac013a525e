//! Bundled reference corpora and their expected results.
//!
//! Two datasets ship inside the crate: the Zachary karate club edge list
//! and a 21-node reference network that is distributed as exact-fraction
//! degree signatures because no edge list exists for it. Three larger
//! networks are described by their manifest entries only; their public
//! mirrors differ in version and node numbering, so the expected node ids
//! are recorded but the files are not fetched.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, ParseOptions};
use crate::signature::{DegreeSignature, SignatureSet};
use crate::{Error, Result};

const MANIFEST: &str = include_str!("../data/manifest.json");
const KARATE_EDGES: &str = include_str!("../data/karate.edges");
const A21_SIGNATURES: &str = include_str!("../data/a21_signatures.json");

/// Base of the node labels in a dataset file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelIndexing {
    OneBased,
    ZeroBased,
}

/// Provenance and expected results for one dataset.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetDescriptor {
    pub name: String,
    pub node_count: usize,
    /// Absent for signature-only datasets, which have no edge list.
    pub edge_count: Option<usize>,
    /// Label of the node with the highest similarity sum, when known.
    pub expected_top: Option<String>,
    /// Label of the most marginal node, when known.
    pub expected_bottom: Option<String>,
    pub source_note: String,
    pub indexing: LabelIndexing,
    /// Whether the data file ships inside the crate.
    pub bundled: bool,
}

/// What a dataset loads into: a graph, or a ready signature set for
/// datasets published as signatures.
#[derive(Debug, Clone)]
pub enum DatasetContent {
    Graph(Graph),
    Signatures(SignatureSet),
}

impl DatasetContent {
    /// Reduces either variant to the pipeline input.
    pub fn into_signature_set(self) -> Result<SignatureSet> {
        match self {
            DatasetContent::Graph(g) => SignatureSet::from_graph(&g),
            DatasetContent::Signatures(set) => Ok(set),
        }
    }
}

/// Descriptors for every known dataset, bundled or not.
pub fn list_datasets() -> Vec<DatasetDescriptor> {
    serde_json::from_str(MANIFEST).expect("bundled manifest is valid JSON")
}

/// Descriptor lookup by name.
pub fn descriptor(name: &str) -> Result<DatasetDescriptor> {
    list_datasets()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownDataset(name.to_owned()))
}

/// Loads a bundled dataset by name. Known but unbundled names report that
/// a local file is required; unknown names are an error.
pub fn load_dataset(name: &str) -> Result<DatasetContent> {
    match name {
        "karate" => {
            let (graph, _) = Graph::from_edge_list(KARATE_EDGES, &ParseOptions::default())?;
            Ok(DatasetContent::Graph(graph))
        }
        "a21-signatures" => Ok(DatasetContent::Signatures(a21_signature_set()?)),
        other => {
            descriptor(other)?;
            Err(Error::NotBundled(other.to_owned()))
        }
    }
}

/// Loads a known dataset from a user-supplied edge-list file, for the
/// datasets that are descriptor-only.
pub fn load_dataset_from(name: &str, path: &Path) -> Result<DatasetContent> {
    descriptor(name)?;
    let text = fs::read_to_string(path)?;
    let (graph, _) = Graph::from_edge_list(&text, &ParseOptions::default())?;
    Ok(DatasetContent::Graph(graph))
}

#[derive(Deserialize)]
struct SignatureFile {
    width: usize,
    signatures: Vec<SignatureRow>,
}

#[derive(Deserialize)]
struct SignatureRow {
    label: String,
    degrees: Vec<u32>,
}

fn a21_signature_set() -> Result<SignatureSet> {
    let file: SignatureFile =
        serde_json::from_str(A21_SIGNATURES).expect("bundled signature table is valid JSON");
    let mut labels = Vec::with_capacity(file.signatures.len());
    let mut signatures = Vec::with_capacity(file.signatures.len());
    for (i, row) in file.signatures.into_iter().enumerate() {
        labels.push(row.label);
        signatures.push(DegreeSignature::from_degrees(i, row.degrees, file.width)?);
    }
    SignatureSet::new(labels, signatures)
}
