use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use egosim::datasets::{self, DatasetDescriptor};
use egosim::export;
use egosim::{
    signature, Graph, InputFormat, ParseOptions, ParseWarnings, SignatureSet, SimilarityMatrix,
};

#[derive(Debug, Parser)]
#[command(
    name = "egosim",
    version,
    about = "Structural node similarity from ego-network degree signatures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Dataset name or path to an edge-list file; names resolve first.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Input layout for files.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Output layout for matrix, rank and similar.
    #[arg(long = "output-format", global = true, value_enum, default_value_t = OutputFormat::Csv)]
    output_format: OutputFormat,

    /// Decimal places for rendered values (rendering only).
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(0..=17))]
    precision: u8,

    /// Worker threads for the similarity matrix; 0 = one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print degree-signature rows for one node or all nodes.
    Signature {
        /// Node label, or "all" for every node.
        #[arg(long, default_value = "all")]
        node: String,
    },
    /// Compute the pairwise similarity matrix.
    Matrix,
    /// Rank nodes by their similarity sum to all others.
    Rank,
    /// List the nodes most similar to one node.
    Similar {
        /// Node label.
        #[arg(long)]
        node: String,
        /// How many similar nodes to list.
        #[arg(long = "top", default_value_t = 5)]
        top: usize,
    },
    /// List the known datasets and their expected results.
    Datasets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Edgelist,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

/// Where the pipeline input came from: a parsed graph, or a dataset that
/// ships as signatures directly.
enum Source {
    Graph(Graph),
    Signatures(SignatureSet),
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("egosim: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> anyhow::Result<()> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Signature { node } => cmd_signature(&cli, node),
        Command::Matrix => cmd_matrix(&cli),
        Command::Rank => cmd_rank(&cli),
        Command::Similar { node, top } => cmd_similar(&cli, node, *top),
        Command::Datasets => cmd_datasets(&cli),
    }
}

fn load_input(cli: &Cli) -> anyhow::Result<Source> {
    let input = cli
        .input
        .as_deref()
        .ok_or_else(|| anyhow!("--input is required (dataset name or edge-list path)"))?;

    let is_dataset = datasets::list_datasets().iter().any(|d| d.name == input);
    if is_dataset {
        let content = datasets::load_dataset(input)?;
        return Ok(match content {
            datasets::DatasetContent::Graph(g) => Source::Graph(g),
            datasets::DatasetContent::Signatures(set) => Source::Signatures(set),
        });
    }

    let text = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    let options = ParseOptions {
        format: match cli.format {
            FormatArg::Edgelist => InputFormat::EdgeList,
            FormatArg::Csv => InputFormat::Csv,
        },
    };
    let (graph, warnings) =
        Graph::from_edge_list(&text, &options).with_context(|| format!("parsing {input}"))?;
    report_warnings(&warnings);
    Ok(Source::Graph(graph))
}

fn report_warnings(warnings: &ParseWarnings) {
    if warnings.self_loops_dropped > 0 {
        eprintln!(
            "egosim: warning: dropped {} self-loop line(s)",
            warnings.self_loops_dropped
        );
    }
}

fn signature_set(source: Source) -> anyhow::Result<SignatureSet> {
    Ok(match source {
        Source::Graph(g) => SignatureSet::from_graph(&g)?,
        Source::Signatures(set) => set,
    })
}

/// Opens the chosen output sink.
fn open_output(cli: &Cli) -> anyhow::Result<Box<dyn Write>> {
    Ok(match &cli.output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn cmd_signature(cli: &Cli, node: &str) -> anyhow::Result<()> {
    let source = load_input(cli)?;
    let precision = cli.precision as usize;
    let mut out = open_output(cli)?;

    match (&source, node) {
        (Source::Graph(g), "all") => {
            // report undefined signatures per node without aborting the run
            for i in 0..g.node_count() {
                let label = g.label(i)?;
                match signature(g, i) {
                    Ok(sig) => writeln!(out, "{label} {}", sig.render(precision))?,
                    Err(err) => eprintln!("egosim: warning: {err}"),
                }
            }
        }
        (Source::Graph(g), label) => {
            let i = g
                .node_index(label)
                .ok_or_else(|| egosim::Error::UnknownNode(label.to_owned()))?;
            writeln!(out, "{}", signature(g, i)?.render(precision))?;
        }
        (Source::Signatures(set), "all") => {
            for (i, label) in set.labels().iter().enumerate() {
                writeln!(out, "{label} {}", set.get(i)?.render(precision))?;
            }
        }
        (Source::Signatures(set), label) => {
            let i = set
                .node_index(label)
                .ok_or_else(|| egosim::Error::UnknownNode(label.to_owned()))?;
            writeln!(out, "{}", set.get(i)?.render(precision))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_matrix(cli: &Cli) -> anyhow::Result<()> {
    let set = signature_set(load_input(cli)?)?;
    let matrix = SimilarityMatrix::compute_with_threads(&set, cli.threads)?;
    let mut out = open_output(cli)?;
    match cli.output_format {
        OutputFormat::Csv => export::write_matrix_csv(&mut out, &matrix, cli.precision as usize)?,
        OutputFormat::Json => export::write_matrix_json(&mut out, &matrix)?,
    }
    out.flush()?;
    Ok(())
}

fn cmd_rank(cli: &Cli) -> anyhow::Result<()> {
    let set = signature_set(load_input(cli)?)?;
    let matrix = SimilarityMatrix::compute_with_threads(&set, cli.threads)?;
    let ranking = matrix.similarity_sums();

    let to_stdout = cli.output.is_none();
    let mut out = open_output(cli)?;
    match cli.output_format {
        OutputFormat::Csv => export::write_ranking_csv(&mut out, &ranking, cli.precision as usize)?,
        OutputFormat::Json => export::write_ranking_json(&mut out, &ranking)?,
    }
    out.flush()?;
    drop(out);

    // summary naming the high- and low-similarity nodes; skipped when it
    // would corrupt a JSON stream on stdout (the JSON carries both fields)
    if !(to_stdout && cli.output_format == OutputFormat::Json) {
        println!("top={} bottom={}", ranking.top().label, ranking.bottom().label);
    }
    Ok(())
}

fn cmd_similar(cli: &Cli, node: &str, top: usize) -> anyhow::Result<()> {
    if top < 1 {
        bail!("--top must be at least 1");
    }
    let set = signature_set(load_input(cli)?)?;
    let matrix = SimilarityMatrix::compute_with_threads(&set, cli.threads)?;
    let i = matrix
        .node_index(node)
        .ok_or_else(|| egosim::Error::UnknownNode(node.to_owned()))?;
    let nearest = matrix.top_k_similar(i, top)?;

    let precision = cli.precision as usize;
    let mut out = open_output(cli)?;
    match cli.output_format {
        OutputFormat::Csv => {
            for entry in &nearest {
                writeln!(out, "{} {:.precision$}", entry.label, entry.score)?;
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                label: &'a str,
                score: f64,
            }
            let rows: Vec<Row<'_>> = nearest
                .iter()
                .map(|e| Row {
                    label: &e.label,
                    score: e.score,
                })
                .collect();
            serde_json::to_writer(&mut out, &rows).map_err(io::Error::other)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_datasets(cli: &Cli) -> anyhow::Result<()> {
    let list = datasets::list_datasets();
    let mut out = open_output(cli)?;
    match cli.output_format {
        OutputFormat::Json => {
            serde_json::to_writer(&mut out, &list).map_err(io::Error::other)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            for d in &list {
                writeln!(out, "{}", describe(d))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn describe(d: &DatasetDescriptor) -> String {
    let edges = d
        .edge_count
        .map(|e| e.to_string())
        .unwrap_or_else(|| "-".into());
    format!(
        "{:<15} nodes={:<6} edges={:<7} top={:<5} bottom={:<5} {}",
        d.name,
        d.node_count,
        edges,
        d.expected_top.as_deref().unwrap_or("-"),
        d.expected_bottom.as_deref().unwrap_or("-"),
        if d.bundled { "bundled" } else { "descriptor-only" }
    )
}
