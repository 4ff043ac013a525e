//! CSV and JSON writers for matrices and rankings.
//!
//! CSV matrix layout: first row is an empty cell followed by the labels;
//! every following row is a label followed by that row's values. Values are
//! formatted at a caller-chosen precision; JSON always carries full double
//! precision.

use std::borrow::Cow;
use std::io::{self, Write};

use serde::Serialize;

use crate::similarity::{NodeRanking, SimilarityMatrix};

/// Quotes a CSV field only when it needs it.
fn csv_field(s: &str) -> Cow<'_, str> {
    if s.contains([',', '"', '\n', '\r']) {
        Cow::Owned(format!("\"{}\"", s.replace('"', "\"\"")))
    } else {
        Cow::Borrowed(s)
    }
}

pub fn write_matrix_csv<W: Write>(
    mut w: W,
    matrix: &SimilarityMatrix,
    precision: usize,
) -> io::Result<()> {
    for label in matrix.labels() {
        write!(w, ",{}", csv_field(label))?;
    }
    writeln!(w)?;
    for (i, label) in matrix.labels().iter().enumerate() {
        write!(w, "{}", csv_field(label))?;
        for value in matrix.row(i) {
            write!(w, ",{value:.precision$}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    labels: &'a [String],
    matrix: Vec<&'a [f64]>,
}

pub fn write_matrix_json<W: Write>(mut w: W, matrix: &SimilarityMatrix) -> io::Result<()> {
    let rows: Vec<&[f64]> = (0..matrix.len()).map(|i| matrix.row(i)).collect();
    let doc = MatrixJson {
        labels: matrix.labels(),
        matrix: rows,
    };
    serde_json::to_writer(&mut w, &doc).map_err(io::Error::other)?;
    writeln!(w)
}

pub fn write_ranking_csv<W: Write>(
    mut w: W,
    ranking: &NodeRanking,
    precision: usize,
) -> io::Result<()> {
    writeln!(w, "rank,label,score")?;
    for (rank, entry) in ranking.entries().iter().enumerate() {
        writeln!(
            w,
            "{},{},{:.precision$}",
            rank + 1,
            csv_field(&entry.label),
            entry.score
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct RankingRowJson<'a> {
    rank: usize,
    label: &'a str,
    score: f64,
}

#[derive(Serialize)]
struct RankingJson<'a> {
    ranking: Vec<RankingRowJson<'a>>,
    top: &'a str,
    bottom: &'a str,
}

pub fn write_ranking_json<W: Write>(mut w: W, ranking: &NodeRanking) -> io::Result<()> {
    let rows: Vec<RankingRowJson<'_>> = ranking
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| RankingRowJson {
            rank: i + 1,
            label: &e.label,
            score: e.score,
        })
        .collect();
    let doc = RankingJson {
        ranking: rows,
        top: &ranking.top().label,
        bottom: &ranking.bottom().label,
    };
    serde_json::to_writer(&mut w, &doc).map_err(io::Error::other)?;
    writeln!(w)
}
