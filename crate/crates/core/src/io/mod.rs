//! Text formats and instance generators.
//!
//! * Grid files: rows of digit characters, one cell per character, read as
//!   a 4-neighbor grid. Lines starting with `#` are comments.
//! * Graph files: a header line `n m c`, then `n` lines holding one color
//!   each, then `m` lines `u v` with `u < v`. `#` starts a comment.
//! * Move files: lines `vertex color`, `#` comments allowed.

mod generate;
mod graph_file;
mod grid;
mod moves;

use thiserror::Error;

pub use generate::{all_grid_colorings, gen_random, graph_corpus, random_grid, reduced_corpus};
pub use graph_file::{emit_graph, parse_graph};
pub use grid::{parse_grid, GridSpec};
pub use moves::{emit_moves, parse_moves};

use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("line {line}: row has {found} cells, expected {expected}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: invalid character {ch:?}")]
    InvalidCharacter { line: usize, column: usize, ch: char },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: header declares {declared} edges, found {found}")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}, column {column}: {source}")]
    Invalid {
        line: usize,
        column: usize,
        #[source]
        source: crate::Error,
    },
}

/// Format of an instance file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceFormat {
    Grid,
    Graph,
}

/// Grid files never contain whitespace inside a row, graph files always
/// start with a three-field header.
pub fn detect_format(text: &str) -> InstanceFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.split_whitespace().count() > 1 => InstanceFormat::Graph,
        _ => InstanceFormat::Grid,
    }
}

/// A parsed instance, keeping the grid shape when there is one.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: ColoredGraph,
    pub grid: Option<GridSpec>,
}

pub fn parse_instance(text: &str, format: Option<InstanceFormat>) -> Result<Instance, ParseError> {
    match format.unwrap_or_else(|| detect_format(text)) {
        InstanceFormat::Grid => {
            let grid = GridSpec::parse(text)?;
            Ok(Instance {
                graph: grid.to_graph(),
                grid: Some(grid),
            })
        }
        InstanceFormat::Graph => Ok(Instance {
            graph: parse_graph(text)?,
            grid: None,
        }),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns,
/// ignoring anything after `#`.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &body[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (body[..byte].chars().count() + 1, tok))
        .collect()
}
