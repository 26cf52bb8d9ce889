use std::collections::HashSet;
use std::fmt::Write;

use super::{tokens, ParseError};
use crate::error::Error;
use crate::graph::ColoredGraph;
use crate::Color;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn invalid(line: usize, column: usize, source: Error) -> ParseError {
    ParseError::Invalid {
        line,
        column,
        source,
    }
}

fn number<T: std::str::FromStr>(line: usize, column: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| syntax(line, column, format!("expected {what}, found {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    if header.len() != 3 {
        return Err(syntax(
            header_line,
            header[0].0,
            format!("header needs 3 fields \"n m c\", found {}", header.len()),
        ));
    }
    let n: usize = number(header_line, header[0].0, header[0].1, "vertex count")?;
    let m: usize = number(header_line, header[1].0, header[1].1, "edge count")?;
    let c: usize = number(header_line, header[2].0, header[2].1, "color count")?;
    if n == 0 {
        return Err(invalid(header_line, header[0].0, Error::EmptyGraph));
    }

    let mut colors: Vec<Color> = Vec::with_capacity(n);
    let mut last_line = header_line;
    while colors.len() < n {
        let Some((line, toks)) = lines.next() else {
            return Err(syntax(
                last_line + 1,
                1,
                format!("expected {n} color lines, found {}", colors.len()),
            ));
        };
        last_line = line;
        if toks.len() != 1 {
            return Err(syntax(line, toks[1].0, "color lines hold a single color id"));
        }
        let (column, tok) = toks[0];
        let color: Color = number(line, column, tok, "color id")?;
        if color as usize >= c {
            let source = Error::ColorOutOfRange {
                vertex: colors.len(),
                color,
                color_count: c,
            };
            return Err(invalid(line, column, source));
        }
        colors.push(color);
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, toks) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                line,
                declared: m,
                found: m + 1,
            });
        }
        if toks.len() != 2 {
            let column = toks.get(2).map_or(toks[0].0, |t| t.0);
            return Err(syntax(line, column, "edge lines hold two vertex ids \"u v\""));
        }
        let u: usize = number(line, toks[0].0, toks[0].1, "vertex id")?;
        let v: usize = number(line, toks[1].0, toks[1].1, "vertex id")?;
        if u == v {
            return Err(invalid(line, toks[0].0, Error::SelfLoop { vertex: u }));
        }
        if u > v {
            return Err(syntax(line, toks[0].0, format!("edge endpoints must satisfy u < v, found {u} {v}")));
        }
        if v >= n {
            let source = Error::VertexOutOfRange {
                vertex: v,
                vertex_count: n,
            };
            return Err(invalid(line, toks[1].0, source));
        }
        if !seen.insert((u, v)) {
            return Err(invalid(line, toks[0].0, Error::DuplicateEdge { u, v }));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            declared: m,
            found: edges.len(),
        });
    }
    ColoredGraph::with_palette(&edges, colors, c).map_err(|e| invalid(header_line, 1, e))
}

/// Canonical text: header, colors, then edges in lexicographic order.
pub fn emit_graph(g: &ColoredGraph) -> String {
    let mut out = String::with_capacity(8 * (g.vertex_count() + g.edge_count()));
    writeln!(out, "{} {} {}", g.vertex_count(), g.edge_count(), g.color_count()).unwrap();
    for &c in g.colors() {
        writeln!(out, "{c}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
