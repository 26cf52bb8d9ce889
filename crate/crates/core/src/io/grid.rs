use super::ParseError;
use crate::graph::ColoredGraph;
use crate::Color;

/// A rectangular board of colors, vertex `r * cols + c` for cell `(r, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Color>,
}

impl GridSpec {
    pub fn new(rows: usize, cols: usize, cells: Vec<Color>) -> Self {
        assert!(rows > 0 && cols > 0, "grid must have at least one cell");
        assert_eq!(rows * cols, cells.len(), "cell count does not match shape");
        assert!(cells.iter().all(|&c| c < 10), "grid colors are single digits");
        Self { rows, cols, cells }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        // (line number, content); whole-line `#` comments are skipped
        let mut lines: Vec<(usize, &str)> = text
            .split('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .enumerate()
            .filter(|(_, l)| !l.starts_with('#'))
            .map(|(i, l)| (i + 1, l))
            .collect();
        while lines.last().is_some_and(|(_, l)| l.is_empty()) {
            lines.pop();
        }
        if lines.is_empty() {
            return Err(ParseError::Empty);
        }
        let cols = lines[0].1.chars().count();
        let mut cells = Vec::with_capacity(cols * lines.len());
        for &(line, row) in &lines {
            let found = row.chars().count();
            if found != cols || found == 0 {
                return Err(ParseError::RaggedRows {
                    line,
                    expected: cols,
                    found,
                });
            }
            for (j, ch) in row.chars().enumerate() {
                let digit = ch.to_digit(10).ok_or(ParseError::InvalidCharacter {
                    line,
                    column: j + 1,
                    ch,
                })?;
                cells.push(digit as Color);
            }
        }
        Ok(Self {
            rows: lines.len(),
            cols,
            cells,
        })
    }

    pub fn vertex(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(2 * self.cells.len());
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.vertex(r, c);
                if c + 1 < self.cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < self.rows {
                    edges.push((v, v + self.cols));
                }
            }
        }
        edges
    }

    pub fn to_graph(&self) -> ColoredGraph {
        ColoredGraph::build(&self.edges(), self.cells.clone()).expect("grid graphs are connected")
    }

    /// Renders a coloration of this grid's cells as digit rows.
    pub fn render(&self, colors: &[Color]) -> String {
        let mut out = String::with_capacity(colors.len() + self.rows);
        for row in colors.chunks(self.cols) {
            out.extend(row.iter().map(|&c| char::from(b'0' + c)));
            out.push('\n');
        }
        out
    }
}

/// Reads a grid file straight into its 4-neighbor colored graph.
pub fn parse_grid(text: &str) -> Result<ColoredGraph, ParseError> {
    GridSpec::parse(text).map(|g| g.to_graph())
}
