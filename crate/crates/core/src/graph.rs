//! Colored input graphs and the flooding operation on them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reduced::ZoneMap;
use crate::Color;

/// An undirected, connected, simple graph with one color per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<Color>,
    color_count: usize,
    edge_count: usize,
}

/// Recolor the zone containing `vertex` with `color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloodMove {
    pub vertex: usize,
    pub color: Color,
}

impl FloodMove {
    pub fn new(vertex: usize, color: Color) -> Self {
        Self { vertex, color }
    }
}

impl ColoredGraph {
    /// Builds a graph whose palette is inferred from the colors used
    /// (never fewer than two colors, so every instance can be flooded).
    pub fn build(edges: &[(usize, usize)], colors: Vec<Color>) -> Result<Self> {
        let used = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Self::with_palette(edges, colors, used.max(2))
    }

    /// Builds a graph with an explicit palette size.
    pub fn with_palette(
        edges: &[(usize, usize)],
        colors: Vec<Color>,
        color_count: usize,
    ) -> Result<Self> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if let Some((vertex, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize >= color_count)
        {
            return Err(Error::ColorOutOfRange {
                vertex,
                color,
                color_count,
            });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        let reached = reachable_count(&adjacency);
        if reached != n {
            return Err(Error::DisconnectedGraph {
                reached,
                vertex_count: n,
            });
        }
        Ok(Self {
            adjacency,
            colors,
            color_count,
            edge_count: edges.len(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_monochromatic(&self) -> bool {
        self.colors.windows(2).all(|w| w[0] == w[1])
    }

    /// Same structure, new coloration.
    pub fn recolored(&self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.colors.len() {
            return Err(Error::LengthMismatch {
                what: "coloration length differs from vertex count",
            });
        }
        if let Some((vertex, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize >= self.color_count)
        {
            return Err(Error::ColorOutOfRange {
                vertex,
                color,
                color_count: self.color_count,
            });
        }
        Ok(Self {
            colors,
            ..self.clone()
        })
    }

    /// Exchanges colors 0 and 1, leaving any other colors alone.
    pub fn swap_colors(&self) -> Self {
        let colors = self
            .colors
            .iter()
            .map(|&c| match c {
                0 => 1,
                1 => 0,
                c => c,
            })
            .collect();
        Self {
            colors,
            ..self.clone()
        }
    }

    pub(crate) fn check_move(&self, index: usize, mv: FloodMove) -> Result<()> {
        if mv.vertex >= self.vertex_count() || mv.color as usize >= self.color_count {
            return Err(Error::MalformedMove {
                index,
                vertex: mv.vertex,
                color: mv.color,
            });
        }
        Ok(())
    }
}

fn reachable_count(adjacency: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adjacency.len()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count
}

/// Floods the zone containing `mv.vertex` with `mv.color`.
///
/// The zone map is updated locally: only the flooded zone and the
/// same-colored zones touching it are merged, then ids are shifted so the
/// numbering matches a fresh [`reduce`](crate::reduced::reduce) of the new
/// coloration (zones ordered by their smallest vertex).
pub fn apply_flood(
    g: &ColoredGraph,
    zones: &ZoneMap,
    mv: FloodMove,
) -> Result<(ColoredGraph, ZoneMap)> {
    g.check_move(0, mv)?;
    if g.color(mv.vertex) == mv.color {
        return Err(Error::NoOpMove {
            vertex: mv.vertex,
            color: mv.color,
        });
    }
    let flooded = zones.zone_of(mv.vertex);
    let mut colors = g.colors.clone();
    for &v in zones.members(flooded) {
        colors[v] = mv.color;
    }

    // Zones of the target color touching the flooded zone join it whole.
    let mut merged = vec![flooded];
    let mut is_merged = vec![false; zones.zone_count()];
    is_merged[flooded] = true;
    for &v in zones.members(flooded) {
        for &w in g.neighbors(v) {
            let z = zones.zone_of(w);
            if !is_merged[z] && colors[w] == mv.color {
                is_merged[z] = true;
                merged.push(z);
            }
        }
    }

    let next = zones.merge(&merged);
    let graph = ColoredGraph {
        colors,
        ..g.clone()
    };
    Ok((graph, next))
}

/// [`apply_flood`] followed by a full re-reduction that must agree with the
/// incremental zone map.
pub fn apply_flood_checked(
    g: &ColoredGraph,
    zones: &ZoneMap,
    mv: FloodMove,
) -> Result<(ColoredGraph, ZoneMap)> {
    let (graph, next) = apply_flood(g, zones, mv)?;
    let (_, fresh) = crate::reduced::reduce(&graph);
    assert_eq!(
        fresh, next,
        "incremental zone map diverged from full reduction after {mv:?}"
    );
    Ok((graph, next))
}
