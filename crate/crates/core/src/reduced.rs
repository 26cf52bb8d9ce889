//! Zones, reduced graphs and neighborhood contraction.
//!
//! A zone is a maximal connected monochromatic vertex set. Collapsing every
//! zone of a [`ColoredGraph`] to a single vertex gives the reduced graph,
//! whose induced coloration is proper. Zone ids are dense and ordered by the
//! smallest original vertex each zone contains.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::{Color, ZoneId};

/// Assignment of original vertices to zones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneMap {
    zone_of: Vec<ZoneId>,
    members: Vec<Vec<usize>>,
}

impl ZoneMap {
    pub fn zone_count(&self) -> usize {
        self.members.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.zone_of.len()
    }

    pub fn zone_of(&self, v: usize) -> ZoneId {
        self.zone_of[v]
    }

    /// Sorted original vertices of zone `z`.
    pub fn members(&self, z: ZoneId) -> &[usize] {
        &self.members[z]
    }

    /// Smallest original vertex of zone `z`.
    pub fn representative_of(&self, z: ZoneId) -> usize {
        self.members[z][0]
    }

    /// Merges `zones` into one. The merged zone takes the smallest of their
    /// ids, and the remaining ids are compacted preserving order.
    pub(crate) fn merge(&self, zones: &[ZoneId]) -> ZoneMap {
        let mut absorbed = vec![false; self.zone_count()];
        let anchor = *zones.iter().min().expect("merge of no zones");
        for &z in zones {
            absorbed[z] = z != anchor;
        }
        let remap = compact_ids(&absorbed, anchor);
        self.relabel(&remap, remap.iter().max().map_or(0, |&m| m + 1))
    }

    /// The zone map seen through a contraction of the reduced graph.
    pub fn after_contraction(&self, c: &Contraction) -> ZoneMap {
        self.relabel(&c.remap, c.graph.zone_count())
    }

    fn relabel(&self, remap: &[ZoneId], zone_count: usize) -> ZoneMap {
        let mut members = vec![Vec::new(); zone_count];
        let mut touched = vec![0usize; zone_count];
        for (old, list) in self.members.iter().enumerate() {
            let new = remap[old];
            touched[new] += 1;
            members[new].extend_from_slice(list);
        }
        for (list, &parts) in members.iter_mut().zip(&touched) {
            if parts > 1 {
                list.sort_unstable();
            }
        }
        let zone_of = self.zone_of.iter().map(|&z| remap[z]).collect();
        ZoneMap { zone_of, members }
    }
}

/// New ids after folding every `absorbed` zone into `anchor`.
fn compact_ids(absorbed: &[bool], anchor: ZoneId) -> Vec<ZoneId> {
    let mut remap = vec![0; absorbed.len()];
    let mut next = 0;
    for (z, &gone) in absorbed.iter().enumerate() {
        if !gone {
            remap[z] = next;
            next += 1;
        }
    }
    for (z, &gone) in absorbed.iter().enumerate() {
        if gone {
            remap[z] = remap[anchor];
        }
    }
    remap
}

/// A connected simple graph with a proper coloration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    adjacency: Vec<Vec<ZoneId>>,
    colors: Vec<Color>,
    color_count: usize,
}

impl ReducedGraph {
    /// Validates symmetry, simplicity, properness and connectivity.
    pub fn new(adjacency: Vec<Vec<ZoneId>>, colors: Vec<Color>, color_count: usize) -> Result<Self> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if adjacency.len() != n {
            return Err(Error::LengthMismatch {
                what: "adjacency and colors differ in length",
            });
        }
        let mut adjacency = adjacency;
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge {
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }
        for (u, list) in adjacency.iter().enumerate() {
            if colors[u] as usize >= color_count {
                return Err(Error::ColorOutOfRange {
                    vertex: u,
                    color: colors[u],
                    color_count,
                });
            }
            for &v in list {
                if v >= n {
                    return Err(Error::InvalidZone {
                        zone: v,
                        zone_count: n,
                    });
                }
                if v == u {
                    return Err(Error::SelfLoop { vertex: u });
                }
                if adjacency[v].binary_search(&u).is_err() {
                    return Err(Error::AsymmetricAdjacency { u, v });
                }
                if colors[u] == colors[v] {
                    return Err(Error::ImproperColoring {
                        u: u.min(v),
                        v: u.max(v),
                        color: colors[u],
                    });
                }
            }
        }
        let rg = Self {
            adjacency,
            colors,
            color_count,
        };
        let reached = rg.reachable_from_zero();
        if reached != n {
            return Err(Error::DisconnectedGraph {
                reached,
                vertex_count: n,
            });
        }
        Ok(rg)
    }

    /// Builds from an edge list, inferring a palette of at least two colors.
    pub fn from_edges(colors: Vec<Color>, edges: &[(ZoneId, ZoneId)]) -> Result<Self> {
        let n = colors.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidZone {
                    zone: u.max(v),
                    zone_count: n,
                });
            }
            adjacency[u].push(v);
            if u != v {
                adjacency[v].push(u);
            }
        }
        let used = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        Self::new(adjacency, colors, used.max(2))
    }

    /// Builds from an uncolored connected bipartite graph, coloring the side
    /// containing zone 0 with color 0.
    pub fn bipartite(zone_count: usize, edges: &[(ZoneId, ZoneId)]) -> Result<Self> {
        if zone_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); zone_count];
        for &(u, v) in edges {
            if u >= zone_count || v >= zone_count {
                return Err(Error::InvalidZone {
                    zone: u.max(v),
                    zone_count,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut side: Vec<Option<Color>> = vec![None; zone_count];
        let mut queue = VecDeque::from([0]);
        side[0] = Some(0);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued zones are colored");
            for &v in &adjacency[u] {
                match side[v] {
                    None => {
                        side[v] = Some(1 - su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return Err(Error::NotBipartite { u, v }),
                    Some(_) => {}
                }
            }
        }
        let reached = side.iter().filter(|s| s.is_some()).count();
        if reached != zone_count {
            return Err(Error::DisconnectedGraph {
                reached,
                vertex_count: zone_count,
            });
        }
        let colors = side.into_iter().map(|s| s.unwrap_or(0)).collect();
        Self::new(adjacency, colors, 2)
    }

    pub fn zone_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, z: ZoneId) -> Color {
        self.colors[z]
    }

    pub fn neighbors(&self, z: ZoneId) -> &[ZoneId] {
        &self.adjacency[z]
    }

    pub fn adjacency(&self) -> &[Vec<ZoneId>] {
        &self.adjacency
    }

    pub fn edges(&self) -> impl Iterator<Item = (ZoneId, ZoneId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_zone(&self, z: ZoneId) -> Result<()> {
        if z >= self.zone_count() {
            return Err(Error::InvalidZone {
                zone: z,
                zone_count: self.zone_count(),
            });
        }
        Ok(())
    }

    /// The reduced graph read back as an ordinary colored graph.
    pub fn to_colored_graph(&self) -> ColoredGraph {
        let edges: Vec<_> = self.edges().collect();
        ColoredGraph::with_palette(&edges, self.colors.clone(), self.color_count)
            .expect("reduced graph is a valid colored graph")
    }

    fn reachable_from_zero(&self) -> usize {
        let mut seen = vec![false; self.zone_count()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count
    }
}

/// Computes the zones of `g` and the reduced graph they induce.
///
/// One BFS over monochromatic edges labels zones; a second pass over the
/// original edges collects zone adjacency with a per-zone marker for
/// deduplication. Linear in `n + m` apart from sorting the output lists.
pub fn reduce(g: &ColoredGraph) -> (ReducedGraph, ZoneMap) {
    let n = g.vertex_count();
    const UNSET: ZoneId = ZoneId::MAX;
    let mut zone_of = vec![UNSET; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if zone_of[start] != UNSET {
            continue;
        }
        let z = members.len();
        let color = g.color(start);
        let mut zone = vec![start];
        zone_of[start] = z;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if zone_of[v] == UNSET && g.color(v) == color {
                    zone_of[v] = z;
                    zone.push(v);
                    queue.push_back(v);
                }
            }
        }
        zone.sort_unstable();
        members.push(zone);
    }

    let zone_count = members.len();
    let mut adjacency = vec![Vec::new(); zone_count];
    let mut last_seen = vec![UNSET; zone_count];
    for (z, zone) in members.iter().enumerate() {
        for &u in zone {
            for &v in g.neighbors(u) {
                let w = zone_of[v];
                if w != z && last_seen[w] != z {
                    last_seen[w] = z;
                    adjacency[z].push(w);
                }
            }
        }
        adjacency[z].sort_unstable();
    }
    let colors = members.iter().map(|zone| g.color(zone[0])).collect();
    let rg = ReducedGraph {
        adjacency,
        colors,
        color_count: g.color_count(),
    };
    (rg, ZoneMap { zone_of, members })
}

/// Result of a neighborhood contraction, with the merge trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub graph: ReducedGraph,
    /// Id of the contracted zone in `graph`.
    pub zone: ZoneId,
    /// Old zone id to new zone id; absorbed zones map to `zone`.
    pub remap: Vec<ZoneId>,
    /// Old ids of the zones folded into the contracted zone (its neighbors).
    pub absorbed: Vec<ZoneId>,
}

/// Contracts `x` together with its neighborhood into a single zone.
///
/// The merged zone keeps `x`'s adjacency to every second neighbor and takes
/// the other color. Surviving ids are compacted in order; the merged zone
/// gets the smallest id among `x` and its neighbors, which matches the
/// numbering [`reduce`] would give after the equivalent flood.
pub fn contract(rg: &ReducedGraph, x: ZoneId) -> Result<Contraction> {
    rg.check_zone(x)?;
    if rg.zone_count() == 1 {
        return Err(Error::SingletonGraph);
    }
    if rg.color_count() > 2 {
        return Err(Error::TooManyColors {
            color_count: rg.color_count(),
        });
    }
    let n = rg.zone_count();
    let mut closed = vec![false; n];
    closed[x] = true;
    for &y in rg.neighbors(x) {
        closed[y] = true;
    }
    let anchor = rg.neighbors(x).first().map_or(x, |&y| y.min(x));
    let absorbed_mask: Vec<bool> = (0..n).map(|z| closed[z] && z != anchor).collect();
    let remap = compact_ids(&absorbed_mask, anchor);
    let new_count = n - rg.neighbors(x).len();
    let merged = remap[x];

    let mut adjacency = vec![Vec::new(); new_count];
    let mut colors = vec![0; new_count];
    let mut seen = vec![usize::MAX; new_count];
    for u in (0..n).filter(|&u| !closed[u]) {
        let nu = remap[u];
        colors[nu] = rg.color(u);
        for &v in rg.neighbors(u) {
            let nv = remap[v];
            if seen[nv] != nu {
                seen[nv] = nu;
                adjacency[nu].push(nv);
            }
        }
        adjacency[nu].sort_unstable();
    }
    for &y in rg.neighbors(x) {
        for &w in rg.neighbors(y) {
            if closed[w] {
                continue;
            }
            let nw = remap[w];
            if seen[nw] != merged {
                seen[nw] = merged;
                adjacency[merged].push(nw);
            }
        }
    }
    adjacency[merged].sort_unstable();
    colors[merged] = 1 - rg.color(x);

    let mut absorbed = rg.neighbors(x).to_vec();
    absorbed.sort_unstable();
    Ok(Contraction {
        graph: ReducedGraph {
            adjacency,
            colors,
            color_count: rg.color_count(),
        },
        zone: merged,
        remap,
        absorbed,
    })
}

/// Labeling-independent description of a zoned coloration: every zone is
/// named by its smallest original vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    /// For each original vertex, the label of its zone.
    pub partition: Vec<usize>,
    /// `(label, color)` sorted by label.
    pub colors: Vec<(usize, Color)>,
    /// `(label, label)` pairs, smaller label first, sorted.
    pub edges: Vec<(usize, usize)>,
}

pub fn canonical_form(rg: &ReducedGraph, zones: &ZoneMap) -> CanonicalForm {
    assert_eq!(rg.zone_count(), zones.zone_count(), "zone map does not match graph");
    let label: Vec<usize> = (0..rg.zone_count()).map(|z| zones.representative_of(z)).collect();
    let partition = zones.zone_of.iter().map(|&z| label[z]).collect();
    let mut colors: Vec<_> = (0..rg.zone_count()).map(|z| (label[z], rg.color(z))).collect();
    colors.sort_unstable();
    let mut edges: Vec<_> = rg
        .edges()
        .map(|(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
        .collect();
    edges.sort_unstable();
    CanonicalForm {
        partition,
        colors,
        edges,
    }
}
