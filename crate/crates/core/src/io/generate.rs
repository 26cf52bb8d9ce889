use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GridSpec;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::reduced::{reduce, ReducedGraph};
use crate::Color;

/// Random connected graph: a uniformly attached spanning tree over a
/// shuffled vertex order, plus `extra_edges` distinct non-tree edges, with
/// colors drawn uniformly from `0..color_count`. Deterministic per seed.
pub fn gen_random(n: usize, extra_edges: usize, color_count: usize, seed: u64) -> Result<ColoredGraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let color_count = color_count.max(1);
    if color_count > usize::from(Color::MAX) + 1 {
        return Err(Error::TooManyColors { color_count });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(n - 1 + extra_edges);
    let mut present = HashSet::with_capacity(n - 1 + extra_edges);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let e = ordered(order[i], parent);
        present.insert(e);
        edges.push(e);
    }

    let available = n * (n - 1) / 2 - (n - 1);
    if extra_edges > available {
        return Err(Error::TooManyEdges {
            requested: extra_edges,
            available,
        });
    }
    if extra_edges * 2 <= available {
        while edges.len() < n - 1 + extra_edges {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(ordered(u, v)) {
                edges.push(ordered(u, v));
            }
        }
    } else {
        let mut free: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        free.shuffle(&mut rng);
        edges.extend(free.into_iter().take(extra_edges));
    }

    let colors = (0..n).map(|_| rng.gen_range(0..color_count) as Color).collect();
    ColoredGraph::with_palette(&edges, colors, color_count.max(2))
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

pub fn random_grid(rows: usize, cols: usize, color_count: usize, seed: u64) -> GridSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors = color_count.clamp(1, 10);
    let cells = (0..rows * cols).map(|_| rng.gen_range(0..colors) as Color).collect();
    GridSpec::new(rows, cols, cells)
}

/// Every 2-coloring of the `rows x cols` grid, in binary counting order.
pub fn all_grid_colorings(rows: usize, cols: usize) -> impl Iterator<Item = ColoredGraph> {
    let n = rows * cols;
    assert!(n < 32, "too many cells to enumerate");
    let base = GridSpec::new(rows, cols, vec![0; n]).to_graph();
    (0u32..1 << n).map(move |mask| {
        let colors = (0..n).map(|v| (mask >> v & 1) as Color).collect();
        base.recolored(colors).expect("binary colors fit the palette")
    })
}

/// One generated instance together with the parameters that rebuild it
/// through [`gen_random`].
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub id: usize,
    pub seed: u64,
    pub n: usize,
    pub extra_edges: usize,
    pub graph: ColoredGraph,
}

/// `count` random connected 2-colored graphs with `1..=max_n` vertices.
/// Even ids are trees, odd ids carry extra edges.
pub fn graph_corpus(count: usize, max_n: usize, seed: u64) -> Vec<CorpusInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|id| {
            let n = rng.gen_range(1..=max_n.max(1));
            let room = n * (n - 1) / 2 - (n - 1);
            let extra_edges = if id % 2 == 0 {
                0
            } else {
                rng.gen_range(0..=room.min(n))
            };
            let seed = rng.gen();
            let graph = gen_random(n, extra_edges, 2, seed).expect("parameters are in range");
            CorpusInstance {
                id,
                seed,
                n,
                extra_edges,
                graph,
            }
        })
        .collect()
}

/// `count` reduced graphs with between `min_zones` and `max_zones` zones,
/// obtained by reducing random 2-colored graphs.
pub fn reduced_corpus(
    count: usize,
    min_zones: usize,
    max_zones: usize,
    seed: u64,
) -> Vec<(CorpusInstance, ReducedGraph)> {
    assert!(1 <= min_zones && min_zones <= max_zones);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_zones..=2 * max_zones);
        let room = n * (n - 1) / 2 - (n - 1);
        let extra_edges = match rng.gen_range(0..3) {
            0 => 0,
            _ => rng.gen_range(0..=room.min(n / 3)),
        };
        let seed = rng.gen();
        let graph = gen_random(n, extra_edges, 2, seed).expect("parameters are in range");
        let (rg, _) = reduce(&graph);
        if (min_zones..=max_zones).contains(&rg.zone_count()) {
            let instance = CorpusInstance {
                id: out.len(),
                seed,
                n,
                extra_edges,
                graph,
            };
            out.push((instance, rg));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        let g = gen_random(1, 0, 2, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn tree_edge_count() {
        for seed in 0..20 {
            let g = gen_random(5, 0, 2, seed).unwrap();
            assert_eq!(g.edge_count(), 4);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(gen_random(12, 5, 3, 42).unwrap(), gen_random(12, 5, 3, 42).unwrap());
        assert_ne!(gen_random(12, 5, 3, 42).unwrap(), gen_random(12, 5, 3, 43).unwrap());
    }

    #[test]
    fn extra_edges_limits() {
        // K5 has 10 edges, a spanning tree uses 4
        let g = gen_random(5, 6, 2, 1).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert_eq!(
            gen_random(5, 7, 2, 1),
            Err(Error::TooManyEdges {
                requested: 7,
                available: 6
            })
        );
        assert_eq!(gen_random(0, 0, 2, 1), Err(Error::EmptyGraph));
    }

    #[test]
    fn grid_colorings() {
        let all: Vec<_> = all_grid_colorings(2, 2).collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[6].colors(), &[0, 1, 1, 0]);
    }

    #[test]
    fn corpora_respect_bounds() {
        let corpus = reduced_corpus(20, 3, 12, 5);
        assert_eq!(corpus.len(), 20);
        for (inst, rg) in &corpus {
            assert!((3..=12).contains(&rg.zone_count()));
            let again = gen_random(inst.n, inst.extra_edges, 2, inst.seed).unwrap();
            assert_eq!(&again, &inst.graph);
        }
        let graphs = graph_corpus(10, 8, 3);
        assert!(graphs.iter().all(|i| i.graph.vertex_count() <= 8));
        assert!(graphs.iter().step_by(2).all(|i| i.graph.edge_count() + 1 == i.n));
    }
}
