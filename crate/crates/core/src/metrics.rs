//! Distances, eccentricity, radius and center of a reduced graph.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::reduced::ReducedGraph;
use crate::ZoneId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Metrics {
    pub eccentricity: Vec<usize>,
    pub radius: usize,
    /// Zones of minimum eccentricity, ascending.
    pub center: Vec<ZoneId>,
}

impl Metrics {
    /// The center zone the solver floods: the smallest id.
    pub fn center_zone(&self) -> ZoneId {
        self.center[0]
    }
}

/// Unweighted shortest-path distances from `source`.
pub fn bfs_distances(rg: &ReducedGraph, source: ZoneId) -> Result<Vec<usize>> {
    rg.check_zone(source)?;
    Ok(distances_from(rg.adjacency(), source))
}

pub fn eccentricity(rg: &ReducedGraph, x: ZoneId) -> Result<usize> {
    rg.check_zone(x)?;
    Ok(eccentricity_from(rg.adjacency(), x))
}

/// One BFS per zone; O(nm) overall.
pub fn radius_and_center(rg: &ReducedGraph) -> Metrics {
    let eccentricity: Vec<usize> = (0..rg.zone_count())
        .map(|x| eccentricity_from(rg.adjacency(), x))
        .collect();
    let radius = *eccentricity.iter().min().expect("reduced graph is nonempty");
    let center = eccentricity
        .iter()
        .enumerate()
        .filter(|&(_, &e)| e == radius)
        .map(|(x, _)| x)
        .collect();
    Metrics {
        eccentricity,
        radius,
        center,
    }
}

pub fn radius(rg: &ReducedGraph) -> usize {
    (0..rg.zone_count())
        .map(|x| eccentricity_from(rg.adjacency(), x))
        .min()
        .expect("reduced graph is nonempty")
}

fn distances_from(adjacency: &[Vec<usize>], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adjacency.len()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn eccentricity_from(adjacency: &[Vec<usize>], source: usize) -> usize {
    // BFS visits in nondecreasing distance, so the last distance is the max.
    distances_from(adjacency, source)
        .into_iter()
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn path(n: usize) -> ReducedGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        ReducedGraph::bipartite(n, &edges).unwrap()
    }

    fn grid(rows: usize, cols: usize) -> ReducedGraph {
        let mut e = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    e.push((v, v + 1));
                }
                if r + 1 < rows {
                    e.push((v, v + cols));
                }
            }
        }
        ReducedGraph::bipartite(rows * cols, &e).unwrap()
    }

    fn square() -> ReducedGraph {
        ReducedGraph::bipartite(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn distances() {
        assert_eq!(bfs_distances(&path(1), 0).unwrap(), vec![0]);
        assert_eq!(bfs_distances(&path(5), 0).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(bfs_distances(&square(), 0).unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(bfs_distances(&square(), 2).unwrap(), vec![2, 1, 0, 1]);
        assert_eq!(
            bfs_distances(&path(2), 2),
            Err(Error::InvalidZone {
                zone: 2,
                zone_count: 2
            })
        );
    }

    #[test]
    fn eccentricities() {
        assert_eq!(eccentricity(&path(5), 0).unwrap(), 4);
        assert_eq!(eccentricity(&path(5), 2).unwrap(), 2);
        assert_eq!(eccentricity(&grid(3, 3), 4).unwrap(), 2);
        assert_eq!(eccentricity(&grid(3, 3), 0).unwrap(), 4);
    }

    #[test]
    fn radius_center() {
        let star = ReducedGraph::bipartite(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let m = radius_and_center(&star);
        assert_eq!((m.radius, m.center.clone()), (1, vec![0]));
        assert_eq!(m.eccentricity, vec![1, 2, 2, 2, 2]);

        let m = radius_and_center(&path(5));
        assert_eq!((m.radius, m.center), (2, vec![2]));

        let m = radius_and_center(&square());
        assert_eq!((m.radius, m.center), (2, vec![0, 1, 2, 3]));

        let m = radius_and_center(&path(1));
        assert_eq!((m.radius, m.center, m.eccentricity), (0, vec![0], vec![0]));
        assert_eq!(radius(&grid(4, 5)), radius_and_center(&grid(4, 5)).radius);
    }
}
