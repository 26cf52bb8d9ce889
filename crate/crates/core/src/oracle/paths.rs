//! Exhaustive path machinery for the lemma checkers. Deliberately separate
//! from `metrics` so the checkers do not lean on the code they validate.

use std::collections::VecDeque;

pub(crate) const UNREACHABLE: usize = usize::MAX;

/// All-pairs distances by repeated BFS.
pub(crate) fn all_pairs(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..adjacency.len())
        .map(|s| {
            let mut dist = vec![UNREACHABLE; adjacency.len()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adjacency[u] {
                    if dist[v] == UNREACHABLE {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Every shortest path from `source` to `target`, each listed from
/// `source`. Walks the shortest-path DAG backwards from `target`.
pub(crate) fn shortest_paths(
    adjacency: &[Vec<usize>],
    dist: &[Vec<usize>],
    source: usize,
    target: usize,
) -> Vec<Vec<usize>> {
    let from = &dist[source];
    let mut out = Vec::new();
    let mut stack = vec![target];
    collect_back(adjacency, from, source, &mut stack, &mut out);
    out
}

fn collect_back(
    adjacency: &[Vec<usize>],
    from: &[usize],
    source: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *stack.last().expect("nonempty");
    if v == source {
        out.push(stack.iter().rev().copied().collect());
        return;
    }
    for &p in &adjacency[v] {
        if from[p] + 1 == from[v] {
            stack.push(p);
            collect_back(adjacency, from, source, stack, out);
            stack.pop();
        }
    }
}

/// Whether a simple path with exactly `length` edges runs from `source` to
/// `target` and visits at least one vertex flagged in `must_hit`.
pub(crate) fn simple_path_hitting(
    adjacency: &[Vec<usize>],
    dist: &[Vec<usize>],
    source: usize,
    target: usize,
    length: usize,
    must_hit: &[bool],
) -> bool {
    if source == target {
        return length == 0 && must_hit[source];
    }
    let hits: Vec<usize> = (0..adjacency.len()).filter(|&v| must_hit[v]).collect();
    if hits.is_empty() {
        return false;
    }
    let mut search = PathSearch {
        adjacency,
        dist,
        target,
        must_hit,
        hits: &hits,
        visited: vec![false; adjacency.len()],
    };
    search.visited[source] = true;
    search.extend(source, length, must_hit[source])
}

struct PathSearch<'a> {
    adjacency: &'a [Vec<usize>],
    dist: &'a [Vec<usize>],
    target: usize,
    must_hit: &'a [bool],
    hits: &'a [usize],
    visited: Vec<bool>,
}

impl PathSearch<'_> {
    fn extend(&mut self, v: usize, remaining: usize, hit: bool) -> bool {
        if v == self.target {
            return remaining == 0 && hit;
        }
        if self.dist[v][self.target] > remaining {
            return false;
        }
        if !hit {
            let detour = self
                .hits
                .iter()
                .map(|&h| self.dist[v][h].saturating_add(self.dist[h][self.target]))
                .min()
                .unwrap_or(UNREACHABLE);
            if detour > remaining {
                return false;
            }
        }
        for i in 0..self.adjacency[v].len() {
            let w = self.adjacency[v][i];
            if self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            let found = self.extend(w, remaining - 1, hit || self.must_hit[w]);
            self.visited[w] = false;
            if found {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    #[test]
    fn square_has_two_geodesics_between_antipodes() {
        let adj = adjacency(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let dist = all_pairs(&adj);
        let mut paths = shortest_paths(&adj, &dist, 0, 2);
        paths.sort();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(shortest_paths(&adj, &dist, 1, 1), vec![vec![1]]);
    }

    #[test]
    fn exact_length_paths() {
        // 0-1-2 plus detour 0-3-4-2
        let adj = adjacency(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]);
        let dist = all_pairs(&adj);
        let mut through = vec![false; 5];
        through[3] = true;
        assert!(simple_path_hitting(&adj, &dist, 0, 2, 3, &through));
        assert!(!simple_path_hitting(&adj, &dist, 0, 2, 2, &through));
        assert!(!simple_path_hitting(&adj, &dist, 0, 2, 4, &through));
        through[3] = false;
        through[1] = true;
        assert!(simple_path_hitting(&adj, &dist, 0, 2, 2, &through));
        assert!(!simple_path_hitting(&adj, &dist, 1, 1, 1, &through));
    }
}
