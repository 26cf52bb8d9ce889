use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Largest instance the bitmask state encoding supports.
pub const MAX_ORACLE_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StateSpaceReport {
    /// Exact optimum when `exhausted`, otherwise an upper bound
    /// (initial zone count minus one).
    pub optimum: usize,
    pub states_explored: usize,
    /// The search ran to completion within the state budget.
    pub exhausted: bool,
}

/// Breadth-first search over whole colorations. A state is the set of
/// vertices colored 1; a move flips one zone. The first monochromatic state
/// reached gives the optimum. Zones are computed on the bitmask directly,
/// independently of [`crate::reduced::reduce`].
pub fn brute_force_min_moves(g: &ColoredGraph, state_budget: usize) -> Result<StateSpaceReport> {
    if g.color_count() > 2 {
        return Err(Error::TooManyColors {
            color_count: g.color_count(),
        });
    }
    let n = g.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::InstanceTooLarge {
            size: n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let neighbors: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let start = (0..n)
        .filter(|&v| g.color(v) == 1)
        .fold(0u64, |m, v| m | 1 << v);
    if start == 0 || start == full {
        return Ok(StateSpaceReport {
            optimum: 0,
            states_explored: 1,
            exhausted: true,
        });
    }

    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut zones = Vec::new();
    while let Some((state, depth)) = queue.pop_front() {
        zones_of(state, full, &neighbors, &mut zones);
        for &zone in &zones {
            let next = state ^ zone;
            if next == 0 || next == full {
                return Ok(StateSpaceReport {
                    optimum: depth + 1,
                    states_explored: seen.len() + 1,
                    exhausted: true,
                });
            }
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= state_budget {
                zones_of(start, full, &neighbors, &mut zones);
                return Ok(StateSpaceReport {
                    optimum: zones.len() - 1,
                    states_explored: seen.len(),
                    exhausted: false,
                });
            }
            seen.insert(next);
            queue.push_back((next, depth + 1));
        }
    }
    unreachable!("a connected graph can always be flooded")
}

fn zones_of(state: u64, full: u64, neighbors: &[u64], out: &mut Vec<u64>) {
    out.clear();
    let mut remaining = full;
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let same = if state >> v & 1 == 1 { state } else { !state & full };
        let mut zone = 1u64 << v;
        let mut frontier = zone;
        while frontier != 0 {
            let mut grown = 0;
            let mut bits = frontier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                grown |= neighbors[u];
            }
            frontier = grown & same & !zone;
            zone |= frontier;
        }
        remaining &= !zone;
        out.push(zone);
    }
}
