//! Optimal 2-color flooding.
//!
//! The minimum number of floods that makes a connected 2-colored graph
//! monochromatic equals the radius of its reduced graph. Flooding a center
//! zone contracts it with its neighborhood and lowers the radius by exactly
//! one, and no flood lowers it by more, so flooding the same center zone
//! `radius` times is optimal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{apply_flood, ColoredGraph, FloodMove};
use crate::metrics::{self, radius_and_center};
use crate::reduced::{contract, reduce, ReducedGraph};
use crate::ZoneId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub moves: Vec<FloodMove>,
    pub claimed_optimum: usize,
    pub center_zone_representative: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Optimal,
    FeasibleSuboptimal,
    Infeasible,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Replays every contraction, recomputing radius and center to assert
    /// the per-step decrement, and replays the moves on the input graph.
    pub validate: bool,
}

fn require_two_colors(color_count: usize) -> Result<()> {
    if color_count > 2 {
        return Err(Error::TooManyColors { color_count });
    }
    Ok(())
}

pub fn min_moves(g: &ColoredGraph) -> Result<usize> {
    require_two_colors(g.color_count())?;
    let (rg, _) = reduce(g);
    Ok(metrics::radius(&rg))
}

pub fn solve(g: &ColoredGraph) -> Result<Solution> {
    solve_with(g, SolveOptions::default())
}

pub fn solve_with(g: &ColoredGraph, options: SolveOptions) -> Result<Solution> {
    require_two_colors(g.color_count())?;
    let (rg, zones) = reduce(g);
    let m = radius_and_center(&rg);
    let center = m.center_zone();
    let vertex = zones.representative_of(center);

    let mut color = rg.color(center);
    let moves = (0..m.radius)
        .map(|_| {
            color = 1 - color;
            FloodMove::new(vertex, color)
        })
        .collect();
    let solution = Solution {
        moves,
        claimed_optimum: m.radius,
        center_zone_representative: vertex,
    };

    if options.validate {
        let steps = solve_reduced_validated(&rg)?;
        assert_eq!(steps.len(), m.radius);
        let mut state = (g.clone(), zones);
        for (i, &mv) in solution.moves.iter().enumerate() {
            state = apply_flood(&state.0, &state.1, mv)?;
            let expected = m.radius - i - 1;
            let remaining = metrics::radius(&reduce(&state.0).0);
            if remaining != expected {
                return Err(Error::CertificateViolation {
                    step: i + 1,
                    expected,
                    found: remaining,
                });
            }
        }
        assert!(state.0.is_monochromatic());
    }
    Ok(solution)
}

/// Contraction sequence on the reduced graph: the smallest center zone,
/// followed through each contraction by the merge trace. Each id is given
/// in the coordinates of the graph it is contracted in.
pub fn solve_reduced(rg: &ReducedGraph) -> Vec<ZoneId> {
    let m = radius_and_center(rg);
    let mut zone = m.center_zone();
    let mut graph = rg.clone();
    let mut steps = Vec::with_capacity(m.radius);
    for _ in 0..m.radius {
        steps.push(zone);
        let c = contract(&graph, zone).expect("center zone of a graph with positive radius");
        zone = c.zone;
        graph = c.graph;
    }
    debug_assert_eq!(graph.zone_count(), 1);
    steps
}

/// [`solve_reduced`] with the radius and center recomputed after every
/// contraction: the radius must drop by exactly one and the tracked zone
/// must remain central.
pub fn solve_reduced_validated(rg: &ReducedGraph) -> Result<Vec<ZoneId>> {
    let m = radius_and_center(rg);
    let mut radius = m.radius;
    let mut zone = m.center_zone();
    let mut graph = rg.clone();
    let mut steps = Vec::with_capacity(radius);
    while graph.zone_count() > 1 {
        steps.push(zone);
        let c = contract(&graph, zone)?;
        let after = radius_and_center(&c.graph);
        if after.radius + 1 != radius {
            return Err(Error::CertificateViolation {
                step: steps.len(),
                expected: radius - 1,
                found: after.radius,
            });
        }
        if after.center.binary_search(&c.zone).is_err() {
            return Err(Error::CertificateViolation {
                step: steps.len(),
                expected: after.radius,
                found: after.eccentricity[c.zone],
            });
        }
        radius = after.radius;
        zone = c.zone;
        graph = c.graph;
    }
    if steps.len() != m.radius {
        return Err(Error::CertificateViolation {
            step: steps.len(),
            expected: m.radius,
            found: steps.len(),
        });
    }
    Ok(steps)
}

/// Replays `s` on `g` and classifies it. A move that would not change its
/// zone makes the sequence infeasible.
pub fn verify_solution(g: &ColoredGraph, s: &Solution) -> Result<Verdict> {
    for (index, &mv) in s.moves.iter().enumerate() {
        g.check_move(index, mv)?;
    }
    let optimum = min_moves(g)?;
    let (_, zones) = reduce(g);
    let mut state = (g.clone(), zones);
    for &mv in &s.moves {
        state = match apply_flood(&state.0, &state.1, mv) {
            Ok(next) => next,
            Err(Error::NoOpMove { .. }) => return Ok(Verdict::Infeasible),
            Err(e) => return Err(e),
        };
    }
    if !state.0.is_monochromatic() {
        return Ok(Verdict::Infeasible);
    }
    match s.moves.len() {
        len if len == optimum => Ok(Verdict::Optimal),
        len if len > optimum => Ok(Verdict::FeasibleSuboptimal),
        len => Err(Error::CertificateViolation {
            step: len,
            expected: optimum,
            found: len,
        }),
    }
}
