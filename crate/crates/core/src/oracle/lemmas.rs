//! Executable checks of how distances and the radius react to a
//! neighborhood contraction. Each check runs over every witness of one
//! graph and stops at the first violation, which it reports together with
//! enough data to reproduce it.

use serde::Serialize;

use super::paths::{all_pairs, shortest_paths, simple_path_hitting};
use crate::error::{Error, Result};
use crate::metrics::radius_and_center;
use crate::reduced::{contract, Contraction, ReducedGraph};
use crate::ZoneId;

/// Size guard for [`check_distance_bounds`].
pub const DISTANCE_CHECK_LIMIT: usize = 30;
/// Size guard for [`check_far_witness`].
pub const FAR_WITNESS_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// A center has a second far vertex reachable away from a given geodesic.
    FarWitness,
    /// Contracting around `x` shortens a distance by at most 1, or 2 when
    /// some geodesic passes through `x`.
    DistanceBounds,
    /// Any contraction lowers the radius by at most 1; contracting a center
    /// lowers it by exactly 1.
    RadiusBounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    DistanceBound { a: ZoneId, b: ZoneId, x: ZoneId },
    RadiusBound { x: ZoneId },
    CenterContraction { c: ZoneId },
    FarWitness { c: ZoneId, y: ZoneId, path: Vec<ZoneId> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: ReducedGraph,
    pub witness: Witness,
    pub detail: String,
}

impl Counterexample {
    /// Re-evaluates the violated statement on the stored witness.
    pub fn replays(&self) -> bool {
        let g = &self.graph;
        match &self.witness {
            Witness::DistanceBound { a, b, x } => {
                let dist = all_pairs(g.adjacency());
                let Ok(c) = contract(g, *x) else { return false };
                let cdist = all_pairs(c.graph.adjacency());
                distance_triple(g, &dist, &c, &cdist, *a, *b, *x).is_err()
            }
            Witness::RadiusBound { x } => {
                radius_bound_at(g, radius_and_center(g).radius, *x).is_err()
            }
            Witness::CenterContraction { c } => {
                center_contraction_at(g, radius_and_center(g).radius, *c).is_err()
            }
            Witness::FarWitness { c, y, path } => {
                let dist = all_pairs(g.adjacency());
                let radius = radius_and_center(g).radius;
                let cover = CoverTable::new(g, &dist, *c);
                far_witness_at(g, &dist, &cover, radius, *c, *y, path).is_err()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    /// Witnesses examined (triples, zones, or center/target/geodesic tuples).
    pub instances_checked: usize,
    /// Set when the graph is outside the statement's scope.
    pub skipped: Option<String>,
    pub counterexample: Option<Counterexample>,
}

impl LemmaReport {
    fn new(lemma: LemmaId) -> Self {
        Self {
            lemma,
            instances_checked: 0,
            skipped: None,
            counterexample: None,
        }
    }

    fn fail(&mut self, graph: &ReducedGraph, witness: Witness, detail: String) {
        self.counterexample = Some(Counterexample {
            graph: graph.clone(),
            witness,
            detail,
        });
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn guard(rg: &ReducedGraph, limit: usize) -> Result<()> {
    if rg.zone_count() > limit {
        return Err(Error::InstanceTooLarge {
            size: rg.zone_count(),
            limit,
        });
    }
    Ok(())
}

/// For all `a`, `b`, `x`: if no `a`-`b` geodesic uses `x` then
/// `d'(a,b) >= d(a,b) - 1`, with equality exactly when a simple `a`-`b`
/// path of length `d(a,b) + 1` passes through `x`; otherwise
/// `d'(a,b) >= d(a,b) - 2`. Here `d'` is measured after contracting `x`,
/// and vertices absorbed by the contraction are read as `x`.
pub fn check_distance_bounds(rg: &ReducedGraph) -> Result<LemmaReport> {
    guard(rg, DISTANCE_CHECK_LIMIT)?;
    let mut report = LemmaReport::new(LemmaId::DistanceBounds);
    let n = rg.zone_count();
    if n < 2 {
        return Ok(report);
    }
    let dist = all_pairs(rg.adjacency());
    for x in 0..n {
        let c = contract(rg, x)?;
        let cdist = all_pairs(c.graph.adjacency());
        for a in 0..n {
            for b in a..n {
                report.instances_checked += 1;
                if let Err(detail) = distance_triple(rg, &dist, &c, &cdist, a, b, x) {
                    report.fail(rg, Witness::DistanceBound { a, b, x }, detail);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn distance_triple(
    rg: &ReducedGraph,
    dist: &[Vec<usize>],
    c: &Contraction,
    cdist: &[Vec<usize>],
    a: ZoneId,
    b: ZoneId,
    x: ZoneId,
) -> std::result::Result<(), String> {
    let before = dist[a][b];
    let after = cdist[c.remap[a]][c.remap[b]];
    let geodesic_through_x = dist[a][x] + dist[x][b] == before;
    if geodesic_through_x {
        if after + 2 < before {
            return Err(format!(
                "d({a},{b}) = {before} but {after} after contracting {x} (a geodesic uses {x})"
            ));
        }
        return Ok(());
    }
    if after + 1 < before {
        return Err(format!(
            "d({a},{b}) = {before} but {after} after contracting {x} (no geodesic uses {x})"
        ));
    }
    let mut through = vec![false; rg.zone_count()];
    through[x] = true;
    let detour = simple_path_hitting(rg.adjacency(), dist, a, b, before + 1, &through);
    let tight = after + 1 == before;
    if tight != detour {
        return Err(format!(
            "d({a},{b}) = {before}, {after} after contracting {x}; \
             bound tight: {tight}, path of length {} through {x}: {detour}",
            before + 1
        ));
    }
    Ok(())
}

/// For every zone `x`, `R - 1 <= R(G/x) <= R`; for every center zone `c`,
/// `R(G/c) = R - 1`.
pub fn check_radius_bounds(rg: &ReducedGraph) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(LemmaId::RadiusBounds);
    if rg.zone_count() < 2 {
        return Ok(report);
    }
    let m = radius_and_center(rg);
    for x in 0..rg.zone_count() {
        report.instances_checked += 1;
        if let Err(detail) = radius_bound_at(rg, m.radius, x) {
            report.fail(rg, Witness::RadiusBound { x }, detail);
            return Ok(report);
        }
    }
    for &c in &m.center {
        report.instances_checked += 1;
        if let Err(detail) = center_contraction_at(rg, m.radius, c) {
            report.fail(rg, Witness::CenterContraction { c }, detail);
            return Ok(report);
        }
    }
    Ok(report)
}

fn contracted_radius(rg: &ReducedGraph, x: ZoneId) -> std::result::Result<usize, String> {
    contract(rg, x)
        .map(|c| radius_and_center(&c.graph).radius)
        .map_err(|e| e.to_string())
}

fn radius_bound_at(rg: &ReducedGraph, radius: usize, x: ZoneId) -> std::result::Result<(), String> {
    let after = contracted_radius(rg, x)?;
    if after > radius || after + 1 < radius {
        return Err(format!("radius {radius} became {after} after contracting {x}"));
    }
    Ok(())
}

fn center_contraction_at(
    rg: &ReducedGraph,
    radius: usize,
    c: ZoneId,
) -> std::result::Result<(), String> {
    let after = contracted_radius(rg, c)?;
    if after + 1 != radius {
        return Err(format!(
            "radius {radius} became {after} after contracting center {c}"
        ));
    }
    Ok(())
}

/// Vertices lying on some shortest path from a fixed center to each zone,
/// found by enumerating those paths.
struct CoverTable {
    cover: Vec<Vec<bool>>,
}

impl CoverTable {
    fn new(rg: &ReducedGraph, dist: &[Vec<usize>], c: ZoneId) -> Self {
        let n = rg.zone_count();
        let cover = (0..n)
            .map(|z| {
                let mut on = vec![false; n];
                for path in shortest_paths(rg.adjacency(), dist, c, z) {
                    for v in path {
                        on[v] = true;
                    }
                }
                on
            })
            .collect();
        Self { cover }
    }

    /// Whether every shortest path from the center to `z` meets `set` only
    /// at the center.
    fn avoids(&self, z: ZoneId, set: &[bool]) -> bool {
        !self.cover[z].iter().zip(set).any(|(&a, &b)| a && b)
    }
}

/// For each center `c`, each `y` at distance `R` from `c` and each geodesic
/// `γ` from `c` to `y`: some `z` other than `y` (and `c`) with
/// `R - 1 <= d(c,z) <= R` has all its geodesics from `c` meeting `γ` only at
/// `c`. Moreover either such a `z` lies at distance `R`, or one of them,
/// `z0`, has every path of length `d(c,z0) + 1` from `c` meeting `γ` only at
/// `c`.
///
/// Graphs with at most two zones are skipped: there `y` can be the only
/// other vertex and the statement has nothing to quantify over.
pub fn check_far_witness(rg: &ReducedGraph) -> Result<LemmaReport> {
    guard(rg, FAR_WITNESS_LIMIT)?;
    let mut report = LemmaReport::new(LemmaId::FarWitness);
    if rg.zone_count() <= 2 {
        report.skipped = Some(format!("{} zone(s); needs at least 3", rg.zone_count()));
        return Ok(report);
    }
    let dist = all_pairs(rg.adjacency());
    let m = radius_and_center(rg);
    for &c in &m.center {
        let cover = CoverTable::new(rg, &dist, c);
        for y in (0..rg.zone_count()).filter(|&y| dist[c][y] == m.radius) {
            for path in shortest_paths(rg.adjacency(), &dist, c, y) {
                report.instances_checked += 1;
                if let Err(detail) = far_witness_at(rg, &dist, &cover, m.radius, c, y, &path) {
                    report.fail(rg, Witness::FarWitness { c, y, path }, detail);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn far_witness_at(
    rg: &ReducedGraph,
    dist: &[Vec<usize>],
    cover: &CoverTable,
    radius: usize,
    c: ZoneId,
    y: ZoneId,
    path: &[ZoneId],
) -> std::result::Result<(), String> {
    let mut on_path = vec![false; rg.zone_count()];
    for &v in path.iter().filter(|&&v| v != c) {
        on_path[v] = true;
    }
    let candidates: Vec<ZoneId> = (0..rg.zone_count())
        .filter(|&z| z != y && z != c)
        .filter(|&z| dist[c][z] + 1 >= radius && dist[c][z] <= radius)
        .filter(|&z| cover.avoids(z, &on_path))
        .collect();
    if candidates.is_empty() {
        return Err(format!(
            "no vertex at distance {}..={radius} from center {c} avoids geodesic {path:?}",
            radius.saturating_sub(1)
        ));
    }
    if candidates.iter().any(|&z| dist[c][z] == radius) {
        return Ok(());
    }
    let refined = candidates.iter().any(|&z0| {
        !simple_path_hitting(rg.adjacency(), dist, c, z0, dist[c][z0] + 1, &on_path)
    });
    if !refined {
        return Err(format!(
            "all witnesses {candidates:?} for center {c} and geodesic {path:?} sit at distance \
             {} and each has a path one longer meeting the geodesic",
            radius - 1
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> ReducedGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        ReducedGraph::bipartite(n, &edges).unwrap()
    }

    fn square() -> ReducedGraph {
        ReducedGraph::bipartite(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn distance_bound_tight_on_path() {
        // a..e, contracting c: d(a,e) drops from 4 to 2
        let g = path(5);
        let dist = all_pairs(g.adjacency());
        let c = contract(&g, 2).unwrap();
        let cdist = all_pairs(c.graph.adjacency());
        assert_eq!(cdist[c.remap[0]][c.remap[4]], 2);
        assert!(distance_triple(&g, &dist, &c, &cdist, 0, 4, 2).is_ok());
        assert!(check_distance_bounds(&g).unwrap().holds());
    }

    #[test]
    fn distance_bounds_square_and_tiny() {
        let r = check_distance_bounds(&square()).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances_checked, 4 * 10);
        for n in 1..=2 {
            assert!(check_distance_bounds(&path(n)).unwrap().holds());
        }
    }

    #[test]
    fn radius_bounds() {
        let star = ReducedGraph::bipartite(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(contracted_radius(&star, 0).unwrap(), 0);
        assert!(check_radius_bounds(&star).unwrap().holds());
        let p5 = path(5);
        assert_eq!(contracted_radius(&p5, 0).unwrap(), 2);
        assert_eq!(contracted_radius(&p5, 2).unwrap(), 1);
        let r = check_radius_bounds(&p5).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances_checked, 6);
    }

    #[test]
    fn far_witness_small_cases() {
        let r = check_far_witness(&square()).unwrap();
        assert!(r.holds());
        // 4 centers, 1 antipode each, 2 geodesics each
        assert_eq!(r.instances_checked, 8);

        let p3 = path(3);
        let r = check_far_witness(&p3).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances_checked, 2);

        let r = check_far_witness(&path(2)).unwrap();
        assert!(r.skipped.is_some());
        assert_eq!(r.instances_checked, 0);
    }

    #[test]
    fn size_guards() {
        assert!(matches!(
            check_far_witness(&path(21)),
            Err(Error::InstanceTooLarge { size: 21, limit: 20 })
        ));
        assert!(matches!(
            check_distance_bounds(&path(31)),
            Err(Error::InstanceTooLarge { size: 31, limit: 30 })
        ));
    }

    #[test]
    fn counterexample_replay_detects_false_claims() {
        // A fabricated claim that contracting the hub of a star leaves the
        // radius unchanged does not replay; a wrong far-witness geodesic on
        // P3 does not either.
        let star = ReducedGraph::bipartite(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let fake = Counterexample {
            graph: star,
            witness: Witness::CenterContraction { c: 0 },
            detail: String::new(),
        };
        assert!(!fake.replays());
        let fake = Counterexample {
            graph: path(3),
            witness: Witness::FarWitness {
                c: 1,
                y: 0,
                path: vec![1, 0],
            },
            detail: String::new(),
        };
        assert!(!fake.replays());
    }
}
