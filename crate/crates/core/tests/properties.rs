use freeflood::graph::apply_flood_checked;
use freeflood::io::{emit_graph, emit_moves, gen_random, parse_graph, parse_moves};
use freeflood::metrics::{bfs_distances, eccentricity, radius_and_center};
use freeflood::oracle::brute_force_min_moves;
use freeflood::reduced::canonical_form;
use freeflood::solver::solve_reduced_validated;
use freeflood::{contract, reduce, solve, verify_solution, ColoredGraph, FloodMove, ReducedGraph, Verdict};
use proptest::prelude::*;

fn graph(max_n: usize, colors: usize) -> impl Strategy<Value = ColoredGraph> {
    (1..=max_n, 0..=max_n, any::<u64>()).prop_map(move |(n, extra, seed)| {
        let room = n * (n - 1) / 2 - (n - 1);
        gen_random(n, extra.min(room), colors, seed).unwrap()
    })
}

fn reduced(max_n: usize) -> impl Strategy<Value = ReducedGraph> {
    graph(max_n, 2).prop_map(|g| reduce(&g).0)
}

/// Zone partition by pairwise union over monochromatic edges, labeled by
/// smallest member.
fn brute_force_zones(g: &ColoredGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            if g.color(u) == g.color(v) && label[u] != label[v] {
                let m = label[u].min(label[v]);
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            return label;
        }
    }
}

fn floyd_warshall(rg: &ReducedGraph) -> Vec<Vec<usize>> {
    let n = rg.zone_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
    }
    for (u, v) in rg.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_matches_brute_force_partition(g in graph(30, 3)) {
        let (rg, zones) = reduce(&g);
        let form = canonical_form(&rg, &zones);
        prop_assert_eq!(form.partition, brute_force_zones(&g));
        prop_assert!(rg.zone_count() <= g.vertex_count());
        prop_assert!(rg.edge_count() <= g.edge_count());
        for (u, v) in rg.edges() {
            prop_assert_ne!(rg.color(u), rg.color(v));
        }
        for z in 0..zones.zone_count() {
            prop_assert_eq!(zones.zone_of(zones.representative_of(z)), z);
        }
        // revalidates symmetry, simplicity, properness and connectivity
        prop_assert!(ReducedGraph::new(rg.adjacency().to_vec(), rg.colors().to_vec(), rg.color_count()).is_ok());
    }

    #[test]
    fn reduce_is_idempotent(g in graph(30, 3)) {
        let (rg, _) = reduce(&g);
        let (again, zones) = reduce(&rg.to_colored_graph());
        prop_assert_eq!(&again, &rg);
        prop_assert_eq!(zones.zone_count(), rg.zone_count());
    }

    #[test]
    fn flood_equals_contraction(g in graph(30, 2), pick in any::<prop::sample::Index>()) {
        let (rg, zones) = reduce(&g);
        prop_assume!(rg.zone_count() > 1);
        let v = pick.index(g.vertex_count());
        let mv = FloodMove::new(v, 1 - g.color(v));
        let (flooded, next) = apply_flood_checked(&g, &zones, mv).unwrap();
        let (frg, fzones) = reduce(&flooded);
        prop_assert_eq!(&fzones, &next);

        let c = contract(&rg, zones.zone_of(v)).unwrap();
        let czones = zones.after_contraction(&c);
        prop_assert_eq!(canonical_form(&frg, &fzones), canonical_form(&c.graph, &czones));
        prop_assert!(c.graph.zone_count() < rg.zone_count());
    }

    #[test]
    fn metrics_agree_with_floyd_warshall(rg in reduced(50)) {
        let d = floyd_warshall(&rg);
        let m = radius_and_center(&rg);
        let n = rg.zone_count();
        for (x, row) in d.iter().enumerate() {
            prop_assert_eq!(&bfs_distances(&rg, x).unwrap(), row);
            let ecc = *row.iter().max().unwrap();
            prop_assert_eq!(eccentricity(&rg, x).unwrap(), ecc);
            prop_assert_eq!(m.eccentricity[x], ecc);
            prop_assert!(m.radius <= ecc && ecc <= 2 * m.radius);
        }
        let radius = (0..n).map(|x| *d[x].iter().max().unwrap()).min().unwrap();
        prop_assert_eq!(m.radius, radius);
        let center: Vec<usize> = (0..n).filter(|&x| *d[x].iter().max().unwrap() == radius).collect();
        prop_assert_eq!(&m.center, &center);
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(d[a][b], d[b][a]);
                for c in 0..n {
                    prop_assert!(d[a][c] <= d[a][b] + d[b][c]);
                }
            }
        }
    }

    #[test]
    fn center_contractions_certify(rg in reduced(50)) {
        let steps = solve_reduced_validated(&rg).unwrap();
        prop_assert_eq!(steps.len(), radius_and_center(&rg).radius);
    }

    #[test]
    fn solutions_verify(g in graph(40, 2)) {
        let s = solve(&g).unwrap();
        prop_assert_eq!(verify_solution(&g, &s).unwrap(), Verdict::Optimal);
        let vertex = s.center_zone_representative;
        prop_assert!(s.moves.iter().all(|m| m.vertex == vertex));
        prop_assert!(s.moves.windows(2).all(|w| w[0].color != w[1].color));
    }

    #[test]
    fn graph_file_round_trip(g in graph(30, 4)) {
        let text = emit_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &g);
        prop_assert_eq!(emit_graph(&parsed), text);
    }

    #[test]
    fn move_file_round_trip(moves in prop::collection::vec((0usize..1000, any::<u8>()), 0..20)) {
        let moves: Vec<FloodMove> = moves.into_iter().map(|(v, c)| FloodMove::new(v, c)).collect();
        prop_assert_eq!(parse_moves(&emit_moves(&moves)).unwrap(), moves);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracle_ignores_color_swap(g in graph(12, 2)) {
        let a = brute_force_min_moves(&g, usize::MAX).unwrap();
        let b = brute_force_min_moves(&g.swap_colors(), usize::MAX).unwrap();
        prop_assert!(a.exhausted && b.exhausted);
        prop_assert_eq!(a.optimum, b.optimum);
    }
}

#[test]
fn checkerboard_reduces_to_alternating_square() {
    // 2x2 checkerboard: the brute-force partition has four singleton zones
    let g = ColoredGraph::build(&[(0, 1), (0, 2), (1, 3), (2, 3)], vec![0, 1, 1, 0]).unwrap();
    assert_eq!(brute_force_zones(&g), vec![0, 1, 2, 3]);
    let (rg, _) = reduce(&g);
    let d = floyd_warshall(&rg);
    assert!(d.iter().all(|row| row.iter().filter(|&&x| x == 1).count() == 2));
}
