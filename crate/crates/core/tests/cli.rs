use std::path::Path;
use std::process::Command;

use freeflood::cli::{exit, parse_move_list, run, SolveDocument};
use freeflood::io::{parse_graph, parse_grid};

fn freeflood(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("freeflood").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn solve_checkerboard_plain_and_machine() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "cb.txt", "01\n10\n");

    let (code, plain, _) = freeflood(&["solve", &grid]);
    assert_eq!(code, exit::SUCCESS);
    assert!(plain.contains("# optimum 2\n"));
    let plain_moves = parse_move_list(&plain).unwrap();
    assert_eq!(plain_moves.len(), 2);

    let (code, machine, _) = freeflood(&["--format", "machine", "solve", &grid]);
    assert_eq!(code, exit::SUCCESS);
    let doc: SolveDocument = serde_json::from_str(&machine).unwrap();
    assert_eq!(doc.optimum, 2);
    assert_eq!(doc.vertices, 4);
    assert_eq!(doc.moves, plain_moves);
    assert_eq!(parse_move_list(&machine).unwrap(), plain_moves);
}

#[test]
fn verify_accepts_solve_output() {
    let dir = tempfile::tempdir().unwrap();
    let (_, text, _) = freeflood(&["gen", "random", "--vertices", "25", "--extra", "6", "--seed", "9"]);
    assert!(text.starts_with("# seed 9"));
    let input = write(dir.path(), "g.txt", &text);
    for format in ["plain", "machine"] {
        let (code, solution, _) = freeflood(&["--format", format, "solve", &input, "--validate"]);
        assert_eq!(code, exit::SUCCESS);
        let moves = write(dir.path(), "moves", &solution);
        let (code, verdict, _) = freeflood(&["verify", &input, &moves]);
        assert_eq!(code, exit::SUCCESS, "{verdict}");
        assert!(verdict.starts_with("verdict optimal"));
    }
}

#[test]
fn verify_flags_bad_sequences() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "cb.txt", "01\n10\n");
    let long = write(dir.path(), "long", "0 1\n0 0\n0 1\n");
    let short = write(dir.path(), "short", "0 1\n");
    let (code, out, _) = freeflood(&["verify", &grid, &long]);
    assert_eq!((code, out.lines().next()), (exit::SUBOPTIMAL, Some("verdict feasible_suboptimal")));
    let (code, out, _) = freeflood(&["verify", &grid, &short]);
    assert_eq!((code, out.lines().next()), (exit::INFEASIBLE, Some("verdict infeasible")));
    let bad = write(dir.path(), "bad", "7 1\n");
    let (code, _, err) = freeflood(&["verify", &grid, &bad]);
    assert_eq!(code, exit::INSTANCE);
    assert!(err.contains("out of range"));
}

#[test]
fn radius_of_monochromatic_instance() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "mono.txt", "000\n000\n");
    let (code, out, _) = freeflood(&["radius", &grid]);
    assert_eq!(code, exit::SUCCESS);
    assert_eq!(out, "zones 1\nradius 0\ncenter 0\neccentricity 0\n");
    let (_, out, _) = freeflood(&["--format", "machine", "radius", &grid]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["radius"], 0);
    assert_eq!(v["center"], serde_json::json!([0]));
}

#[test]
fn reduce_prints_a_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.txt", "5 4 2\n0\n0\n1\n1\n0\n0 1\n1 2\n2 3\n3 4\n");
    let (code, out, _) = freeflood(&["reduce", &input]);
    assert_eq!(code, exit::SUCCESS);
    let rg = parse_graph(&out).unwrap();
    assert_eq!(rg.vertex_count(), 3);
    assert_eq!(rg.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    assert!(out.contains("# zone 1 representative 2 size 2"));
}

#[test]
fn simulate_replays_grid() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "cb.txt", "01\n10\n");
    let moves = write(dir.path(), "m", "0 1\n0 0\n");
    let (code, out, _) = freeflood(&["simulate", &grid, &moves]);
    assert_eq!(code, exit::SUCCESS);
    assert!(out.contains("step 1: flood vertex 0 with color 1: zones 2, radius 1\n11\n10\n"));
    assert!(out.ends_with("00\n00\nmonochromatic true\n"));
    let noop = write(dir.path(), "n", "0 0\n");
    let (code, _, err) = freeflood(&["simulate", &grid, &noop]);
    assert_eq!(code, exit::INSTANCE);
    assert!(err.contains("does not change"));
}

#[test]
fn oracle_command() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "cb.txt", "01\n10\n");
    let (code, out, _) = freeflood(&["oracle", &grid]);
    assert_eq!(code, exit::SUCCESS);
    assert!(out.starts_with("optimum 2\n"));
    assert!(out.contains("exhausted true\nradius 2\n"));
    let path = write(dir.path(), "p.txt", "9 8 2\n0\n1\n0\n1\n0\n1\n0\n1\n0\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
    let (_, out, _) = freeflood(&["oracle", &path, "--budget", "2"]);
    assert!(out.starts_with("optimum 8 (upper bound)\n"));
}

#[test]
fn check_runs_clean_and_echoes_seed() {
    let (code, out, _) = freeflood(&["check", "--seed", "17", "--count", "25"]);
    assert_eq!(code, exit::SUCCESS, "{out}");
    assert!(out.starts_with("# seed 17\n"));
    assert!(out.ends_with("ok\n"));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn gen_grid_parses_back() {
    let (code, out, _) = freeflood(&["gen", "grid", "--rows", "3", "--cols", "5", "--seed", "4"]);
    assert_eq!(code, exit::SUCCESS);
    assert!(out.starts_with("# seed 4 "));
    assert_eq!(parse_grid(&out).unwrap().vertex_count(), 15);
    let (_, again, _) = freeflood(&["gen", "grid", "--rows", "3", "--cols", "5", "--seed", "4"]);
    assert_eq!(again, out);
}

#[test]
fn bench_reports_grid_sizes() {
    let (code, out, _) = freeflood(&["bench", "--sizes", "4,8", "--repeats", "1", "--seed", "3"]);
    assert_eq!(code, exit::SUCCESS);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "# seed 3");
    assert_eq!(lines[1], "N,n,m,radius,milliseconds");
    for (line, n) in lines[2..].iter().zip([4usize, 8]) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0].parse::<usize>().unwrap(), n);
        assert_eq!(fields[1].parse::<usize>().unwrap(), n * n);
        assert_eq!(fields[2].parse::<usize>().unwrap(), 2 * n * (n - 1));
    }
}

#[test]
fn error_codes_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let (code, _, err) = freeflood(&["solve", missing.to_str().unwrap()]);
    assert_eq!(code, exit::FILE);
    assert!(err.starts_with("error: "));

    let ragged = write(dir.path(), "r.txt", "01\n1\n");
    let (code, _, err) = freeflood(&["solve", &ragged]);
    assert_eq!(code, exit::PARSE);
    assert!(err.contains("line 2"));

    let three = write(dir.path(), "t.txt", "012\n");
    let (code, _, err) = freeflood(&["solve", &three]);
    assert_eq!(code, exit::INSTANCE);
    assert!(err.contains("at most 2 colors"));

    let (code, _, _) = freeflood(&["solve"]);
    assert_eq!(code, exit::USAGE);
    let (code, _, _) = freeflood(&["nonsense"]);
    assert_eq!(code, exit::USAGE);
}

#[test]
fn binary_entry_point() {
    let dir = tempfile::tempdir().unwrap();
    let grid = write(dir.path(), "cb.txt", "01\n10\n");
    let output = Command::new(env!("CARGO_BIN_EXE_freeflood"))
        .args(["solve", &grid])
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(parse_move_list(&stdout).unwrap().len(), 2);

    let failed = Command::new(env!("CARGO_BIN_EXE_freeflood"))
        .args(["verify", &grid, "/nonexistent/moves"])
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(exit::FILE));
    assert!(String::from_utf8_lossy(&failed.stderr).contains("/nonexistent/moves"));
}
