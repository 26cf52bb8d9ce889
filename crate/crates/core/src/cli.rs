//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{apply_flood, ColoredGraph, FloodMove};
use crate::io::{
    emit_graph, emit_moves, gen_random, graph_corpus, parse_instance, parse_moves, random_grid,
    reduced_corpus, Instance, InstanceFormat, ParseError,
};
use crate::metrics::{radius, radius_and_center};
use crate::oracle::{
    brute_force_min_moves, check_distance_bounds, check_far_witness, check_radius_bounds,
    LemmaReport, DISTANCE_CHECK_LIMIT, FAR_WITNESS_LIMIT,
};
use crate::reduced::reduce;
use crate::solver::{min_moves, solve_with, verify_solution, Solution, SolveOptions, Verdict};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const FILE: i32 = 3;
    pub const PARSE: i32 = 4;
    pub const INSTANCE: i32 = 5;
    pub const COUNTEREXAMPLE: i32 = 6;
    pub const SUBOPTIMAL: i32 = 7;
    pub const INFEASIBLE: i32 = 8;
}

#[derive(Debug, Parser)]
#[command(name = "freeflood", version, about = "Optimal 2-color Free-Flood-It solver")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// How to read instance files.
    #[arg(long, value_enum, global = true, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Grid,
    Graph,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Optimal flood count and move list.
    Solve {
        input: PathBuf,
        /// Recompute the radius after every step and assert it drops by one.
        #[arg(long)]
        validate: bool,
    },
    /// Eccentricities, radius and center of the reduced graph.
    Radius { input: PathBuf },
    /// Print the reduced graph as a graph file.
    Reduce { input: PathBuf },
    /// Replay a move file step by step.
    Simulate { input: PathBuf, moves: PathBuf },
    /// Check a move list (plain or machine `solve` output) against the optimum.
    Verify { input: PathBuf, moves: PathBuf },
    /// Exhaustive state-space search for the optimum.
    Oracle {
        input: PathBuf,
        /// Maximum number of distinct colorations to visit.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Run the contraction-bound checkers and the oracle comparison over a
    /// seeded random corpus.
    Check {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Instances per suite.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Largest reduced graph in the corpus.
        #[arg(long, default_value_t = 20)]
        max_zones: usize,
        /// Largest original graph for the oracle comparison.
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
    },
    /// Write a random instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time `solve` on random 2-colored N x N grids; CSV output.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "16,32,64")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Random spanning tree plus extra edges, uniform colors (graph file).
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random grid (grid file).
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Document { path: String, message: String },
    #[error("{0}")]
    Instance(#[from] crate::Error),
    #[error("{0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::File { .. } | CliError::Output(_) => exit::FILE,
            CliError::Parse { .. } | CliError::Document { .. } => exit::PARSE,
            CliError::Instance(_) => exit::INSTANCE,
        }
    }
}

type CliResult = Result<i32, CliError>;

/// Runs one command line; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let text = e.render().to_string();
            let _ = if code == exit::SUCCESS {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let ctx = Context {
        format: cli.format,
        input_format: match cli.input_format {
            InputFormat::Auto => None,
            InputFormat::Grid => Some(InstanceFormat::Grid),
            InputFormat::Graph => Some(InstanceFormat::Graph),
        },
    };
    match &cli.command {
        Command::Solve { input, validate } => ctx.solve(input, *validate, out),
        Command::Radius { input } => ctx.radius(input, out),
        Command::Reduce { input } => ctx.reduce(input, out),
        Command::Simulate { input, moves } => ctx.simulate(input, moves, out),
        Command::Verify { input, moves } => ctx.verify(input, moves, out),
        Command::Oracle { input, budget } => ctx.oracle(input, *budget, out),
        Command::Check {
            seed,
            count,
            max_zones,
            max_vertices,
            budget,
        } => ctx.check(
            CheckConfig {
                seed: *seed,
                count: *count,
                max_zones: *max_zones,
                max_vertices: *max_vertices,
                budget: *budget,
            },
            out,
        ),
        Command::Gen { kind } => ctx.generate(kind, out),
        Command::Bench {
            sizes,
            seed,
            repeats,
        } => ctx.bench(sizes, *seed, (*repeats).max(1), out),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|source| CliError::File {
        path: path.display().to_string(),
        source,
    })?;
    Ok(text)
}

/// SHA-256 of the canonical graph file text.
pub fn instance_digest(g: &ColoredGraph) -> String {
    hex::encode(Sha256::digest(emit_graph(g).as_bytes()))
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Machine-readable `solve` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveDocument {
    pub digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub zones: usize,
    pub optimum: usize,
    pub center_representative: usize,
    pub moves: Vec<FloodMove>,
    pub timings_ms: Timings,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub parse: f64,
    pub solve: f64,
    pub total: f64,
}

/// Reads a move list from either plain move lines or a [`SolveDocument`].
pub fn parse_move_list(text: &str) -> Result<Vec<FloodMove>, String> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str::<SolveDocument>(text)
            .map(|doc| doc.moves)
            .map_err(|e| e.to_string())
    } else {
        parse_moves(text).map_err(|e| e.to_string())
    }
}

struct CheckConfig {
    seed: u64,
    count: usize,
    max_zones: usize,
    max_vertices: usize,
    budget: usize,
}

struct Context {
    format: Format,
    input_format: Option<InstanceFormat>,
}

impl Context {
    fn load(&self, path: &Path) -> Result<Instance, CliError> {
        let text = read_text(path)?;
        parse_instance(&text, self.input_format).map_err(|source| CliError::Parse {
            path: path.display().to_string(),
            source,
        })
    }

    fn emit_json(&self, out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
        writeln!(out)?;
        Ok(())
    }

    fn solve(&self, input: &Path, validate: bool, out: &mut dyn Write) -> CliResult {
        let start = Instant::now();
        let instance = self.load(input)?;
        let parsed = millis(start);
        let g = &instance.graph;
        let solve_start = Instant::now();
        let solution = solve_with(g, SolveOptions { validate })?;
        let solved = millis(solve_start);
        let zones = reduce(g).1.zone_count();
        let doc = SolveDocument {
            digest: instance_digest(g),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            zones,
            optimum: solution.claimed_optimum,
            center_representative: solution.center_zone_representative,
            moves: solution.moves,
            timings_ms: Timings {
                parse: parsed,
                solve: solved,
                total: millis(start),
            },
        };
        match self.format {
            Format::Machine => self.emit_json(out, &doc)?,
            Format::Plain => {
                writeln!(
                    out,
                    "# instance sha256:{} n={} m={} zones={}",
                    doc.digest, doc.vertices, doc.edges, doc.zones
                )?;
                writeln!(out, "# optimum {}", doc.optimum)?;
                writeln!(out, "# center_representative {}", doc.center_representative)?;
                writeln!(out, "# time_ms {:.3}", doc.timings_ms.solve)?;
                out.write_all(emit_moves(&doc.moves).as_bytes())?;
            }
        }
        Ok(exit::SUCCESS)
    }

    fn radius(&self, input: &Path, out: &mut dyn Write) -> CliResult {
        let instance = self.load(input)?;
        let (rg, zones) = reduce(&instance.graph);
        let m = radius_and_center(&rg);
        match self.format {
            Format::Machine => {
                let representatives: Vec<usize> =
                    m.center.iter().map(|&z| zones.representative_of(z)).collect();
                self.emit_json(
                    out,
                    &json!({
                        "digest": instance_digest(&instance.graph),
                        "zones": rg.zone_count(),
                        "radius": m.radius,
                        "center": m.center,
                        "center_representatives": representatives,
                        "eccentricity": m.eccentricity,
                    }),
                )?;
            }
            Format::Plain => {
                writeln!(out, "zones {}", rg.zone_count())?;
                writeln!(out, "radius {}", m.radius)?;
                writeln!(out, "center {}", join(&m.center))?;
                writeln!(out, "eccentricity {}", join(&m.eccentricity))?;
            }
        }
        Ok(exit::SUCCESS)
    }

    fn reduce(&self, input: &Path, out: &mut dyn Write) -> CliResult {
        let instance = self.load(input)?;
        let (rg, zones) = reduce(&instance.graph);
        match self.format {
            Format::Machine => {
                let zone_of: Vec<usize> =
                    (0..zones.vertex_count()).map(|v| zones.zone_of(v)).collect();
                self.emit_json(
                    out,
                    &json!({
                        "zones": rg.zone_count(),
                        "colors": rg.colors(),
                        "edges": rg.edges().collect::<Vec<_>>(),
                        "zone_of": zone_of,
                    }),
                )?;
            }
            Format::Plain => {
                for z in 0..zones.zone_count() {
                    writeln!(
                        out,
                        "# zone {z} representative {} size {}",
                        zones.representative_of(z),
                        zones.members(z).len()
                    )?;
                }
                out.write_all(emit_graph(&rg.to_colored_graph()).as_bytes())?;
            }
        }
        Ok(exit::SUCCESS)
    }

    fn load_moves(&self, path: &Path) -> Result<Vec<FloodMove>, CliError> {
        let text = read_text(path)?;
        parse_move_list(&text).map_err(|message| CliError::Document {
            path: path.display().to_string(),
            message,
        })
    }

    fn simulate(&self, input: &Path, moves: &Path, out: &mut dyn Write) -> CliResult {
        let instance = self.load(input)?;
        let moves = self.load_moves(moves)?;
        let (rg, zones) = reduce(&instance.graph);
        let mut state = (instance.graph.clone(), zones);
        let mut steps = vec![json!({
            "step": 0,
            "zones": rg.zone_count(),
            "radius": radius(&rg),
            "colors": state.0.colors(),
        })];
        if self.format == Format::Plain {
            self.print_state(out, &instance, 0, None, &state.0, rg.zone_count(), radius(&rg))?;
        }
        for (i, &mv) in moves.iter().enumerate() {
            state.0.check_move(i, mv)?;
            state = apply_flood(&state.0, &state.1, mv)?;
            let rg = reduce(&state.0).0;
            let r = radius(&rg);
            match self.format {
                Format::Plain => {
                    self.print_state(out, &instance, i + 1, Some(mv), &state.0, rg.zone_count(), r)?
                }
                Format::Machine => steps.push(json!({
                    "step": i + 1,
                    "move": mv,
                    "zones": rg.zone_count(),
                    "radius": r,
                    "colors": state.0.colors(),
                })),
            }
        }
        let done = state.0.is_monochromatic();
        match self.format {
            Format::Plain => writeln!(out, "monochromatic {done}")?,
            Format::Machine => {
                self.emit_json(out, &json!({ "steps": steps, "monochromatic": done }))?
            }
        }
        Ok(exit::SUCCESS)
    }

    #[allow(clippy::too_many_arguments)]
    fn print_state(
        &self,
        out: &mut dyn Write,
        instance: &Instance,
        step: usize,
        mv: Option<FloodMove>,
        g: &ColoredGraph,
        zones: usize,
        r: usize,
    ) -> Result<(), CliError> {
        match mv {
            Some(mv) => writeln!(
                out,
                "step {step}: flood vertex {} with color {}: zones {zones}, radius {r}",
                mv.vertex, mv.color
            )?,
            None => writeln!(out, "step 0: zones {zones}, radius {r}")?,
        }
        if let Some(grid) = &instance.grid {
            out.write_all(grid.render(g.colors()).as_bytes())?;
        }
        Ok(())
    }

    fn verify(&self, input: &Path, moves: &Path, out: &mut dyn Write) -> CliResult {
        let instance = self.load(input)?;
        let moves = self.load_moves(moves)?;
        let optimum = min_moves(&instance.graph)?;
        let solution = Solution {
            claimed_optimum: moves.len(),
            center_zone_representative: moves.first().map_or(0, |m| m.vertex),
            moves,
        };
        let verdict = verify_solution(&instance.graph, &solution)?;
        match self.format {
            Format::Machine => self.emit_json(
                out,
                &json!({
                    "verdict": verdict,
                    "moves": solution.moves.len(),
                    "optimum": optimum,
                }),
            )?,
            Format::Plain => {
                let name = match verdict {
                    Verdict::Optimal => "optimal",
                    Verdict::FeasibleSuboptimal => "feasible_suboptimal",
                    Verdict::Infeasible => "infeasible",
                };
                writeln!(out, "verdict {name}")?;
                writeln!(out, "moves {}", solution.moves.len())?;
                writeln!(out, "optimum {optimum}")?;
            }
        }
        Ok(match verdict {
            Verdict::Optimal => exit::SUCCESS,
            Verdict::FeasibleSuboptimal => exit::SUBOPTIMAL,
            Verdict::Infeasible => exit::INFEASIBLE,
        })
    }

    fn oracle(&self, input: &Path, budget: usize, out: &mut dyn Write) -> CliResult {
        let instance = self.load(input)?;
        let start = Instant::now();
        let report = brute_force_min_moves(&instance.graph, budget)?;
        let elapsed = millis(start);
        let r = radius(&reduce(&instance.graph).0);
        match self.format {
            Format::Machine => self.emit_json(
                out,
                &json!({
                    "optimum": report.optimum,
                    "states_explored": report.states_explored,
                    "exhausted": report.exhausted,
                    "radius": r,
                    "budget": budget,
                    "time_ms": elapsed,
                }),
            )?,
            Format::Plain => {
                let bound = if report.exhausted { "" } else { " (upper bound)" };
                writeln!(out, "optimum {}{bound}", report.optimum)?;
                writeln!(out, "states {}", report.states_explored)?;
                writeln!(out, "exhausted {}", report.exhausted)?;
                writeln!(out, "radius {r}")?;
            }
        }
        Ok(exit::SUCCESS)
    }

    fn check(&self, cfg: CheckConfig, out: &mut dyn Write) -> CliResult {
        let mut lines = Vec::new();
        let mut failures = Vec::new();

        let corpus = reduced_corpus(cfg.count, 1, cfg.max_zones.max(1), cfg.seed);
        type Checker = fn(&crate::ReducedGraph) -> crate::Result<LemmaReport>;
        let suites: [(&str, Checker, usize, usize); 3] = [
            ("radius_bounds", check_radius_bounds, 1, usize::MAX),
            ("distance_bounds", check_distance_bounds, 1, DISTANCE_CHECK_LIMIT),
            ("far_witness", check_far_witness, 3, FAR_WITNESS_LIMIT),
        ];
        for (name, checker, min, max) in suites {
            let (mut graphs, mut witnesses, mut skipped) = (0, 0, 0);
            for (inst, rg) in &corpus {
                if !(min..=max).contains(&rg.zone_count()) {
                    skipped += 1;
                    continue;
                }
                let report = checker(rg)?;
                graphs += 1;
                witnesses += report.instances_checked;
                if let Some(cx) = report.counterexample {
                    failures.push(format!(
                        "{name}: instance {} (seed {}, n {}, extra {}): {:?}: {}",
                        inst.id, inst.seed, inst.n, inst.extra_edges, cx.witness, cx.detail
                    ));
                }
            }
            lines.push(json!({
                "suite": name,
                "graphs": graphs,
                "witnesses": witnesses,
                "skipped": skipped,
            }));
        }

        let (mut agreed, mut budget_hit) = (0, 0);
        for inst in graph_corpus(cfg.count, cfg.max_vertices.max(1), cfg.seed) {
            let report = brute_force_min_moves(&inst.graph, cfg.budget)?;
            if !report.exhausted {
                budget_hit += 1;
                continue;
            }
            let r = min_moves(&inst.graph)?;
            let s = solve_with(&inst.graph, SolveOptions::default())?;
            let verdict = verify_solution(&inst.graph, &s)?;
            if report.optimum != r || verdict != Verdict::Optimal {
                failures.push(format!(
                    "oracle: instance {} (seed {}, n {}, extra {}): oracle {} radius {} verdict {:?}",
                    inst.id, inst.seed, inst.n, inst.extra_edges, report.optimum, r, verdict
                ));
            } else {
                agreed += 1;
            }
        }
        lines.push(json!({
            "suite": "oracle_agreement",
            "graphs": agreed,
            "witnesses": agreed,
            "skipped": budget_hit,
        }));

        match self.format {
            Format::Machine => self.emit_json(
                out,
                &json!({ "seed": cfg.seed, "suites": lines, "failures": failures }),
            )?,
            Format::Plain => {
                writeln!(out, "# seed {}", cfg.seed)?;
                for line in &lines {
                    writeln!(
                        out,
                        "{}: {} graphs, {} witnesses, {} skipped",
                        line["suite"].as_str().unwrap_or_default(),
                        line["graphs"],
                        line["witnesses"],
                        line["skipped"]
                    )?;
                }
                for f in &failures {
                    writeln!(out, "COUNTEREXAMPLE {f}")?;
                }
                writeln!(out, "{}", if failures.is_empty() { "ok" } else { "FAILED" })?;
            }
        }
        Ok(if failures.is_empty() {
            exit::SUCCESS
        } else {
            exit::COUNTEREXAMPLE
        })
    }

    fn generate(&self, kind: &GenKind, out: &mut dyn Write) -> CliResult {
        let (text, target) = match kind {
            GenKind::Random {
                vertices,
                extra,
                colors,
                seed,
                output,
            } => {
                let g = gen_random(*vertices, *extra, *colors, *seed)?;
                let text = format!(
                    "# seed {seed} vertices {vertices} extra {extra} colors {colors}\n{}",
                    emit_graph(&g)
                );
                (text, output)
            }
            GenKind::Grid {
                rows,
                cols,
                colors,
                seed,
                output,
            } => {
                if *rows == 0 || *cols == 0 {
                    return Err(crate::Error::EmptyGraph.into());
                }
                if !(1..=10).contains(colors) {
                    return Err(crate::Error::TooManyColors {
                        color_count: *colors,
                    }
                    .into());
                }
                let grid = random_grid(*rows, *cols, *colors, *seed);
                let text = format!(
                    "# seed {seed} rows {rows} cols {cols} colors {colors}\n{}",
                    grid.render(&grid.cells)
                );
                (text, output)
            }
        };
        match target {
            Some(path) => std::fs::write(path, text).map_err(|source| CliError::File {
                path: path.display().to_string(),
                source,
            })?,
            None => out.write_all(text.as_bytes())?,
        }
        Ok(exit::SUCCESS)
    }

    fn bench(&self, sizes: &[usize], seed: u64, repeats: usize, out: &mut dyn Write) -> CliResult {
        let mut rows = Vec::new();
        for &n in sizes.iter().filter(|&&n| n > 0) {
            let grid = random_grid(n, n, 2, seed);
            let g = grid.to_graph();
            let mut best = f64::INFINITY;
            let mut optimum = 0;
            for _ in 0..repeats {
                let start = Instant::now();
                optimum = solve_with(&g, SolveOptions::default())?.claimed_optimum;
                best = best.min(millis(start));
            }
            rows.push((n, g.vertex_count(), g.edge_count(), optimum, best));
        }
        match self.format {
            Format::Machine => {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|&(n, v, e, r, ms)| {
                        json!({ "N": n, "n": v, "m": e, "radius": r, "milliseconds": ms })
                    })
                    .collect();
                self.emit_json(out, &json!({ "seed": seed, "rows": rows }))?;
            }
            Format::Plain => {
                let mut csv = format!("# seed {seed}\nN,n,m,radius,milliseconds\n");
                for (n, v, e, r, ms) in rows {
                    writeln!(csv, "{n},{v},{e},{r},{ms:.3}").unwrap();
                }
                out.write_all(csv.as_bytes())?;
            }
        }
        Ok(exit::SUCCESS)
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
