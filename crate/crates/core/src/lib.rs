//! Exact solver for the 2-color Free-Flood-It game on connected graphs.
//!
//! A flood recolors one zone (a maximal connected monochromatic vertex set).
//! With two colors, the fewest floods that make a graph monochromatic equal
//! the radius of its reduced graph, and flooding one center zone over and
//! over achieves it. [`solver::solve`] computes such a sequence in O(nm).
//!
//! [`oracle`] holds an independent exhaustive search and executable checks
//! of the contraction bounds behind that result.

pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod reduced;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{apply_flood, ColoredGraph, FloodMove};
pub use metrics::{radius_and_center, Metrics};
pub use reduced::{contract, reduce, Contraction, ReducedGraph, ZoneMap};
pub use solver::{min_moves, solve, verify_solution, Solution, Verdict};

/// Color id.
pub type Color = u8;

/// Zone (reduced-graph vertex) id.
pub type ZoneId = usize;
