//! Independent ground truth: exhaustive game search and executable checks
//! of the contraction lemmas.

mod lemmas;
mod paths;
mod state_space;

pub use lemmas::{
    check_distance_bounds, check_far_witness, check_radius_bounds, Counterexample, LemmaId,
    LemmaReport, Witness, DISTANCE_CHECK_LIMIT, FAR_WITNESS_LIMIT,
};
pub use state_space::{brute_force_min_moves, StateSpaceReport, MAX_ORACLE_VERTICES};
