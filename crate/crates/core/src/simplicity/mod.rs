//! Γ-graphs over lattice windows and the window certificates built on them.

pub mod certify;
pub mod graph;

pub use certify::{certify_canonical_module, check_regular_conditions, symmetrized_monomials, Condition, SimplicityReport, Verdict};
pub use graph::{build_gamma_regular, build_gamma_singular, in_window, orbit_rep, window_points, GammaEdge, GammaGraph, GraphMode};
