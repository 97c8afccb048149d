//! Spectral lower bounds for the distance-t chromatic number of a
//! graph, with exact closed-form machinery for hypercubes and Lee
//! graphs, two linear-programming bound optimizers, a number-theoretic
//! perfect-Lee-code existence test, and brute-force oracles that
//! validate every bound at desk scale.
//!
//! The pieces fit together like this:
//!
//! * [`graph`] builds the families (cycles, hypercubes, Lee graphs,
//!   Cartesian products, graph powers) and their metrics;
//! * [`spectrum`] produces adjacency spectra, closed-walk counts and
//!   walk-regularity checks;
//! * [`bounds`] evaluates Ratio-type certificates and every closed-form
//!   bound;
//! * [`lp`] optimizes the bounds with a self-contained simplex;
//! * [`leecode`] decides when -1 is a Lee-graph eigenvalue and when
//!   perfect minimum-distance-3 Lee codes exist;
//! * [`oracle`] computes exact chromatic/independence numbers by
//!   branch and bound, validating everything above.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod leecode;
pub mod lp;
pub mod oracle;
pub mod poly;
pub mod spectrum;

pub use bounds::{
    chi2_closed_general, chi2_closed_regular, chi3_closed_regular, hypercube_exact_range,
    hypercube_t45_bound, lee_chi2_theorem_bound, ngo_bounds, BoundMethod, BoundReport, NgoBounds,
    RatioCertificate,
};
pub use error::{Error, Result};
pub use graph::{
    all_pairs_distances, build_cycle, build_hypercube, build_lee_graph, cartesian_product,
    graph_power, lee_distance, Graph, LeeParams, VertexLabels,
};
pub use leecode::{
    code_min_distance, factorize, independent_set_to_code, is_perfect_code, minus_one_is_eigenvalue,
    minus_one_threshold, perfect_code_exists, w_prime_membership, Factorization, LeeCode,
    PerfectCodeReport, PerfectionReport,
};
pub use lp::{
    lp_general_ratio, lp_general_ratio_with_spectrum, lp_minor_bound, minor_polynomial,
    solve_lp, GeneralRatioOutcome, LpProblem, LpSolution, LpStatus, MinorPolynomial,
};
pub use oracle::{
    alpha_t_exact, chi_t_exact, exact_chromatic_number, exact_independence_number, greedy_chi_upper,
    verify_coloring, verify_independent_set, ColoringWitness, SearchBudget, DEFAULT_BUDGET_SECS,
};
pub use poly::Polynomial;
pub use spectrum::{
    cycle_spectrum, hypercube_spectrum, hypercube_walk_count, is_partially_walk_regular,
    lee_spectrum, numeric_spectrum, walk_diagonal, Spectrum, WalkDiagonal, DEFAULT_NUMERIC_TOL,
};

/// Shared absolute tolerance for eigenvalue threshold comparisons and
/// for absorbing float dust before integer rounding.
pub(crate) const FLOAT_DUST: f64 = 1e-9;
