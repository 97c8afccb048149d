//! Linear programming layer: a self-contained dense simplex plus the
//! two bound-optimization programs built on it.

pub mod exact;
pub mod minor;
pub mod ratio;
pub mod solver;

pub use minor::{lp_minor_bound, minor_polynomial, minor_polynomial_problem, MinorPolynomial};
pub use ratio::{general_ratio_problem, lp_general_ratio, lp_general_ratio_with_spectrum, GeneralRatioOutcome};
pub use solver::{solve_lp, solution_is_feasible, Constraint, LpProblem, LpSolution, LpStatus, Relation, Sense};
