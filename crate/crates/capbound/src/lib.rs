//! Bounds on the maximum size of m-general sets (generalized caps) in AG(n,q).
//!
//! An m-general set is a point set in the affine space AG(n,q) in which no m
//! points lie on a common (m-2)-flat, i.e. every m-point subset is in general
//! position. A cap is the m = 3 case. This crate provides:
//!
//! * exact arithmetic in small finite fields F_{p^k} and finite-field linear
//!   algebra ([`field`]),
//! * points of AG(n,q), general-position tests and the greedy counting lower
//!   bound ([`geometry`]),
//! * the distinctness indicator T and the annihilator-counting polynomial G
//!   on tuples from a point set, with two independent evaluation routes and
//!   the rank base cases ([`indicator`]),
//! * exact counts of bounded-coordinate, bounded-sum integer tuples via
//!   generating-function coefficients, plus the saddle-point estimate
//!   ([`counting`]),
//! * the analytic engine minimizing h_q(t) = t^(-(q-1)/m) (1-t^q)/(1-t),
//!   the exponential upper bound 2m + m h_min^n on m-general sets and the
//!   growth-rate tables derived from it ([`bounds`]),
//! * exact backtracking and randomized greedy searches for maximal m-general
//!   sets in tiny spaces, to sandwich the analytic bound ([`search`]),
//! * named verification suites bundling the invariant checks ([`suites`]).
//!
//! The crate is `no_std` (with `alloc`); all IO, CLI and file formats live in
//! the companion `capbound-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod counting;
pub mod field;
pub mod geometry;
pub mod indicator;
pub(crate) mod rng;
pub mod search;
pub mod suites;

pub use bounds::{
    asymptotic_table, h_q, minimize_h, mu_table, mu_upper, r_q, round_down_3dp, round_up_3dp,
    solve_alpha, theorem_bound, AsymptoticRow, BoundError, BoundReport, TableCell,
};
pub use counting::{
    g_rank_upper_bound, is_prime_power, lambda_exact, saddle_bound, CountingError, LambdaQuery,
};
pub use field::{matrix_rank, nullspace_dim, FieldElement, FieldError, FieldSpec, FqMatrix};
pub use geometry::{
    enumerate_points, in_general_position, is_m_general, trivial_lower_bound, GeometryError, Point,
    PointSet,
};
pub use indicator::{
    char2_odd_identity, check_t_equals_g, eval_g_direct, eval_g_rank, eval_t,
    flatten_rank_lower_bound, t2_rank_formula, CheckMode, CheckVerdict, FunctionTable,
    IndicatorError,
};
pub use search::{
    greedy_m_general, max_m_general_exact, sandwich_check, RngConfig, SandwichReport, SearchError,
    SearchResult,
};
pub use suites::{run_suite, SuiteCheck, SuiteReport};
