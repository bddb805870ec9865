//! Exact rational arithmetic and linear programming.
//!
//! Everything here works over [`Rat`], an arbitrary-precision rational kept in
//! lowest terms. [`lp_solve`] is a dense two-phase simplex using Bland's rule;
//! [`lp_enumerate_basic`] is an independent brute-force oracle over basic
//! solutions, meant for cross-checking the simplex on small programs.

mod basic;
pub mod linalg;
mod lp;
mod rat;
mod simplex;

pub use basic::{lp_enumerate_basic, EnumeratedOutcome, ENUMERATION_LIMIT};
pub use lp::{Constraint, LinearProgram, LpOutcome, Relation, Sense, VarBound};
pub use rat::{format_rat_list, parse_rat, rat, Rat};
pub use simplex::lp_solve;
