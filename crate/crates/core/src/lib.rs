//! Exact best-possible bounds for the probability of a union of events.
//!
//! Given probabilities `b_S` for the intersections `B_S` of some subsets `S` of
//! `n` events, the tightest interval for the probability of `B_1 ∪ … ∪ B_n` is
//! the range of `1 − x_∅` over all atom distributions `x` on the `2^n` Venn
//! atoms that reproduce every given `b_S`. This crate builds that linear
//! program, solves it exactly over the rationals, and returns the interval
//! together with atom distributions that attain both endpoints.
//!
//! Around the solver sit the supporting pieces:
//!
//! * [`numerics`]: exact rationals, a two-phase simplex with Bland's rule, and a
//!   brute-force basic-solution enumerator used to cross-check it.
//! * [`instance`]: set families, instances, atom distributions and their JSON
//!   documents.
//! * [`hailperin`]: feasibility, tight union bounds and realizations at a given
//!   union probability.
//! * [`polytope`]: vertex representations of the Venn, correlation and union
//!   polytopes, their dimensions and vertex counts, and hull membership.
//! * [`classic`]: inclusion–exclusion, the Boole–Fréchet interval and
//!   Bonferroni truncations.
//! * [`reductions`]: the fractional-colouring gadget and the clique-constrained
//!   dual chain, as executable transforms.
//! * [`mining`]: empirical instances and Apriori frequent sets from 0/1 data.
//! * [`cli`]: the `boole` command-line front end.
//!
//! ```
//! use boole::instance::{parse_instance};
//! use boole::hailperin::union_bounds;
//! use boole::numerics::rat;
//!
//! let inst = parse_instance(r#"{"n": 2, "constraints": [
//!     {"set": [1], "p": "1/2"}, {"set": [2], "p": "1/3"}]}"#).unwrap();
//! let bounds = union_bounds(&inst).unwrap();
//! assert_eq!(bounds.interval.lo, rat(1, 2));
//! assert_eq!(bounds.interval.hi, rat(5, 6));
//! ```

pub mod classic;
pub mod cli;
mod error;
pub mod hailperin;
pub mod instance;
pub mod mining;
pub mod numerics;
pub mod polytope;
pub mod reductions;

pub use error::{Error, Result};
pub use numerics::Rat;
