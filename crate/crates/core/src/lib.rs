//! Exact-arithmetic kernel for h(x)-Fibonacci and h(x)-Lucas polynomials.
//!
//! The crate is organized around four layers:
//!
//! - [`polynomial`]: dense univariate polynomials over `BigInt`, with a
//!   small text parser and exact division;
//! - [`families`]: the complete F_{h,n} / L_{h,n} families, by recurrence
//!   and by explicit formula;
//! - [`incomplete`]: the incomplete variants F^l / L^l, their closed-form
//!   special cases, and the full identity catalog with grid verification;
//! - [`series`]: truncated power series in t, rational generating-function
//!   expansion, and closed-form-vs-definition comparison.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod families;
pub mod incomplete;
pub mod polynomial;
pub mod series;

pub use families::{fib, fib_explicit, lucas, lucas_explicit, FamilyParams};
pub use incomplete::identity::{
    identity_sides, verify_identity_range, Counterexample, IdentityArgs, IdentityId,
    IdentityReport, Status,
};
pub use incomplete::{
    fib_incomplete, fib_incomplete_extended, fib_incomplete_special, lucas_incomplete,
    lucas_incomplete_extended, lucas_incomplete_special, IncompleteIndex, IndexError, Kind,
    Special,
};
pub use polynomial::{binomial, NotDivisible, ParseError, Polynomial};
pub use series::{
    compare_gf_to_sequence, expand_negative_binomial, gf_fib_incomplete_closed,
    gf_lucas_incomplete_closed, solve_nonhomogeneous_gf, GfComparison, GfSpec, LucasGfVariant,
    NotAUnit, PolySeries,
};
