//! Independent oracles and the exhaustive checks built on them.
//!
//! [`oracle`] evaluates basis elements as explicit polynomials in
//! commuting or noncommuting variables. [`checks`] compares every closed
//! rule in the crate against those evaluations.

pub mod checks;
pub mod oracle;

pub use checks::{selftest, SuiteReport};
