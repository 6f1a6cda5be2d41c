//! Exact computer algebra for quasisymmetric powersum bases.
//!
//! The crate is organised bottom-up:
//!
//! * [`combinat`] holds compositions, set compositions, partitions, the
//!   pluggable total orders and every coefficient formula.
//! * [`fillings`] enumerates the matrix fillings whose column readings
//!   realise the powersum expansions.
//! * [`ribbon`] builds descent ribbons and counts their standard fillings,
//!   which gives the powersum to fundamental change of basis.
//! * [`qsym`], [`nsym`] and [`ncqsym`] are the algebra layers.
//! * [`verify`] contains brute-force oracles that never call into the
//!   closed formulas they are used to check.
//!
//! All arithmetic is exact; coefficients are arbitrary precision rationals.

pub mod combinat;
pub mod error;
pub mod fillings;
pub mod linear;
pub mod ncqsym;
pub mod nsym;
pub mod qsym;
pub mod ribbon;
pub mod verify;

pub use combinat::{Composition, IntOrder, Partition, SetComposition, SetOrder, SetPartition};
pub use error::{Error, Result};
pub use linear::{LinComb, Rational};
