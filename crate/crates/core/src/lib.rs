//! Arithmetical rank certificates for path ideals.
//!
//! The crate builds the path ideals `I_t(L_n)`, produces explicit generating
//! sets up to radical following the block / padding / leftover construction,
//! certifies each generating set with exact Groebner computations over a prime
//! field, and computes projective dimensions independently through Hochster's
//! formula.

pub mod cli;
pub mod error;
pub mod groebner;
pub mod hochster;
pub mod ideal;
pub mod paths;
pub mod ring;

pub use error::{BudgetExceeded, Error, Result};
