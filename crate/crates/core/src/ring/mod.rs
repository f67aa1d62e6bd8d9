//! Exact arithmetic: prime-field scalars, sparse monomials, term orders and
//! canonical polynomials.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{PrimeField, DEFAULT_PRIME};
pub use monomial::{lex_cmp, Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list, parse_raw, RawPolynomial};
pub use poly::{Polynomial, Ring};
