//! Reader for the ASCII polynomial grammar
//!
//! ```text
//! poly := term (('+'|'-') term)*
//! term := [integer] ('*'? var)*
//! var  := 'x' index ('^' exponent)?
//! ```
//!
//! Whitespace is ignored, a leading sign is accepted, and integer
//! coefficients are reduced modulo the characteristic.

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::Monomial;
use super::poly::{Polynomial, Ring};

/// Parsed terms before they are placed in a ring.
#[derive(Debug, Clone)]
pub struct RawPolynomial {
    pub terms: Vec<(u32, Monomial)>,
}

impl RawPolynomial {
    pub fn max_var(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.max_var()).max().unwrap_or(0)
    }

    pub fn into_ring(self, ring: &Ring) -> Result<Polynomial> {
        ring.from_terms(self.terms)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    offset: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.offset + self.pos, msg)
    }

    /// Digits, reduced modulo `p` as they are read.
    fn integer_mod(&mut self, p: u32) -> Option<u32> {
        self.skip_ws();
        let start = self.pos;
        let mut acc: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            acc = (acc * 10 + (b - b'0') as u64) % p as u64;
            self.pos += 1;
        }
        (self.pos > start).then_some(acc as u32)
    }

    fn small_integer(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err(format!("expected {what}")));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u32>()
            .map_err(|_| Error::parse(self.offset + start, format!("{what} too large")))
    }
}

/// Parses one polynomial into raw terms (coefficients reduced mod `p`).
pub fn parse_raw(text: &str, field: PrimeField) -> Result<RawPolynomial> {
    parse_raw_at(text, field, 0)
}

pub(crate) fn parse_raw_at(text: &str, field: PrimeField, offset: usize) -> Result<RawPolynomial> {
    let p = field.characteristic();
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
        offset,
    };
    let mut terms = Vec::new();
    let mut negate = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            true
        }
        Some(b'+') => {
            cur.pos += 1;
            false
        }
        None => return Err(cur.err("empty polynomial")),
        _ => false,
    };
    loop {
        cur.skip_ws();
        let term_start = cur.pos;
        let coefficient = cur.integer_mod(p);
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        loop {
            match cur.peek() {
                Some(b'*') => {
                    if coefficient.is_none() && pairs.is_empty() {
                        return Err(cur.err("'*' needs a factor on its left"));
                    }
                    cur.pos += 1;
                    if cur.peek() != Some(b'x') {
                        return Err(cur.err("expected variable after '*'"));
                    }
                }
                Some(b'x') => {}
                _ => break,
            }
            cur.pos += 1; // 'x'
            if !cur.bytes.get(cur.pos).is_some_and(|b| b.is_ascii_digit()) {
                return Err(cur.err("expected variable index after 'x'"));
            }
            let index = cur.small_integer("variable index")?;
            if index == 0 {
                return Err(cur.err("variable indices start at 1"));
            }
            let exponent = if cur.peek() == Some(b'^') {
                cur.pos += 1;
                cur.small_integer("exponent")?
            } else {
                1
            };
            pairs.push((index, exponent));
        }
        if coefficient.is_none() && pairs.is_empty() {
            return Err(Error::parse(offset + term_start, "expected a term"));
        }
        let monomial = Monomial::from_pairs(pairs).map_err(|_| cur.err("exponent overflow"))?;
        let mut c = coefficient.unwrap_or(1 % p);
        if negate {
            c = field.neg(c);
        }
        terms.push((c, monomial));
        negate = match cur.peek() {
            None => break,
            Some(b'+') => false,
            Some(b'-') => true,
            Some(other) => return Err(cur.err(format!("unexpected character '{}'", other as char))),
        };
        cur.pos += 1;
    }
    Ok(RawPolynomial { terms })
}

/// Parses `text` as a canonical polynomial of `ring`.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    parse_raw(text, ring.field)?.into_ring(ring)
}

/// Splits on any of `separators`, keeping byte offsets for diagnostics.
/// Blank pieces are skipped.
pub(crate) fn split_list<'a>(text: &'a str, separators: &[char]) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        if separators.contains(&ch) {
            out.push((start, &text[start..i]));
            start = i + ch.len_utf8();
        }
    }
    out.push((start, &text[start..]));
    out.into_iter().filter(|(_, s)| !s.trim().is_empty()).collect()
}

/// Parses a list of polynomials separated by `|`, `;` or newlines.
pub fn parse_polynomial_list(text: &str, field: PrimeField) -> Result<Vec<RawPolynomial>> {
    split_list(text, &['|', ';', '\n'])
        .into_iter()
        .map(|(offset, piece)| parse_raw_at(piece, field, offset))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u32) -> Ring {
        Ring::new(n, PrimeField::default())
    }

    #[test]
    fn reads_sum_of_products() {
        let f = parse_polynomial("x1*x2 + x3*x4", &ring(4)).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x1*x2 + x3*x4");
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_polynomial("x2*x1 - x1*x2", &ring(2)).unwrap().is_zero());
    }

    #[test]
    fn exponents_merge() {
        let f = parse_polynomial("x1^2*x1", &ring(1)).unwrap();
        assert_eq!(f.to_string(), "x1^3");
    }

    #[test]
    fn implicit_multiplication_and_coefficients() {
        let f = parse_polynomial("3x1x2 - 2 * x3 + 32004", &ring(3)).unwrap();
        assert_eq!(f.to_string(), "3*x1*x2 - 2*x3 + 1");
        let g = parse_polynomial("-x1 + x2", &ring(2)).unwrap();
        assert_eq!(g.to_string(), "-x1 + x2");
    }

    #[test]
    fn coefficients_reduce_modulo_p() {
        let r = Ring::new(1, PrimeField::new(7).unwrap());
        let f = parse_polynomial("100000000000000000000000000*x1", &r).unwrap();
        // 10^26 mod 7 = 2
        assert_eq!(f.terms()[0].0, 2);
        assert!(parse_polynomial("7*x1", &r).unwrap().is_zero());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial("x1 + + x2", &ring(2)) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial("x1 ? x2", &ring(2)),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(parse_polynomial("", &ring(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x0", &ring(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x1*", &ring(2)), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_polynomial("x1 +* x2", &ring(2)),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!(parse_polynomial("*x2", &ring(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("y1", &ring(2)), Err(Error::Parse { .. })));
    }

    #[test]
    fn variable_beyond_ring() {
        assert!(matches!(
            parse_polynomial("x1 + x5", &ring(4)),
            Err(Error::VariableOutOfRange { index: 5, nvars: 4 })
        ));
    }

    #[test]
    fn lists_split_on_bars_and_semicolons() {
        let list = parse_polynomial_list("x1*x2 + x3*x4 | x2*x3", PrimeField::default()).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list[1].max_var(), 3);
        match parse_polynomial_list("x1; x2 +", PrimeField::default()) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
    }
}
