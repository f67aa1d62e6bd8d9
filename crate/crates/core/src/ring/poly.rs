use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};

/// The polynomial ring `GF(p)[x1, ..., xN]` together with its term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    pub nvars: u32,
    pub field: PrimeField,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(nvars: u32, field: PrimeField) -> Self {
        Ring {
            nvars,
            field,
            order: MonomialOrder::DegRevLex,
        }
    }

    pub fn with_order(self, order: MonomialOrder) -> Self {
        Ring { order, ..self }
    }

    /// Same field and order, `extra` more variables appended at the end.
    pub fn extended(self, extra: u32) -> Self {
        Ring {
            nvars: self.nvars + extra,
            ..self
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(self.field.from_i64(c), Monomial::one())
    }

    pub fn var(&self, index: u32) -> Result<Polynomial> {
        self.monomial(Monomial::var(index))
    }

    /// The monomial as a polynomial; errors when it leaves the ring.
    pub fn monomial(&self, m: Monomial) -> Result<Polynomial> {
        self.check_monomial(&m)?;
        Ok(self.term(1, m))
    }

    fn term(&self, c: u32, m: Monomial) -> Polynomial {
        let terms = if c == 0 { Vec::new() } else { vec![(c, m)] };
        Polynomial { ring: *self, terms }
    }

    pub(crate) fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.max_var() > self.nvars {
            return Err(Error::VariableOutOfRange {
                index: m.max_var(),
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    /// Canonical polynomial from arbitrary `(coefficient, monomial)` pairs:
    /// like terms are combined, zeros dropped, and terms sorted descending.
    pub fn from_terms<I: IntoIterator<Item = (u32, Monomial)>>(&self, terms: I) -> Result<Polynomial> {
        let mut raw: Vec<(u32, Monomial)> = Vec::new();
        for (c, m) in terms {
            self.check_monomial(&m)?;
            raw.push((c % self.field.characteristic(), m));
        }
        let order = self.order;
        raw.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<(u32, Monomial)> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = self.field.add(last.0, c),
                _ => {
                    if let Some(last) = out.last() {
                        if last.0 == 0 {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|t| t.0 == 0) {
            out.pop();
        }
        Ok(Polynomial {
            ring: *self,
            terms: out,
        })
    }
}

/// Sparse polynomial in canonical form: nonzero coefficients, monomials
/// strictly decreasing in the ring's order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(u32, Monomial)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(u32, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<(u32, &Monomial)> {
        self.terms.first().map(|(c, m)| (*c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|(c, _)| *c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }

    pub fn max_var(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.max_var()).max().unwrap_or(0)
    }

    /// Single-term polynomial with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(_, m)] => Some(m),
            _ => None,
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)));
        }
        Ok(())
    }

    /// Re-embeds into another ring over the same field (for example with an
    /// extra variable), re-sorting the terms under the target order.
    pub fn to_ring(&self, ring: Ring) -> Result<Polynomial> {
        if ring.field != self.ring.field {
            return Err(Error::RingMismatch("different coefficient fields".into()));
        }
        ring.from_terms(self.terms.iter().cloned())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.combine(other, 1, &Monomial::one()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let minus_one = self.ring.field.neg(1);
        Ok(self.combine(other, minus_one, &Monomial::one()))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.ring.field.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        let f = self.ring.field;
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(a, m)| (f.mul(*a, c), m.clone())).collect(),
        }
    }

    /// Multiplication by `c * m`; monomial order is multiplicative so the term
    /// order is preserved.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Result<Polynomial> {
        self.ring.check_monomial(m)?;
        let f = self.ring.field;
        let c = c % f.characteristic();
        if c == 0 {
            return Ok(self.ring.zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, t) in &self.terms {
            terms.push((f.mul(*a, c), t.checked_mul(m)?));
        }
        Ok(Polynomial { ring: self.ring, terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut acc = self.ring.zero();
        for (c, m) in &other.terms {
            for (_, t) in &self.terms {
                t.checked_mul(m)?;
            }
            acc = acc.combine(self, *c, m);
        }
        Ok(acc)
    }

    /// `self + c * m * other`, merging the two sorted term lists.
    pub(crate) fn combine(&self, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        let f = self.ring.field;
        let order = self.ring.order;
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut rhs = other.terms.iter().map(|(a, t)| (f.mul(*a, c), t.mul(m))).peekable();
        let mut lhs = self.terms.iter().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap().clone()),
                (None, Some(_)) => out.push(rhs.next().unwrap()),
                (Some((a, s)), Some((b, t))) => match order.compare(s, t) {
                    Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                    Ordering::Less => out.push(rhs.next().unwrap()),
                    Ordering::Equal => {
                        let sum = f.add(*a, *b);
                        if sum != 0 {
                            out.push((sum, s.clone()));
                        }
                        lhs.next();
                        rhs.next();
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(u32, Monomial)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Wraps terms that are already canonical for `ring`.
    pub(crate) fn from_canonical(ring: Ring, terms: Vec<(u32, Monomial)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.order.compare(&w[0].1, &w[1].1).is_gt()));
        debug_assert!(terms.iter().all(|(c, _)| *c != 0));
        Polynomial { ring, terms }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().filter(|(_, m)| keep(m)).cloned().collect(),
        }
    }

    /// Applies `x_i -> x_{i+offset}` inside a ring large enough to hold the
    /// shifted variables.
    pub fn shift(&self, offset: u32, ring: Ring) -> Result<Polynomial> {
        ring.from_terms(self.terms.iter().map(|(c, m)| (*c, m.shift(offset))))
    }

    /// Applies the variable renaming `map` (must be injective on the support).
    pub fn rename(&self, map: impl Fn(u32) -> u32) -> Result<Polynomial> {
        self.ring
            .from_terms(self.terms.iter().map(|(c, m)| (*c, m.rename(&map))))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let s = self.ring.field.symmetric(*c);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: u32) -> Ring {
        Ring::new(n, PrimeField::default())
    }

    fn mono(vars: &[u32]) -> Monomial {
        Monomial::from_pairs(vars.iter().map(|&v| (v, 1))).unwrap()
    }

    #[test]
    fn subtraction_cancels() {
        let r = ring(4);
        let a = r.monomial(mono(&[1, 2])).unwrap();
        let b = r.monomial(mono(&[3, 4])).unwrap();
        let f = a.add(&b).unwrap();
        assert_eq!(f.sub(&b).unwrap(), a);
        assert!(f.add(&f.neg()).unwrap().is_zero());
    }

    #[test]
    fn multiplication_by_variable() {
        let r = ring(4);
        let f = r.monomial(mono(&[1, 2])).unwrap().add(&r.var(4).unwrap()).unwrap();
        let g = r.var(3).unwrap().mul(&f).unwrap();
        let expected = r
            .monomial(mono(&[1, 2, 3]))
            .unwrap()
            .add(&r.monomial(mono(&[3, 4])).unwrap())
            .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring(3).var(1).unwrap();
        let b = ring(4).var(1).unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn out_of_range_variable() {
        assert!(matches!(
            ring(2).var(3),
            Err(Error::VariableOutOfRange { index: 3, nvars: 2 })
        ));
    }

    #[test]
    fn normalization_combines_like_terms() {
        let r = ring(3);
        let p = r
            .from_terms([(5, mono(&[2])), (3, mono(&[1])), (32000, mono(&[1])), (4, mono(&[2]))])
            .unwrap();
        assert_eq!(p.terms(), &[(9, mono(&[2]))]);
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let r = ring(3);
        let p = r
            .from_terms([(1, mono(&[1, 2])), (32002, mono(&[3])), (2, Monomial::one())])
            .unwrap();
        assert_eq!(p.to_string(), "x1*x2 - x3 + 2");
        assert_eq!(r.zero().to_string(), "0");
    }
}
