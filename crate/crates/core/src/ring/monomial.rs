use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power product `x_{i1}^{e1} ... x_{ik}^{ek}` stored sparsely.
///
/// Entries are `(variable, exponent)` with 1-based variable indices, strictly
/// increasing by variable and with no zero exponent. The empty list is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: u32) -> Self {
        assert!(index >= 1, "variables are 1-based");
        Monomial {
            exps: vec![(index, 1)],
            degree: 1,
        }
    }

    /// Product of distinct variables, as used for square-free generators.
    pub fn square_free<I: IntoIterator<Item = u32>>(vars: I) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1))).expect("small exponents")
    }

    /// Builds a monomial from unsorted `(variable, exponent)` pairs, merging
    /// repeated variables and dropping zero exponents.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Result<Self> {
        let mut exps: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        exps.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            assert!(v >= 1, "variables are 1-based");
            match merged.last_mut() {
                Some(last) if last.0 == v => {
                    last.1 = last.1.checked_add(e).ok_or(Error::ExponentOverflow)?;
                }
                _ => merged.push((v, e)),
            }
        }
        Monomial::from_sorted(merged)
    }

    fn from_sorted(exps: Vec<(u32, u32)>) -> Result<Self> {
        let mut degree = 0u32;
        for &(_, e) in &exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { exps, degree })
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: u32) -> u32 {
        match self.exps.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// `(variable, exponent)` entries in increasing variable order.
    pub fn entries(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn max_var(&self) -> u32 {
        self.exps.last().map_or(0, |&(v, _)| v)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.checked_add(b[j].1).ok_or(Error::ExponentOverflow)?;
                    out.push((a[i].0, e));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial::from_sorted(out)
    }

    /// Product; panics on exponent overflow (see [`Monomial::checked_mul`]).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            if j == other.exps.len() || other.exps[j].0 != v || other.exps[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.exps.len());
        for &(v, e) in &other.exps {
            let r = e - self.exponent(v);
            if r > 0 {
                out.push((v, r));
            }
        }
        Some(Monomial::from_sorted(out).expect("quotient degree fits"))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial::from_sorted(out).expect("lcm degree fits")
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Product of the distinct variables of `self`.
    pub fn radical(&self) -> Monomial {
        Monomial::square_free(self.support())
    }

    /// Renames every variable `x_i` to `x_{i + offset}`.
    pub fn shift(&self, offset: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v + offset, e)).collect(),
            degree: self.degree,
        }
    }

    /// Applies an injective variable renaming.
    pub fn rename(&self, map: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (map(v), e))).expect("same degree")
    }

    /// Drops the powers of every variable with index above `max_var`.
    pub fn truncate(&self, max_var: u32) -> Monomial {
        let exps: Vec<_> = self.exps.iter().copied().filter(|&(v, _)| v <= max_var).collect();
        Monomial::from_sorted(exps).expect("smaller degree")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Admissible term orders. Both rank `x1 > x2 > ... > xN`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| revlex_tail(a, b)),
        }
    }
}

/// Pure lexicographic comparison with `x1` the largest variable.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (&a.exps, &b.exps);
    let mut i = 0;
    loop {
        match (x.get(i), y.get(i)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va != vb {
                    // the monomial carrying the smaller-index variable wins
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
        }
        i += 1;
    }
}

/// Degree tie-break of degrevlex: the monomial with the smaller exponent in
/// the last variable where they differ is the larger one.
fn revlex_tail(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (&a.exps, &b.exps);
    let (mut i, mut j) = (x.len(), y.len());
    while i > 0 && j > 0 {
        let (va, ea) = x[i - 1];
        let (vb, eb) = y[j - 1];
        match va.cmp(&vb) {
            // `a` has positive exponent in va where `b` has zero
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
            Ordering::Equal => {
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
    match (i > 0, j > 0) {
        (false, false) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (true, true) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn degrevlex_examples() {
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(ord.compare(&m(&[(1, 1), (2, 1)]), &m(&[(3, 2)])), Ordering::Greater);
        assert_eq!(
            ord.compare(&m(&[(1, 1), (2, 1)]), &m(&[(2, 1), (3, 1)])),
            Ordering::Greater
        );
        assert_eq!(ord.compare(&m(&[(1, 2)]), &m(&[(1, 1), (2, 1)])), Ordering::Greater);
        // classic case distinguishing degrevlex from deglex
        assert_eq!(ord.compare(&m(&[(1, 1), (3, 2)]), &m(&[(2, 3)])), Ordering::Less);
        assert_eq!(ord.compare(&m(&[(1, 1)]), &Monomial::one()), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.compare(&m(&[(1, 1)]), &m(&[(2, 5)])), Ordering::Greater);
        assert_eq!(
            ord.compare(&m(&[(1, 1), (3, 1)]), &m(&[(1, 1), (2, 1)])),
            Ordering::Less
        );
        assert_eq!(ord.compare(&m(&[(1, 1), (2, 1)]), &m(&[(1, 1)])), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        let a = m(&[(2, 3), (5, 1)]);
        for ord in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            assert_eq!(ord.compare(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[(1, 1), (3, 2)]);
        let b = m(&[(1, 2), (2, 1), (3, 2)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[(1, 1), (2, 1)]));
        assert_eq!(a.lcm(&m(&[(2, 4)])), m(&[(1, 1), (2, 4), (3, 2)]));
        assert!(a.is_coprime(&m(&[(2, 1), (4, 1)])));
        assert!(!a.is_coprime(&m(&[(3, 1)])));
    }

    #[test]
    fn merge_repeated_variables() {
        assert_eq!(m(&[(1, 2), (1, 1)]), m(&[(1, 3)]));
        assert_eq!(m(&[(4, 0)]), Monomial::one());
        assert_eq!(
            Monomial::from_pairs([(1, u32::MAX), (1, 1)]),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn display() {
        assert_eq!(m(&[(2, 1), (1, 3)]).to_string(), "x1^3*x2");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
