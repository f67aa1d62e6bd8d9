//! Monomial ideals and the radical-equality certifier.
//!
//! A square-free monomial ideal `M` is radical, so `sqrt(F) = M` holds exactly
//! when every `f` in `F` lies in `M` (term-wise divisibility) and every
//! generator of `M` lies in `sqrt(F)` (one Rabinowitsch Groebner run each).

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget};
use crate::ring::parse::{parse_raw_at, split_list};
use crate::ring::{lex_cmp, parse_polynomial_list, Monomial, Polynomial, PrimeField, Ring};

/// Minimally generated monomial ideal. Generators are sorted descending in
/// lex order, so path ideals print as `x1*x2; x2*x3; ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: u32,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `monomials` inside `nvars` variables.
    pub fn new(nvars: u32, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = monomials.iter().find(|m| m.max_var() > nvars) {
            return Err(Error::VariableOutOfRange {
                index: m.max_var(),
                nvars,
            });
        }
        let mut ideal = minimalize(monomials);
        ideal.nvars = nvars;
        Ok(ideal)
    }

    pub fn zero(nvars: u32) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(Monomial::is_square_free)
    }

    /// Same generators in a ring with at least `nvars` variables.
    pub fn with_nvars(&self, nvars: u32) -> Result<Self> {
        MonomialIdeal::new(nvars, self.generators.clone())
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Sorted union of the generator supports.
    pub fn support(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self.generators.iter().flat_map(|g| g.support()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn to_polynomials(&self, ring: &Ring) -> Result<Vec<Polynomial>> {
        self.generators.iter().map(|g| ring.monomial(g.clone())).collect()
    }

    /// Applies the injective renaming `map` to every generator.
    pub fn rename(&self, nvars: u32, map: impl Fn(u32) -> u32) -> Result<Self> {
        MonomialIdeal::new(nvars, self.generators.iter().map(|g| g.rename(&map)).collect())
    }

    /// Reads the ideal text format: generators separated by `;` (commas and
    /// newlines are accepted too), optionally wrapped in parentheses. With
    /// `nvars = None` the ring is sized by the largest variable index.
    pub fn parse(text: &str, nvars: Option<u32>) -> Result<Self> {
        let trimmed = text.trim();
        let (body, base) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(inner) => (inner, text.find('(').unwrap() + 1),
            None => (text, 0),
        };
        let mut monomials = Vec::new();
        for (offset, piece) in split_list(body, &[';', ',', '\n']) {
            let raw = parse_raw_at(piece, PrimeField::default(), base + offset)?;
            let m = match raw.terms.as_slice() {
                [(c, m)] if *c != 0 => m.clone(),
                _ => return Err(Error::NotMonomial(piece.trim().to_string())),
            };
            monomials.push(m);
        }
        let needed = monomials.iter().map(Monomial::max_var).max().unwrap_or(0);
        match nvars {
            Some(n) => MonomialIdeal::new(n, monomials),
            None => MonomialIdeal::new(needed, monomials),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Minimal generating set of the ideal spanned by `monomials`.
pub fn minimalize(monomials: Vec<Monomial>) -> MonomialIdeal {
    let mut gens = monomials;
    // divisors have degree at most their multiples, so a degree sweep suffices
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| lex_cmp(b, a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| lex_cmp(b, a));
    let nvars = kept.iter().map(Monomial::max_var).max().unwrap_or(0);
    MonomialIdeal {
        nvars,
        generators: kept,
    }
}

/// `A + B`, living in the larger of the two rings.
pub fn ideal_sum(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    let mut gens = a.generators.clone();
    gens.extend(b.generators.iter().cloned());
    let mut sum = minimalize(gens);
    sum.nvars = a.nvars.max(b.nvars);
    sum
}

/// Membership in a monomial ideal: every term must be divisible by a generator.
pub fn monomial_ideal_contains(f: &Polynomial, ideal: &MonomialIdeal) -> bool {
    f.terms().iter().all(|(_, m)| ideal.contains_monomial(m))
}

/// Decides `f` in `sqrt(F)` by testing `1` in `F + (1 - z f)` with a fresh
/// last variable `z`.
pub fn radical_membership(f: &Polynomial, generators: &[Polynomial], budget: Budget) -> Result<bool> {
    let ring = *f.ring();
    for g in generators {
        if *g.ring() != ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", ring, g.ring())));
        }
    }
    if f.is_zero() {
        return Ok(true);
    }
    let big = ring.extended(1);
    let z = big.var(big.nvars)?;
    let mut system: Vec<Polynomial> = generators.iter().map(|g| g.to_ring(big)).collect::<Result<_>>()?;
    let zf = z.mul(&f.to_ring(big)?)?;
    system.push(big.one().sub(&zf)?);
    Ok(buchberger(&system, budget)?.is_unit_ideal())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// `f` lies in the monomial ideal.
    Forward,
    /// A generator lies in the radical of the polynomial system.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckResult {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped(budget)")]
    SkippedBudget,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckResult::Pass => "pass",
            CheckResult::Fail => "fail",
            CheckResult::SkippedBudget => "skipped(budget)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub kind: CheckKind,
    pub target: String,
    pub result: CheckResult,
}

/// Transcript of a radical-equality certification. `checks` lists the
/// forward checks in input order followed by the backward checks in generator
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalEqualityReport {
    pub verdict: bool,
    pub checks: Vec<CheckRecord>,
}

impl RadicalEqualityReport {
    pub fn forward(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Forward)
    }

    pub fn backward(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Backward)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.result == CheckResult::Fail)
    }

    /// Some backward check ran out of Groebner budget.
    pub fn budget_exhausted(&self) -> bool {
        self.checks.iter().any(|c| c.result == CheckResult::SkippedBudget)
    }
}

impl fmt::Display for RadicalEqualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let kind = match c.kind {
                CheckKind::Forward => "forward ",
                CheckKind::Backward => "backward",
            };
            writeln!(f, "{kind} {:<16} {}", c.result.to_string(), c.target)?;
        }
        write!(f, "verdict: {}", if self.verdict { "pass" } else { "fail" })
    }
}

/// Certifies `sqrt(polys) = ideal` for a square-free monomial ideal.
///
/// Backward checks run in parallel; a check that exhausts its Groebner budget
/// is recorded as `skipped(budget)` and makes the verdict false.
pub fn verify_radical_equality(
    ring: &Ring,
    polys: &[Polynomial],
    ideal: &MonomialIdeal,
    budget: Budget,
) -> Result<RadicalEqualityReport> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree(ideal.to_string()));
    }
    for f in polys {
        if f.ring() != ring {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", ring, f.ring())));
        }
    }
    let targets = ideal.to_polynomials(ring)?;

    let mut checks: Vec<CheckRecord> = polys
        .iter()
        .map(|f| CheckRecord {
            kind: CheckKind::Forward,
            target: f.to_string(),
            result: if monomial_ideal_contains(f, ideal) {
                CheckResult::Pass
            } else {
                CheckResult::Fail
            },
        })
        .collect();

    let backward: Vec<Result<CheckRecord>> = targets
        .par_iter()
        .map(|m| {
            let result = match radical_membership(m, polys, budget) {
                Ok(true) => CheckResult::Pass,
                Ok(false) => CheckResult::Fail,
                Err(Error::Budget(_)) => CheckResult::SkippedBudget,
                Err(e) => return Err(e),
            };
            Ok(CheckRecord {
                kind: CheckKind::Backward,
                target: m.to_string(),
                result,
            })
        })
        .collect();
    for record in backward {
        checks.push(record?);
    }
    let verdict = checks.iter().all(|c| c.result == CheckResult::Pass);
    Ok(RadicalEqualityReport { verdict, checks })
}

/// Text front end of [`verify_radical_equality`]: `gens` is a polynomial
/// list (`|`, `;` or newline separated), `ideal` a monomial ideal. The ring
/// has as many variables as either side mentions.
pub fn verify_text(gens: &str, ideal: &str, field: PrimeField, budget: Budget) -> Result<RadicalEqualityReport> {
    let raw = parse_polynomial_list(gens, field)?;
    let ideal = MonomialIdeal::parse(ideal, None)?;
    let nvars = raw.iter().map(|f| f.max_var()).max().unwrap_or(0).max(ideal.nvars());
    let ring = Ring::new(nvars, field);
    let polys = raw
        .into_iter()
        .map(|f| f.into_ring(&ring))
        .collect::<Result<Vec<_>>>()?;
    verify_radical_equality(&ring, &polys, &ideal.with_nvars(nvars)?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_polynomial;

    fn ring(n: u32) -> Ring {
        Ring::new(n, PrimeField::default())
    }

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text, None).unwrap()
    }

    fn polys(texts: &[&str], r: &Ring) -> Vec<Polynomial> {
        texts.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    #[test]
    fn minimalize_examples() {
        let m = minimalize(vec![Monomial::var(1), Monomial::square_free([1, 2])]);
        assert_eq!(m.generators(), &[Monomial::var(1)]);
        assert_eq!(ideal("x1*x2; x2*x3").len(), 2);
        assert!(minimalize(vec![]).is_zero());
        assert_eq!(ideal("x1^2; x1^3*x2; x1").to_string(), "x1");
    }

    #[test]
    fn ideal_text_round_trip() {
        let m = ideal("(x1x2; x1x3; x4x5)");
        assert_eq!(m.to_string(), "x1*x2; x1*x3; x4*x5");
        assert_eq!(MonomialIdeal::parse(&m.to_string(), None).unwrap(), m);
        assert!(matches!(
            MonomialIdeal::parse("x1 + x2", None),
            Err(Error::NotMonomial(_))
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1; x7", Some(4)),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1; x2 *", None),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn sum_examples() {
        let i = ideal("x1*x2; x1*x3; x4*x5");
        let j = ideal("x1");
        let s = ideal_sum(&i, &j);
        assert_eq!(s.to_string(), "x1; x4*x5");
        assert_eq!(s.nvars(), 5);
        assert_eq!(ideal_sum(&i, &MonomialIdeal::zero(5)), i);
        assert_eq!(ideal_sum(&j, &j), j);
    }

    #[test]
    fn monomial_membership_examples() {
        let r = ring(4);
        let m = ideal("x1*x2; x3*x4");
        assert!(monomial_ideal_contains(
            &parse_polynomial("x1*x2 + x3*x4", &r).unwrap(),
            &m
        ));
        assert!(!monomial_ideal_contains(&parse_polynomial("x2*x3", &r).unwrap(), &m));
        assert!(monomial_ideal_contains(&r.zero(), &m));
    }

    #[test]
    fn radical_membership_examples() {
        let b = Budget::default();
        let r = ring(4);
        let x1 = parse_polynomial("x1", &r).unwrap();
        assert!(radical_membership(&x1, &polys(&["x1^3"], &r), b).unwrap());
        let x1x2 = parse_polynomial("x1*x2", &r).unwrap();
        assert!(radical_membership(&x1x2, &polys(&["x1*x2 + x3*x4", "x2*x3"], &r), b).unwrap());
        let x2x3 = parse_polynomial("x2*x3", &r).unwrap();
        assert!(!radical_membership(&x2x3, &polys(&["x1*x2 + x3*x4"], &r), b).unwrap());
        assert!(radical_membership(&r.zero(), &[], b).unwrap());
        assert!(!radical_membership(&r.one(), &[], b).unwrap());
    }

    #[test]
    fn block_pair_certificate() {
        let r = ring(4);
        let m = ideal("x1*x2; x2*x3; x3*x4");
        let report =
            verify_radical_equality(&r, &polys(&["x1*x2 + x3*x4", "x2*x3"], &r), &m, Budget::default()).unwrap();
        assert!(report.verdict);
        assert_eq!(report.forward().count(), 2);
        assert_eq!(report.backward().count(), 3);

        let report = verify_radical_equality(&r, &polys(&["x1*x2 + x3*x4"], &r), &m, Budget::default()).unwrap();
        assert!(!report.verdict);
        let failed: Vec<_> = report.failures().map(|c| c.target.as_str()).collect();
        // a single hypersurface misses every generator, x2*x3 included
        assert!(failed.contains(&"x2*x3"));
        assert_eq!(failed.len(), 3);
    }

    #[test]
    fn identity_substitution_passes() {
        let r = ring(5);
        let m = ideal("x1*x2; x1*x3; x4*x5");
        let report = verify_radical_equality(&r, &m.to_polynomials(&r).unwrap(), &m, Budget::default()).unwrap();
        assert!(report.verdict);
    }

    #[test]
    fn rejects_non_square_free_targets() {
        let r = ring(2);
        let m = ideal("x1^2");
        assert!(matches!(
            verify_radical_equality(&r, &[], &m, Budget::default()),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_recorded_not_fatal() {
        let r = ring(4);
        let m = ideal("x1*x2; x2*x3; x3*x4");
        let tiny = Budget {
            max_pair_reductions: 0,
            max_degree: 60,
        };
        let report = verify_radical_equality(&r, &polys(&["x1*x2 + x3*x4", "x2*x3"], &r), &m, tiny).unwrap();
        assert!(!report.verdict);
        assert!(report.budget_exhausted());
    }

    #[test]
    fn forward_failure_flips_verdict() {
        let r = ring(4);
        let m = ideal("x1*x2; x3*x4");
        let report = verify_radical_equality(&r, &polys(&["x1*x2", "x3*x4 + x2"], &r), &m, Budget::default()).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.forward().filter(|c| c.result == CheckResult::Fail).count(), 1);
    }
}
