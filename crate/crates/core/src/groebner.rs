//! Buchberger's algorithm with the normal selection strategy, the coprime
//! and chain criteria, and a final reduction to the unique reduced basis.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use crate::error::{BudgetExceeded, Error, Result};
use crate::ring::{lex_cmp, Monomial, Polynomial, Ring};

/// Environment variable overriding the pair-reduction budget.
pub const BUDGET_ENV: &str = "ARA_PATH_BUDGET";

/// Resource caps for one Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pair_reductions: usize,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 50_000,
            max_degree: 60,
        }
    }
}

impl Budget {
    /// Defaults, with the pair budget taken from `ARA_PATH_BUDGET` when set.
    pub fn from_env() -> Self {
        let mut budget = Budget::default();
        if let Some(n) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            budget.max_pair_reductions = n;
        }
        budget
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub skipped_coprime: usize,
    pub skipped_chain: usize,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
    reduced: bool,
    pub stats: GbStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(Polynomial::is_unit)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.basis.is_empty() {
            return Ok(f.clone());
        }
        normal_form(f, &self.basis)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Exhaustive check that every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        s_pairs_reduce_to_zero(&self.basis)
    }
}

fn check_ring(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch(format!("{:?} vs {:?}", f.ring(), g.ring())));
    }
    Ok(())
}

fn reduce_by(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let ring = *f.ring();
    let field = ring.field;
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some((c, m)) = rest.leading_term() {
        // shortest applicable divisor first, list order breaks ties
        let divisor = divisors
            .iter()
            .filter(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
            .min_by_key(|g| g.len());
        match divisor {
            Some(g) => {
                let (gc, gm) = g.leading_term().expect("nonzero divisor");
                let q = gm.quotient_of(m).expect("divides");
                let factor = field.neg(field.div(c, gc).expect("nonzero leading coefficient"));
                rest = rest.combine(g, factor, &q);
            }
            None => remainder.push(rest.pop_leading().expect("nonzero")),
        }
    }
    Polynomial::from_canonical(ring, remainder)
}

/// Remainder of multivariate division of `f` by `divisors`. Among divisors
/// whose leading monomial fits, the one with the fewest terms is used. When
/// `divisors` is a Groebner basis the result is the unique normal form.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    for g in divisors {
        check_ring(f, g)?;
    }
    let refs: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    Ok(reduce_by(f, &refs))
}

/// `(lcm/lt(f)) f - (lcm/lt(g)) g` with both leading terms made monic.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_ring(f, g)?;
    let (fc, fm) = f.leading_term().ok_or(Error::ZeroPolynomial)?;
    let (gc, gm) = g.leading_term().ok_or(Error::ZeroPolynomial)?;
    Ok(s_poly_unchecked(f, fc, fm, g, gc, gm))
}

fn s_poly_unchecked(f: &Polynomial, fc: u32, fm: &Monomial, g: &Polynomial, gc: u32, gm: &Monomial) -> Polynomial {
    let field = f.ring().field;
    let lcm = fm.lcm(gm);
    let uf = fm.quotient_of(&lcm).expect("lcm multiple");
    let ug = gm.quotient_of(&lcm).expect("lcm multiple");
    let a = field.inv(fc).expect("nonzero");
    let b = field.neg(field.inv(gc).expect("nonzero"));
    f.ring().zero().combine(f, a, &uf).combine(g, b, &ug)
}

/// Exhaustive S-pair criterion over a finite list of polynomials.
pub fn s_pairs_reduce_to_zero(basis: &[Polynomial]) -> bool {
    let refs: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..refs.len() {
        for j in (i + 1)..refs.len() {
            let (fc, fm) = refs[i].leading_term().unwrap();
            let (gc, gm) = refs[j].leading_term().unwrap();
            let s = s_poly_unchecked(refs[i], fc, fm, refs[j], gc, gm);
            if !reduce_by(&s, &refs).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Selection key: lcm degree, then the lcm in lex, then the indices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PairKey {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| lex_cmp(&self.lcm, &other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct PairQueue {
    queue: BTreeSet<PairKey>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn push(&mut self, basis: &[Polynomial], i: usize, j: usize) {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        let lcm = basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap());
        self.pending.insert((i, j));
        self.queue.insert(PairKey {
            degree: lcm.degree(),
            lcm,
            i,
            j,
        });
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Computes the reduced Groebner basis of the ideal generated by `generators`.
///
/// Fails with [`Error::Budget`] when more than `budget.max_pair_reductions`
/// S-pairs would be reduced or a new basis element exceeds the degree cap.
pub fn buchberger(generators: &[Polynomial], budget: Budget) -> Result<GroebnerBasis> {
    let ring = match generators.first() {
        Some(f) => *f.ring(),
        None => {
            return Err(Error::RingMismatch(
                "cannot infer the ring of an empty generator list".into(),
            ))
        }
    };
    for g in generators {
        check_ring(&generators[0], g)?;
    }
    let mut stats = GbStats::default();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        let g = g.monic();
        if g.is_zero() || basis.contains(&g) {
            continue;
        }
        if g.is_unit() {
            return Ok(unit_basis(ring, stats));
        }
        basis.push(g);
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            ring,
            basis,
            reduced: true,
            stats,
        });
    }

    let mut pairs = PairQueue {
        queue: BTreeSet::new(),
        pending: HashSet::new(),
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(&basis, i, j);
        }
    }

    while let Some(key) = pairs.queue.pop_first() {
        let (i, j) = (key.i, key.j);
        pairs.pending.remove(&(i, j));
        let lm_i = basis[i].leading_monomial().unwrap();
        let lm_j = basis[j].leading_monomial().unwrap();
        if lm_i.is_coprime(lm_j) {
            stats.skipped_coprime += 1;
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&key.lcm)
                && !pairs.is_pending(i, k)
                && !pairs.is_pending(j, k)
        });
        if chain {
            stats.skipped_chain += 1;
            continue;
        }
        if stats.pairs_reduced >= budget.max_pair_reductions {
            return Err(BudgetExceeded::PairReductions {
                limit: budget.max_pair_reductions,
            }
            .into());
        }
        stats.pairs_reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let r = reduce_by(&s, &refs).monic();
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return Ok(unit_basis(ring, stats));
        }
        let degree = r.total_degree();
        if degree > budget.max_degree {
            return Err(BudgetExceeded::Degree {
                degree,
                limit: budget.max_degree,
            }
            .into());
        }
        basis.push(r);
        let new = basis.len() - 1;
        for k in 0..new {
            pairs.push(&basis, k, new);
        }
    }

    Ok(GroebnerBasis {
        ring,
        basis: interreduce(basis),
        reduced: true,
        stats,
    })
}

fn unit_basis(ring: Ring, stats: GbStats) -> GroebnerBasis {
    GroebnerBasis {
        ring,
        basis: vec![ring.one()],
        reduced: true,
        stats,
    }
}

/// Minimalizes a monic Groebner basis and tail-reduces every element.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let other = h.leading_monomial().unwrap();
            k != idx && other.divides(lm) && (other != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for (idx, g) in minimal.iter().enumerate() {
        let others: Vec<&Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, h)| h)
            .collect();
        let mut g = g.clone();
        let lead = g.pop_leading().unwrap();
        let tail = reduce_by(&g, &others);
        let mut terms = vec![lead];
        terms.extend(tail.terms().iter().cloned());
        reduced.push(Polynomial::from_canonical(*tail.ring(), terms));
    }
    if let Some(first) = reduced.first() {
        let order = first.ring().order;
        reduced.sort_by(|a, b| order.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    }
    reduced
}

/// Ideal membership through the reduced Groebner basis.
pub fn ideal_contains(f: &Polynomial, generators: &[Polynomial], budget: Budget) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if generators.iter().all(Polynomial::is_zero) {
        return Ok(false);
    }
    buchberger(generators, budget)?.contains(f)
}
