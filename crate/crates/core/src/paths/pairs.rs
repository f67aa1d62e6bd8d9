//! Two-polynomial replacements for a block of `t + 1` consecutive windows.
//!
//! A block on `2t` variables is generated up to radical by two polynomials.
//! No closed form is hard-coded beyond `t <= 2`; pairs come from the builtin
//! table, from a config file, or from a bounded search, and every pair is
//! certified against the canonical block ideal before it is used.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::ideal::{radical_membership, verify_radical_equality, MonomialIdeal};
use crate::ring::parse::parse_raw;
use crate::ring::{Monomial, Polynomial, PrimeField, Ring};

use super::params::{path_ideal, window};

/// Default number of search candidates examined by `search-pair`.
pub const DEFAULT_SEARCH_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairProvenance {
    Builtin,
    Config,
    Search,
}

impl fmt::Display for PairProvenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairProvenance::Builtin => "builtin",
            PairProvenance::Config => "config",
            PairProvenance::Search => "search",
        })
    }
}

/// The ideal of the `t + 1` windows on `x1 .. x_{2t}`.
pub fn block_ideal(t: u32) -> Result<MonomialIdeal> {
    path_ideal(2 * t, t)
}

/// A certified pair over the canonical variables `x1 .. x_{2t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPair {
    t: u32,
    polys: [Polynomial; 2],
    provenance: PairProvenance,
    verified: bool,
}

impl BlockPair {
    /// Certifies `sqrt(first, second) = block_ideal(t)` and wraps the pair.
    pub fn verify(
        t: u32,
        first: Polynomial,
        second: Polynomial,
        provenance: PairProvenance,
        budget: Budget,
    ) -> Result<BlockPair> {
        if t == 0 {
            return Err(Error::InvalidParams("block pairs need t >= 1".into()));
        }
        let ring = Ring::new(2 * t, first.ring().field);
        let first = first.to_ring(ring)?;
        let second = second.to_ring(ring)?;
        let target = block_ideal(t)?;
        let report = verify_radical_equality(&ring, &[first.clone(), second.clone()], &target, budget)?;
        if !report.verdict {
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| c.result != crate::ideal::CheckResult::Pass)
                .map(|c| format!("{} ({})", c.target, c.result))
                .collect();
            return Err(Error::PairRejected(format!(
                "t={t}: {first} | {second} fails on {}",
                failed.join(", ")
            )));
        }
        Ok(BlockPair {
            t,
            polys: [first, second],
            provenance,
            verified: true,
        })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn provenance(&self) -> PairProvenance {
        self.provenance
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn polynomials(&self) -> &[Polynomial; 2] {
        &self.polys
    }

    pub fn field(&self) -> PrimeField {
        self.polys[0].ring().field
    }

    /// The pair with every `x_i` renamed to `x_{i+offset}`, inside `ring`.
    pub fn instantiate(&self, offset: u32, ring: Ring) -> Result<[Polynomial; 2]> {
        Ok([self.polys[0].shift(offset, ring)?, self.polys[1].shift(offset, ring)?])
    }

    /// `t=<t>: <first> | <second>`, the pair config line syntax.
    pub fn config_line(&self) -> String {
        format!("t={}: {} | {}", self.t, self.polys[0], self.polys[1])
    }
}

fn builtin_text(t: u32) -> Option<(&'static str, &'static str)> {
    match t {
        1 => Some(("x1", "x2")),
        2 => Some(("x1*x2 + x3*x4", "x2*x3")),
        _ => None,
    }
}

/// The builtin pair for `t <= 2`, certified over `field`.
pub fn builtin_pair(t: u32, field: PrimeField, budget: Budget) -> Result<Option<BlockPair>> {
    let Some((a, b)) = builtin_text(t) else {
        return Ok(None);
    };
    let ring = Ring::new(2 * t, field);
    let first = parse_raw(a, field)?.into_ring(&ring)?;
    let second = parse_raw(b, field)?.into_ring(&ring)?;
    BlockPair::verify(t, first, second, PairProvenance::Builtin, budget).map(Some)
}

/// One syntactically valid line of a pair config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub line: usize,
    pub t: u32,
    pub first: String,
    pub second: String,
}

/// Parses the line-oriented pair config: `t=2: x1*x2 + x3*x4 | x2*x3`.
/// Blank lines and `#` comments are skipped.
pub fn parse_pair_config(text: &str) -> Result<Vec<PairEntry>> {
    let mut entries = Vec::new();
    let mut offset = 0;
    for (idx, raw_line) in text.split('\n').enumerate() {
        let line_start = offset;
        offset += raw_line.len() + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::parse(line_start, format!("line {}: {msg}", idx + 1));
        let rest = line.strip_prefix("t=").ok_or_else(|| bad("expected 't=<t>:'"))?;
        let (t_text, body) = rest.split_once(':').ok_or_else(|| bad("missing ':' after t"))?;
        let t: u32 = t_text.trim().parse().map_err(|_| bad("t is not a positive integer"))?;
        if t == 0 {
            return Err(bad("t must be positive"));
        }
        let parts: Vec<&str> = body.split('|').collect();
        if parts.len() != 2 {
            return Err(bad("expected exactly two polynomials separated by '|'"));
        }
        entries.push(PairEntry {
            line: idx + 1,
            t,
            first: parts[0].trim().to_string(),
            second: parts[1].trim().to_string(),
        });
    }
    Ok(entries)
}

/// Config pairs that survived certification, first valid line per `t`.
#[derive(Debug, Clone, Default)]
pub struct PairRegistry {
    pairs: BTreeMap<u32, BlockPair>,
    pub diagnostics: Vec<String>,
}

impl PairRegistry {
    pub fn from_entries(entries: &[PairEntry], field: PrimeField, budget: Budget) -> Self {
        let mut registry = PairRegistry::default();
        for entry in entries {
            if registry.pairs.contains_key(&entry.t) {
                continue;
            }
            match Self::certify(entry, field, budget) {
                Ok(pair) => {
                    registry.pairs.insert(entry.t, pair);
                }
                Err(e) => registry.diagnostics.push(format!("line {}: rejected: {e}", entry.line)),
            }
        }
        registry
    }

    pub fn from_text(text: &str, field: PrimeField, budget: Budget) -> Result<Self> {
        Ok(Self::from_entries(&parse_pair_config(text)?, field, budget))
    }

    fn certify(entry: &PairEntry, field: PrimeField, budget: Budget) -> Result<BlockPair> {
        let ring = Ring::new(2 * entry.t, field);
        let first = parse_raw(&entry.first, field)?.into_ring(&ring)?;
        let second = parse_raw(&entry.second, field)?.into_ring(&ring)?;
        BlockPair::verify(entry.t, first, second, PairProvenance::Config, budget)
    }

    pub fn get(&self, t: u32) -> Option<&BlockPair> {
        self.pairs.get(&t)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Where block pairs may come from, tried in the order builtin, config,
/// search.
#[derive(Debug, Clone)]
pub struct PairSources {
    pub builtin: bool,
    pub registry: Option<PairRegistry>,
    /// Candidates the search may examine; `None` disables searching.
    pub search_budget: Option<usize>,
}

impl Default for PairSources {
    fn default() -> Self {
        PairSources {
            builtin: true,
            registry: None,
            search_budget: None,
        }
    }
}

/// A verified pair for `t` from the first source that yields one.
pub fn get_block_pair(t: u32, sources: &PairSources, field: PrimeField, budget: Budget) -> Result<BlockPair> {
    if sources.builtin {
        if let Some(pair) = builtin_pair(t, field, budget)? {
            return Ok(pair);
        }
    }
    if let Some(pair) = sources.registry.as_ref().and_then(|r| r.get(t)) {
        if pair.field() == field {
            // registry pairs were certified when loaded; re-run before use
            let [a, b] = pair.polynomials().clone();
            return BlockPair::verify(t, a, b, PairProvenance::Config, budget);
        }
    }
    if let Some(limit) = sources.search_budget {
        if let Some(pair) = search_block_pair(t, limit, field, budget).pair {
            return Ok(pair);
        }
    }
    Err(Error::PairUnavailable(t))
}

/// Result of a bounded pair search.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub pair: Option<BlockPair>,
    /// Candidates enumerated, including those rejected by the point sieve.
    pub examined: usize,
    /// Candidates that reached a Groebner check.
    pub groebner_checked: usize,
}

/// Candidate `(S1, S2, c, u)`: `S1 ∪ S2` partitions the windows, `c_i = ±1`
/// and `u_i` is `1` or a single block variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Candidate {
    /// Bit `i` set means window `i` goes to the second polynomial.
    second_mask: u32,
    /// Bit `i` set means `c_i = -1`.
    sign_mask: u32,
}

/// Enumerates candidates in a fixed order: multipliers (odometer, all units
/// first), then partitions, then signs. Window 0 always sits in the first
/// polynomial, and the first window of each polynomial has sign `+1`, since
/// swapping or negating the polynomials does not change the ideal.
struct CandidateIter {
    t: u32,
    multipliers: Vec<u32>,
    partition: u32,
    sign: u32,
    done: bool,
}

impl CandidateIter {
    fn new(t: u32) -> Self {
        CandidateIter {
            t,
            multipliers: vec![0; t as usize + 1],
            partition: 1,
            sign: 0,
            done: false,
        }
    }

    fn fixed_sign_bits(&self) -> u32 {
        // the lowest window of each polynomial keeps sign +1
        let second = self.partition << 1;
        let lowest_second = second & second.wrapping_neg();
        1 | lowest_second
    }

    fn advance(&mut self) {
        let windows = self.t + 1;
        let all = (1u32 << windows) - 1;
        loop {
            self.sign += 1;
            if self.sign > all {
                self.sign = 0;
                self.partition += 1;
                if self.partition >= (1 << self.t) {
                    self.partition = 1;
                    // odometer over the multipliers
                    let mut slot = 0;
                    loop {
                        if slot == self.multipliers.len() {
                            self.done = true;
                            return;
                        }
                        self.multipliers[slot] += 1;
                        if self.multipliers[slot] <= 2 * self.t {
                            break;
                        }
                        self.multipliers[slot] = 0;
                        slot += 1;
                    }
                }
            }
            if self.sign & self.fixed_sign_bits() == 0 {
                return;
            }
        }
    }
}

impl Iterator for CandidateIter {
    type Item = (Candidate, Vec<u32>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = (
            Candidate {
                second_mask: self.partition << 1,
                sign_mask: self.sign,
            },
            self.multipliers.clone(),
        );
        self.advance();
        Some(out)
    }
}

fn build_candidate(t: u32, cand: Candidate, multipliers: &[u32], ring: &Ring) -> Result<[Polynomial; 2]> {
    let field = ring.field;
    let mut parts: [Vec<(u32, Monomial)>; 2] = [Vec::new(), Vec::new()];
    for (i, &u) in multipliers.iter().enumerate() {
        let base = window(i as u32 + 1, t);
        let term = if u == 0 { base } else { base.mul(&Monomial::var(u)) };
        let c = if cand.sign_mask & (1 << i) != 0 {
            field.neg(1)
        } else {
            1
        };
        let side = usize::from(cand.second_mask & (1 << i) != 0);
        parts[side].push((c, term));
    }
    let [a, b] = parts;
    Ok([ring.from_terms(a)?, ring.from_terms(b)?])
}

/// Small coordinates used by the point sieve.
fn sieve_values(field: PrimeField) -> Vec<u32> {
    let mut v = vec![0, 1, field.neg(1)];
    v.dedup();
    v
}

fn evaluate(f: &Polynomial, point: &[u32]) -> u32 {
    let field = f.ring().field;
    f.terms().iter().fold(0, |acc, (c, m)| {
        let value = m.entries().iter().fold(*c, |v, &(var, e)| {
            field.mul(v, field.pow(point[var as usize - 1], e as u64))
        });
        field.add(acc, value)
    })
}

/// A common zero of `polys` where some window is nonzero proves that the
/// candidate does not define the block set-theoretically.
fn has_witness_point(polys: &[Polynomial; 2], windows: &[Polynomial], values: &[u32], nvars: usize) -> bool {
    let base = values.len();
    let total = base.pow(nvars as u32);
    let mut point = vec![0u32; nvars];
    for code in 0..total {
        let mut c = code;
        for slot in point.iter_mut() {
            *slot = values[c % base];
            c /= base;
        }
        if polys.iter().all(|f| evaluate(f, &point) == 0) && windows.iter().any(|w| evaluate(w, &point) != 0) {
            return true;
        }
    }
    false
}

/// Bounded search through the family of signed, single-variable-weighted
/// partitions of the block windows. Candidates are first sieved by looking
/// for a witness point with coordinates in `{0, 1, -1}`, then every window is
/// checked for radical membership; the first survivor is fully certified.
pub fn search_block_pair(t: u32, max_candidates: usize, field: PrimeField, budget: Budget) -> SearchOutcome {
    let mut outcome = SearchOutcome {
        pair: None,
        examined: 0,
        groebner_checked: 0,
    };
    if t == 0 || max_candidates == 0 {
        return outcome;
    }
    let ring = Ring::new(2 * t, field);
    let windows: Vec<Polynomial> = (1..=t + 1)
        .map(|i| ring.monomial(window(i, t)).expect("window fits the block ring"))
        .collect();
    let values = sieve_values(field);
    for (cand, multipliers) in CandidateIter::new(t) {
        if outcome.examined >= max_candidates {
            break;
        }
        outcome.examined += 1;
        let Ok(polys) = build_candidate(t, cand, &multipliers, &ring) else {
            continue;
        };
        if has_witness_point(&polys, &windows, &values, 2 * t as usize) {
            continue;
        }
        outcome.groebner_checked += 1;
        let survives = windows
            .iter()
            .all(|w| matches!(radical_membership(w, &polys, budget), Ok(true)));
        if !survives {
            continue;
        }
        let [a, b] = polys;
        if let Ok(pair) = BlockPair::verify(t, a, b, PairProvenance::Search, budget) {
            outcome.pair = Some(pair);
            break;
        }
    }
    outcome
}

/// Size of the full search family for `t`.
pub fn search_family_size(t: u32) -> usize {
    CandidateIter::new(t).count()
}
