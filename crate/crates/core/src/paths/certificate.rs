//! End-to-end certified generating sets for path ideals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::hochster::{projective_dimension, DEFAULT_VARIABLE_CAP};
use crate::ideal::{verify_radical_equality, RadicalEqualityReport};
use crate::ring::{Polynomial, PrimeField, Ring};

use super::lemma::{check_lemma1_hypothesis, lemma1_project, HypothesisCheck};
use super::pairs::{get_block_pair, BlockPair, PairProvenance, PairSources};
use super::params::{ara_formula, blocks, padding_monomials, path_ideal, window, Branch, PathParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyPolicy {
    Always,
    Never,
    /// Verify when `t = 2, n <= 9`, or when at most 8 generators were built.
    #[default]
    Auto,
}

impl VerifyPolicy {
    pub fn should_verify(self, params: &PathParams, generator_count: usize) -> bool {
        match self {
            VerifyPolicy::Always => true,
            VerifyPolicy::Never => false,
            VerifyPolicy::Auto => (params.t == 2 && params.n <= 9) || generator_count <= 8,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CertificateOptions {
    pub verify: VerifyPolicy,
    pub field: PrimeField,
    pub budget: Budget,
    pub sources: PairSources,
    /// Largest path length for which `pd` is computed.
    pub pd_cap: usize,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            verify: VerifyPolicy::Auto,
            field: PrimeField::default(),
            budget: Budget::default(),
            sources: PairSources::default(),
            pd_cap: DEFAULT_VARIABLE_CAP,
        }
    }
}

/// One entry of the construction log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Decompose {
        n: u32,
        t: u32,
        k: u32,
        d: u32,
        branch: Branch,
    },
    Pair {
        t: u32,
        provenance: PairProvenance,
        pair: String,
    },
    Padding {
        extended_n: u32,
        added: Vec<String>,
    },
    Hypothesis {
        check: HypothesisCheck,
    },
    Block {
        index: u32,
        offset: u32,
        windows: (u32, u32),
        replaced_by: [String; 2],
    },
    Projection {
        keep_max_index: u32,
        before: Vec<String>,
        after: Vec<String>,
    },
    Leftover {
        monomial: String,
    },
    Degraded {
        reason: String,
    },
}

/// Difference between what was built and the closed formula when no pair was
/// available.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub constructed: usize,
    pub formula: u32,
    pub gap: usize,
    pub missing_pair_for_t: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    /// Radical equality certified and both rank checks hold.
    Verified,
    /// Built from verified pairs, global verification not run.
    Unverified,
    /// Some backward check ran out of Groebner budget.
    BudgetExhausted,
    /// No pair for `t`: generators are the path monomials themselves.
    Degraded,
}

#[derive(Debug, Clone)]
pub struct AraCertificate {
    pub params: PathParams,
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    pub formula_value: u32,
    pub pd_value: Option<usize>,
    pub verification: Option<RadicalEqualityReport>,
    pub steps: Vec<Step>,
    pub pair: Option<PairProvenance>,
    pub gap: Option<GapReport>,
    pub status: CertificateStatus,
}

impl AraCertificate {
    pub fn count(&self) -> usize {
        self.generators.len()
    }

    /// Number of generators matches the closed formula.
    pub fn is_tight(&self) -> bool {
        self.count() == self.formula_value as usize
    }
}

fn strings(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(Polynomial::to_string).collect()
}

/// Replaces the first `k(t+1)` windows of a path on `nvars` variables by the
/// shifted pair, logging one step per block.
fn substitute_blocks(
    params: &PathParams,
    pair: &BlockPair,
    ring: Ring,
    steps: &mut Vec<Step>,
) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for block in blocks(params, true)? {
        let [a, b] = pair.instantiate(block.offset, ring)?;
        steps.push(Step::Block {
            index: block.index,
            offset: block.offset,
            windows: (block.first_window, block.last_window),
            replaced_by: [a.to_string(), b.to_string()],
        });
        out.push(a);
        out.push(b);
    }
    Ok(out)
}

/// Builds, and where the policy says so certifies, a generating set up to
/// radical for `I_t(L_n)` with `ara_formula(n, t)` elements.
///
/// Without a verified pair for `t` the certificate is degraded: its
/// generators are the path monomials and a gap report is attached.
pub fn construct_certificate(n: u32, t: u32, options: &CertificateOptions) -> Result<AraCertificate> {
    let params = PathParams::new(n, t)?;
    let formula_value = ara_formula(n, t)?;
    let field = options.field;
    let ring = Ring::new(n, field);
    let target = path_ideal(n, t)?;
    let mut steps = vec![Step::Decompose {
        n,
        t,
        k: params.k,
        d: params.d,
        branch: params.branch(),
    }];

    let pair = match get_block_pair(t, &options.sources, field, options.budget) {
        Ok(pair) => Some(pair),
        Err(Error::PairUnavailable(_)) => None,
        Err(e) => return Err(e),
    };
    // a single window needs no pair at all
    let needs_pair = params.k > 0;

    let (generators, status, gap) = match (&pair, needs_pair) {
        (None, true) => {
            steps.push(Step::Degraded {
                reason: format!("no verified block pair for t={t}; keeping the path monomials"),
            });
            let gens = target.to_polynomials(&ring)?;
            let gap = GapReport {
                constructed: gens.len(),
                formula: formula_value,
                gap: gens.len().saturating_sub(formula_value as usize),
                missing_pair_for_t: t,
            };
            (gens, CertificateStatus::Degraded, Some(gap))
        }
        _ => {
            if let (Some(pair), true) = (&pair, needs_pair) {
                steps.push(Step::Pair {
                    t,
                    provenance: pair.provenance(),
                    pair: pair.config_line(),
                });
            }
            let gens = match params.branch() {
                Branch::Exact => substitute_blocks(&params, pair.as_ref().unwrap(), ring, &mut steps)?,
                Branch::Padding => {
                    let (padding, extended_n) = padding_monomials(&params)?;
                    steps.push(Step::Padding {
                        extended_n,
                        added: padding.generators().iter().map(|m| m.to_string()).collect(),
                    });
                    let check = check_lemma1_hypothesis(&target, &padding);
                    let holds = check.holds;
                    steps.push(Step::Hypothesis { check });
                    if !holds {
                        return Err(Error::InvariantViolation(
                            "padding windows share variables with the path".into(),
                        ));
                    }
                    let big = Ring::new(extended_n, field);
                    let padded = PathParams::new(extended_n, t)?;
                    let lifted = substitute_blocks(&padded, pair.as_ref().unwrap(), big, &mut steps)?;
                    let projected = lemma1_project(&lifted, n);
                    steps.push(Step::Projection {
                        keep_max_index: n,
                        before: strings(&lifted),
                        after: strings(&projected),
                    });
                    projected.iter().map(|f| f.to_ring(ring)).collect::<Result<_>>()?
                }
                Branch::Leftover => {
                    let mut gens = if needs_pair {
                        substitute_blocks(&params, pair.as_ref().unwrap(), ring, &mut steps)?
                    } else {
                        Vec::new()
                    };
                    let last = window(n - t + 1, t);
                    steps.push(Step::Leftover {
                        monomial: last.to_string(),
                    });
                    gens.push(ring.monomial(last)?);
                    gens
                }
            };
            (gens, CertificateStatus::Unverified, None)
        }
    };

    let pd_value = if n as usize <= options.pd_cap {
        Some(projective_dimension(&target, field, options.pd_cap)?)
    } else {
        None
    };

    let mut status = status;
    let verification = if options.verify.should_verify(&params, generators.len()) {
        let report = verify_radical_equality(&ring, &generators, &target, options.budget)?;
        if report.failures().next().is_some() {
            let failed: Vec<String> = report.failures().map(|c| c.target.clone()).collect();
            return Err(Error::VerificationFailed(format!(
                "n={n}, t={t}: failing checks on {}",
                failed.join(", ")
            )));
        }
        if report.budget_exhausted() {
            status = CertificateStatus::BudgetExhausted;
        } else if status == CertificateStatus::Unverified {
            status = CertificateStatus::Verified;
        }
        Some(report)
    } else {
        None
    };

    let certificate = AraCertificate {
        params,
        ring,
        generators,
        formula_value,
        pd_value,
        verification,
        steps,
        pair: pair.as_ref().filter(|_| needs_pair).map(BlockPair::provenance),
        gap,
        status,
    };
    check_rank_bounds(&certificate)?;
    Ok(certificate)
}

/// `pd <= #generators` for a certified set, `pd = formula` always.
fn check_rank_bounds(cert: &AraCertificate) -> Result<()> {
    let Some(pd) = cert.pd_value else {
        return Ok(());
    };
    let certified = cert.verification.as_ref().is_some_and(|r| r.verdict);
    if certified && pd > cert.count() {
        return Err(Error::InvariantViolation(format!(
            "n={}, t={}: pd {pd} exceeds the {} certified generators",
            cert.params.n,
            cert.params.t,
            cert.count()
        )));
    }
    if pd != cert.formula_value as usize {
        return Err(Error::InvariantViolation(format!(
            "n={}, t={}: pd {pd} differs from the closed formula {}",
            cert.params.n, cert.params.t, cert.formula_value
        )));
    }
    if cert.status == CertificateStatus::Verified && !cert.is_tight() {
        return Err(Error::InvariantViolation(format!(
            "n={}, t={}: {} generators certified, formula gives {}",
            cert.params.n,
            cert.params.t,
            cert.count(),
            cert.formula_value
        )));
    }
    Ok(())
}
