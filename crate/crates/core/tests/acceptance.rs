//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! required criterion fails. Tolerances are exact integer equality
//! throughout; the runtime limits are checked against wall-clock time.

#[path = "support/engine_props.rs"]
mod engine_props;

use std::time::{Duration, Instant};

use arapath::groebner::Budget;
use arapath::hochster::{projective_dimension, DEFAULT_VARIABLE_CAP};
use arapath::ideal::{ideal_sum, MonomialIdeal};
use arapath::paths::{
    ara_formula, check_lemma1_hypothesis, construct_certificate, path_ideal, search_block_pair, AraCertificate,
    CertificateOptions, CertificateStatus, PairSources, VerifyPolicy, DEFAULT_SEARCH_BUDGET,
};
use arapath::ring::PrimeField;
use rayon::prelude::*;

const GRID_LIMIT: Duration = Duration::from_secs(300);
const T2_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn verified_options() -> CertificateOptions {
    CertificateOptions {
        verify: VerifyPolicy::Always,
        ..CertificateOptions::default()
    }
}

/// Checks shared by every certificate that claims the formula's size.
fn tight_and_verified(cert: &AraCertificate) -> Result<(), String> {
    let (n, t) = (cert.params.n, cert.params.t);
    if cert.status != CertificateStatus::Verified {
        return Err(format!("n={n} t={t}: status {:?}", cert.status));
    }
    if cert.count() != ara_formula(n, t).unwrap() as usize {
        return Err(format!(
            "n={n} t={t}: {} generators, formula {}",
            cert.count(),
            cert.formula_value
        ));
    }
    match &cert.verification {
        Some(r) if r.verdict => Ok(()),
        _ => Err(format!("n={n} t={t}: no passing verification")),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let grid: Vec<(u32, u32)> = (1..=5).flat_map(|t| (t..=14).map(move |n| (n, t))).collect();
    let mismatches: Vec<String> = grid
        .par_iter()
        .filter_map(|&(n, t)| {
            let pd = projective_dimension(&path_ideal(n, t).unwrap(), gf(2), DEFAULT_VARIABLE_CAP).unwrap();
            let formula = ara_formula(n, t).unwrap() as usize;
            (pd != formula).then(|| format!("(t={t}, n={n}): pd {pd} vs formula {formula}"))
        })
        .collect();
    let elapsed = start.elapsed();
    if !mismatches.is_empty() {
        return Err(mismatches.join("; "));
    }
    if elapsed > GRID_LIMIT {
        return Err(format!("{} instances took {elapsed:.1?}", grid.len()));
    }
    Ok(format!("{} instances equal over GF(2) in {elapsed:.1?}", grid.len()))
}

fn criterion_2(verified: &mut Vec<AraCertificate>) -> Outcome {
    let start = Instant::now();
    let mut branches = Vec::new();
    for n in 4..=9 {
        let cert = construct_certificate(n, 2, &verified_options()).map_err(|e| format!("n={n}: {e}"))?;
        tight_and_verified(&cert)?;
        branches.push(format!("{n}:{:?}", cert.params.branch()).to_lowercase());
        verified.push(cert);
    }
    let elapsed = start.elapsed();
    if elapsed > T2_LIMIT {
        return Err(format!("took {elapsed:.1?}"));
    }
    Ok(format!(
        "n=4..9 tight and certified [{}] in {elapsed:.1?}",
        branches.join(" ")
    ))
}

fn criterion_3(verified: &mut Vec<AraCertificate>) -> Outcome {
    for n in 1..=6 {
        let cert = construct_certificate(n, 1, &verified_options()).map_err(|e| format!("t=1 n={n}: {e}"))?;
        tight_and_verified(&cert)?;
        if cert.count() != n as usize {
            return Err(format!("t=1 n={n}: {} generators", cert.count()));
        }
        verified.push(cert);
    }
    for t in 1..=8 {
        let cert = construct_certificate(t, t, &verified_options()).map_err(|e| format!("n=t={t}: {e}"))?;
        tight_and_verified(&cert)?;
        if cert.count() != 1 {
            return Err(format!("n=t={t}: {} generators", cert.count()));
        }
        verified.push(cert);
    }
    Ok("t=1 (n=1..6) gives n generators, n=t (1..8) gives one; all certified".into())
}

fn criterion_4() -> Outcome {
    let i = MonomialIdeal::parse("x1*x2; x1*x3; x4*x5", None).unwrap();
    let j = MonomialIdeal::parse("x1", Some(5)).unwrap();
    let sum = ideal_sum(&i, &j);
    let expected = MonomialIdeal::parse("x1; x4*x5", None).unwrap();
    if sum != expected {
        return Err(format!("I + J = ({sum})"));
    }
    if check_lemma1_hypothesis(&i, &j).holds {
        return Err("hypothesis reported as holding".into());
    }
    for p in [2, 32003] {
        let pd_i = projective_dimension(&i, gf(p), DEFAULT_VARIABLE_CAP).unwrap();
        let pd_sum = projective_dimension(&sum, gf(p), DEFAULT_VARIABLE_CAP).unwrap();
        if (pd_i, pd_sum) != (3, 2) {
            return Err(format!("GF({p}): pd(I) = {pd_i}, pd(I+J) = {pd_sum}"));
        }
    }
    Ok("I + J = (x1, x4*x5), hypothesis fails, pd 3 and 2 in characteristics 2 and 32003".into())
}

fn criterion_5(verified: &[AraCertificate]) -> Outcome {
    for cert in verified {
        let pd = cert
            .pd_value
            .ok_or_else(|| format!("n={} t={}: no pd", cert.params.n, cert.params.t))?;
        if pd > cert.count() {
            return Err(format!(
                "n={} t={}: pd {pd} > {}",
                cert.params.n,
                cert.params.t,
                cert.count()
            ));
        }
    }
    Ok(format!("pd <= count on all {} verified certificates", verified.len()))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for (name, suite, cases) in engine_props::SUITES {
        suite().map_err(|e| format!("{name}: {e}"))?;
        total += cases;
    }
    Ok(format!("{} suites, {total} cases", engine_props::SUITES.len()))
}

/// Conditional: reported, never fails the run.
fn criterion_7() -> Outcome {
    let outcome = search_block_pair(3, DEFAULT_SEARCH_BUDGET, PrimeField::default(), Budget::default());
    let Some(pair) = outcome.pair else {
        return Err(format!(
            "no t=3 pair in the candidate family ({} candidates examined, {} reached Groebner)",
            outcome.examined, outcome.groebner_checked
        ));
    };
    let options = CertificateOptions {
        sources: PairSources {
            builtin: true,
            registry: None,
            search_budget: Some(DEFAULT_SEARCH_BUDGET),
        },
        ..verified_options()
    };
    for n in 7..=12 {
        let cert = construct_certificate(n, 3, &options).map_err(|e| format!("n={n}: {e}"))?;
        tight_and_verified(&cert)?;
    }
    Ok(format!(
        "pair {} gives certified t=3 sets for n=7..12",
        pair.config_line()
    ))
}

fn report(label: &str, outcome: &Outcome, required: bool) -> bool {
    match (outcome, required) {
        (Ok(detail), _) => println!("criterion {label}: PASS  {detail}"),
        (Err(detail), true) => println!("criterion {label}: FAIL  {detail}"),
        (Err(detail), false) => println!("criterion {label}: NOT MET (conditional, reported only)  {detail}"),
    }
    outcome.is_ok() || !required
}

fn main() {
    let mut verified = Vec::new();
    let results = [
        ("1", criterion_1(), true),
        ("2", criterion_2(&mut verified), true),
        ("3", criterion_3(&mut verified), true),
        ("4", criterion_4(), true),
        ("5", criterion_5(&verified), true),
        ("6", criterion_6(), true),
        ("7", criterion_7(), false),
    ];
    let mut ok = true;
    for (label, outcome, required) in &results {
        ok &= report(label, outcome, *required);
    }
    println!(
        "acceptance: {}",
        if ok { "all required criteria pass" } else { "FAILED" }
    );
    if !ok {
        std::process::exit(1);
    }
}
