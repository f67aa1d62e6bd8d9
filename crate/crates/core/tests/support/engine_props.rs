//! Randomized engine property suites, shared by the `properties` and
//! `acceptance` targets. Every suite runs with a fixed seed so a failure
//! reproduces byte for byte.
#![allow(dead_code)]

use arapath::groebner::{buchberger, ideal_contains, normal_form, s_pairs_reduce_to_zero, Budget};
use arapath::hochster::{projective_dimension, DEFAULT_VARIABLE_CAP};
use arapath::ideal::{ideal_sum, monomial_ideal_contains, verify_radical_equality, MonomialIdeal};
use arapath::paths::lemma1_project;
use arapath::ring::{parse_polynomial, Monomial, Polynomial, PrimeField, Ring};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_a2a7),
        failure_persistence: None,
        ..Config::default()
    }
}

type RawTerms = Vec<(i64, Vec<u32>)>;

/// Terms as `(coefficient, exponent vector)` over `nvars` variables.
fn raw_terms(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = RawTerms> {
    prop::collection::vec((-20i64..20, prop::collection::vec(0..=max_exp, nvars)), 0..=max_terms)
}

fn build(ring: &Ring, raw: &RawTerms) -> Polynomial {
    let field = ring.field;
    let terms = raw.iter().map(|(c, exps)| {
        let m = Monomial::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i as u32 + 1, e))).unwrap();
        (field.from_i64(*c), m)
    });
    ring.from_terms(terms).unwrap()
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 7, 32003])
}

/// Square-free monomials as nonempty variable masks.
fn square_free_ideal(nvars: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u32..(1 << nvars), 1..=max_gens).prop_map(move |masks| {
        let gens = masks
            .into_iter()
            .map(|mask| Monomial::square_free((0..nvars).filter(|b| mask >> b & 1 == 1).map(|b| b + 1)))
            .collect();
        MonomialIdeal::new(nvars, gens).unwrap()
    })
}

fn reverse(nvars: u32) -> impl Fn(u32) -> u32 {
    move |i| nvars + 1 - i
}

fn check<S: Strategy>(
    cases: u32,
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    TestRunner::new(config(cases))
        .run(strategy, test)
        .map_err(|e| e.to_string())
}

pub fn ring_axioms() -> Result<(), String> {
    check(
        128,
        &(prime(), raw_terms(3, 3, 5), raw_terms(3, 3, 5), raw_terms(3, 3, 5)),
        |(p, a, b, c)| {
            let ring = Ring::new(3, PrimeField::new(p).unwrap());
            let (a, b, c) = (build(&ring, &a), build(&ring, &b), build(&ring, &c));
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert!(a.add(&a.neg()).unwrap().is_zero());
            prop_assert_eq!(a.mul(&ring.one()).unwrap(), a.clone());
            prop_assert!(a.mul(&ring.zero()).unwrap().is_zero());
            prop_assert_eq!(a.sub(&b).unwrap(), a.add(&b.neg()).unwrap());
            Ok(())
        },
    )
}

pub fn print_parse_round_trip() -> Result<(), String> {
    check(128, &(prime(), raw_terms(4, 4, 6)), |(p, a)| {
        let ring = Ring::new(4, PrimeField::new(p).unwrap());
        let f = build(&ring, &a);
        prop_assert_eq!(parse_polynomial(&f.to_string(), &ring).unwrap(), f);
        Ok(())
    })
}

pub fn canonical_form() -> Result<(), String> {
    check(128, &(prime(), raw_terms(3, 3, 8)), |(p, a)| {
        let ring = Ring::new(3, PrimeField::new(p).unwrap());
        let f = build(&ring, &a);
        let order = ring.order;
        for w in f.terms().windows(2) {
            prop_assert_eq!(order.compare(&w[0].1, &w[1].1), std::cmp::Ordering::Greater);
        }
        prop_assert!(f.terms().iter().all(|(c, _)| *c != 0));
        // building from the terms in reverse, doubled, gives 2f
        let mut doubled: RawTerms = a.iter().rev().cloned().collect();
        doubled.extend(a.iter().cloned());
        prop_assert_eq!(build(&ring, &doubled), f.scale(ring.field.from_i64(2)));
        Ok(())
    })
}

pub fn groebner_closure_and_normal_forms() -> Result<(), String> {
    check(
        128,
        &(prop::collection::vec(raw_terms(3, 2, 3), 1..=3), raw_terms(3, 3, 4)),
        |(gens, f)| {
            let ring = Ring::new(3, PrimeField::default());
            let gens: Vec<Polynomial> = gens.iter().map(|g| build(&ring, g)).collect();
            let gb = buchberger(&gens, Budget::default()).unwrap();
            prop_assert!(gb.s_pairs_reduce_to_zero());
            prop_assert!(s_pairs_reduce_to_zero(gb.basis()));
            for g in &gens {
                prop_assert!(gb.contains(g).unwrap());
            }
            let f = build(&ring, &f);
            let r = normal_form(&f, gb.basis()).unwrap();
            prop_assert_eq!(normal_form(&r, gb.basis()).unwrap(), r.clone());
            // f - NF(f) lies in the ideal
            prop_assert!(gb.contains(&f.sub(&r).unwrap()).unwrap());
            Ok(())
        },
    )
}

pub fn monomial_membership_matches_groebner() -> Result<(), String> {
    check(
        200,
        &(
            prop::collection::vec(prop::collection::vec(0u32..=2, 4), 1..=4),
            raw_terms(4, 3, 4),
        ),
        |(gens, f)| {
            let ring = Ring::new(4, PrimeField::default());
            let monomials: Vec<Monomial> = gens
                .iter()
                .map(|e| Monomial::from_pairs(e.iter().enumerate().map(|(i, &x)| (i as u32 + 1, x))).unwrap())
                .collect();
            let ideal = MonomialIdeal::new(4, monomials).unwrap();
            let polys = ideal.to_polynomials(&ring).unwrap();
            let f = build(&ring, &f);
            prop_assert_eq!(
                monomial_ideal_contains(&f, &ideal),
                ideal_contains(&f, &polys, Budget::default()).unwrap()
            );
            Ok(())
        },
    )
}

pub fn certifier_accepts_identity_substitution() -> Result<(), String> {
    check(100, &(square_free_ideal(5, 4),), |(ideal,)| {
        let ring = Ring::new(5, PrimeField::default());
        let polys = ideal.to_polynomials(&ring).unwrap();
        let report = verify_radical_equality(&ring, &polys, &ideal, Budget::default()).unwrap();
        prop_assert!(report.verdict, "{}", report);
        Ok(())
    })
}

pub fn certifier_is_invariant_under_index_reversal() -> Result<(), String> {
    check(
        100,
        &(
            square_free_ideal(4, 4),
            prop::collection::vec((any::<u8>(), any::<bool>()), 1..=3),
        ),
        |(ideal, combos)| {
            let ring = Ring::new(4, PrimeField::default());
            let gens = ideal.to_polynomials(&ring).unwrap();
            // signed sums of subsets of the generators
            let polys: Vec<Polynomial> = combos
                .iter()
                .map(|&(mask, negate)| {
                    let mut f = ring.zero();
                    for (i, g) in gens.iter().enumerate() {
                        if mask >> (i % 8) & 1 == 1 {
                            let g = if negate && i % 2 == 1 { g.neg() } else { g.clone() };
                            f = f.add(&g).unwrap();
                        }
                    }
                    f
                })
                .filter(|f| !f.is_zero())
                .collect();
            prop_assume!(!polys.is_empty());
            let rev = reverse(4);
            let rpolys: Vec<Polynomial> = polys.iter().map(|f| f.rename(&rev).unwrap()).collect();
            let rideal = ideal.rename(4, &rev).unwrap();
            let a = verify_radical_equality(&ring, &polys, &ideal, Budget::default()).unwrap();
            let b = verify_radical_equality(&ring, &rpolys, &rideal, Budget::default()).unwrap();
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.failures().count(), b.failures().count());
            Ok(())
        },
    )
}

pub fn projection_is_idempotent() -> Result<(), String> {
    check(
        100,
        &(prop::collection::vec(raw_terms(6, 2, 5), 0..=4), 0u32..=6),
        |(polys, keep)| {
            let ring = Ring::new(6, PrimeField::default());
            let polys: Vec<Polynomial> = polys.iter().map(|f| build(&ring, f)).collect();
            let once = lemma1_project(&polys, keep);
            prop_assert_eq!(lemma1_project(&once, keep), once.clone());
            prop_assert!(once.iter().all(|f| f.max_var() <= keep && !f.is_zero()));
            Ok(())
        },
    )
}

pub fn taylor_bound() -> Result<(), String> {
    check(100, &(square_free_ideal(6, 5),), |(ideal,)| {
        let field = PrimeField::default();
        let pd = projective_dimension(&ideal, field, DEFAULT_VARIABLE_CAP).unwrap();
        prop_assert!(pd <= ideal.len());
        prop_assert!(pd >= 1);
        Ok(())
    })
}

pub fn pd_adds_over_disjoint_variables() -> Result<(), String> {
    check(100, &(square_free_ideal(4, 3), square_free_ideal(4, 3)), |(a, b)| {
        let field = PrimeField::new(2).unwrap();
        let a8 = a.with_nvars(8).unwrap();
        let b8 = b.rename(8, |i| i + 4).unwrap();
        let pd = |i: &MonomialIdeal| projective_dimension(i, field, DEFAULT_VARIABLE_CAP).unwrap();
        prop_assert_eq!(pd(&ideal_sum(&a8, &b8)), pd(&a) + pd(&b));
        Ok(())
    })
}

pub fn pd_is_invariant_under_index_reversal() -> Result<(), String> {
    check(100, &(square_free_ideal(6, 5),), |(ideal,)| {
        let field = PrimeField::default();
        let reversed = ideal.rename(6, reverse(6)).unwrap();
        prop_assert_eq!(
            projective_dimension(&ideal, field, DEFAULT_VARIABLE_CAP).unwrap(),
            projective_dimension(&reversed, field, DEFAULT_VARIABLE_CAP).unwrap()
        );
        Ok(())
    })
}

pub type Suite = fn() -> Result<(), String>;

/// `(name, suite, cases)` for every property suite.
pub const SUITES: &[(&str, Suite, u32)] = &[
    ("ring_axioms", ring_axioms as Suite, 128),
    ("print_parse_round_trip", print_parse_round_trip as Suite, 128),
    ("canonical_form", canonical_form as Suite, 128),
    (
        "groebner_closure_and_normal_forms",
        groebner_closure_and_normal_forms as Suite,
        128,
    ),
    (
        "monomial_membership_matches_groebner",
        monomial_membership_matches_groebner as Suite,
        200,
    ),
    (
        "certifier_accepts_identity_substitution",
        certifier_accepts_identity_substitution as Suite,
        100,
    ),
    (
        "certifier_is_invariant_under_index_reversal",
        certifier_is_invariant_under_index_reversal as Suite,
        100,
    ),
    ("projection_is_idempotent", projection_is_idempotent as Suite, 100),
    ("taylor_bound", taylor_bound as Suite, 100),
    (
        "pd_adds_over_disjoint_variables",
        pd_adds_over_disjoint_variables as Suite,
        100,
    ),
    (
        "pd_is_invariant_under_index_reversal",
        pd_is_invariant_under_index_reversal as Suite,
        100,
    ),
];
