//! Monotonicity of arithmetical rank under adding generators in fresh
//! variables, and the projection that transports generating sets back.

use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Polynomial};

/// Outcome of checking that every generator of `J` carries a variable no
/// generator of `I` involves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub holds: bool,
    /// `(generator of J, witness variable index)` for each passing generator.
    #[serde(serialize_with = "serialize_witnesses")]
    pub witnesses: Vec<(Monomial, u32)>,
    /// First generator of `J` without a witness.
    #[serde(serialize_with = "serialize_failing")]
    pub failing: Option<Monomial>,
}

fn serialize_witnesses<S: serde::Serializer>(w: &[(Monomial, u32)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(w.iter().map(|(m, v)| format!("{m} via x{v}")))
}

fn serialize_failing<S: serde::Serializer>(m: &Option<Monomial>, s: S) -> Result<S::Ok, S::Error> {
    match m {
        Some(m) => s.serialize_some(&m.to_string()),
        None => s.serialize_none(),
    }
}

pub fn check_lemma1_hypothesis(i: &MonomialIdeal, j: &MonomialIdeal) -> HypothesisCheck {
    let used = i.support();
    let mut witnesses = Vec::new();
    for g in j.generators() {
        match g.support().find(|v| used.binary_search(v).is_err()) {
            Some(v) => witnesses.push((g.clone(), v)),
            None => {
                return HypothesisCheck {
                    holds: false,
                    witnesses,
                    failing: Some(g.clone()),
                }
            }
        }
    }
    HypothesisCheck {
        holds: true,
        witnesses,
        failing: None,
    }
}

/// Deletes from each polynomial every term involving a variable of index
/// above `keep_max_index`; polynomials that vanish are dropped.
pub fn lemma1_project(polys: &[Polynomial], keep_max_index: u32) -> Vec<Polynomial> {
    polys
        .iter()
        .map(|f| f.filter_terms(|m| m.max_var() <= keep_max_index))
        .filter(|f| !f.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::path_ideal;
    use crate::ring::{parse_polynomial, PrimeField, Ring};

    #[test]
    fn hypothesis_examples() {
        let i = path_ideal(6, 2).unwrap();
        let j = MonomialIdeal::parse("x6*x7", Some(7)).unwrap();
        let check = check_lemma1_hypothesis(&i, &j);
        assert!(check.holds);
        assert_eq!(check.witnesses, vec![(Monomial::square_free([6, 7]), 7)]);

        let i = MonomialIdeal::parse("x1*x2; x1*x3; x4*x5", None).unwrap();
        let j = MonomialIdeal::parse("x1", Some(5)).unwrap();
        let check = check_lemma1_hypothesis(&i, &j);
        assert!(!check.holds);
        assert_eq!(check.failing, Some(Monomial::var(1)));

        assert!(check_lemma1_hypothesis(&i, &MonomialIdeal::zero(5)).holds);
    }

    #[test]
    fn projection_examples() {
        let r = Ring::new(7, PrimeField::default());
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let out = lemma1_project(&[p("x4*x5 + x6*x7"), p("x5*x6")], 6);
        assert_eq!(out, vec![p("x4*x5"), p("x5*x6")]);
        let f = p("x1*x2 + 3*x3^2");
        assert_eq!(lemma1_project(std::slice::from_ref(&f), 6), vec![f]);
        assert!(lemma1_project(&[p("x7")], 6).is_empty());
    }
}
