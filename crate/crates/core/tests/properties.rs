#[path = "support/engine_props.rs"]
mod engine_props;

#[test]
fn ring_axioms() {
    engine_props::ring_axioms().unwrap();
}

#[test]
fn print_parse_round_trip() {
    engine_props::print_parse_round_trip().unwrap();
}

#[test]
fn canonical_form() {
    engine_props::canonical_form().unwrap();
}

#[test]
fn groebner_closure_and_normal_forms() {
    engine_props::groebner_closure_and_normal_forms().unwrap();
}

#[test]
fn monomial_membership_matches_groebner() {
    engine_props::monomial_membership_matches_groebner().unwrap();
}

#[test]
fn certifier_accepts_identity_substitution() {
    engine_props::certifier_accepts_identity_substitution().unwrap();
}

#[test]
fn certifier_is_invariant_under_index_reversal() {
    engine_props::certifier_is_invariant_under_index_reversal().unwrap();
}

#[test]
fn projection_is_idempotent() {
    engine_props::projection_is_idempotent().unwrap();
}

#[test]
fn taylor_bound() {
    engine_props::taylor_bound().unwrap();
}

#[test]
fn pd_adds_over_disjoint_variables() {
    engine_props::pd_adds_over_disjoint_variables().unwrap();
}

#[test]
fn pd_is_invariant_under_index_reversal() {
    engine_props::pd_is_invariant_under_index_reversal().unwrap();
}
