//! Path ideals and the constructive upper bound on their arithmetical rank.

mod certificate;
mod lemma;
mod pairs;
mod params;

pub use certificate::{
    construct_certificate, AraCertificate, CertificateOptions, CertificateStatus, GapReport, Step, VerifyPolicy,
};
pub use lemma::{check_lemma1_hypothesis, lemma1_project, HypothesisCheck};
pub use pairs::{
    block_ideal, builtin_pair, get_block_pair, parse_pair_config, search_block_pair, search_family_size, BlockPair,
    PairEntry, PairProvenance, PairRegistry, PairSources, SearchOutcome, DEFAULT_SEARCH_BUDGET,
};
pub use params::{ara_formula, blocks, decompose_nt, padding_monomials, path_ideal, window, Block, Branch, PathParams};
