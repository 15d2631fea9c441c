use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use crate::poly::{ratio, Monomial, Polynomial, Rational, VarUniverse};

pub const SEED: u64 = 0x5EED_2026;

pub fn config() -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

/// Polynomials with up to `terms` terms and exponents below `max_exp`.
pub fn polynomial(u: VarUniverse, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (proptest::collection::vec(0..max_exp, u.len()), small_rational()),
        0..=terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(u, ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), c)))
    })
}

pub fn nonzero_polynomial(u: VarUniverse, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    polynomial(u, terms, max_exp).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn monomial(u: VarUniverse, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..max_exp, u.len()).prop_map(|e| Monomial::from_exps(&e))
}
