use serde::{Deserialize, Serialize};

use super::text::parse_rational;
use super::{Monomial, Polynomial, TermOrder, VarUniverse};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarsJson {
    pub n: usize,
    pub d: usize,
    pub k: usize,
}

/// Wire form `{"terms":[{"c":"p/q","e":[..]}],"vars":{"n":..,"d":..,"k":..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
    pub vars: VarsJson,
}

impl Polynomial {
    /// Terms are listed descending under `ord`.
    pub fn to_json(&self, ord: TermOrder) -> PolynomialJson {
        let u = self.universe();
        PolynomialJson {
            terms: self
                .sorted_terms(ord)
                .into_iter()
                .map(|(m, c)| TermJson {
                    c: c.to_string(),
                    e: m.exps().iter().map(|&e| e as u32).collect(),
                })
                .collect(),
            vars: VarsJson { n: u.n, d: u.d, k: u.k },
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Polynomial> {
        let u = VarUniverse::new(json.vars.n, json.vars.d, json.vars.k);
        let mut p = Polynomial::zero(u);
        for t in &json.terms {
            if t.e.len() != u.len() {
                return Err(Error::Parse(format!(
                    "exponent vector of length {} in a universe of {} variables",
                    t.e.len(),
                    u.len()
                )));
            }
            p.add_term(Monomial::from_exps(&t.e), parse_rational(&t.c)?);
        }
        Ok(p)
    }
}
