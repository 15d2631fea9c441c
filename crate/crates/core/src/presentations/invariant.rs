use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, VarUniverse};
use crate::symfun::{schur, schur_expansion, Partition};

/// A y-symmetric polynomial stored as `sum c * m(x, t) * s_lambda(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantElement {
    universe: VarUniverse,
    /// Keys: (x,t)-monomial with zero y-exponents, partition.
    expansion: BTreeMap<(Monomial, Partition), Rational>,
}

impl InvariantElement {
    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        let terms = schur_expansion(f).ok_or(Error::NotInvariant)?;
        Ok(Self {
            universe: f.universe(),
            expansion: terms.into_iter().map(|(m, l, c)| ((m, l), c)).collect(),
        })
    }

    pub fn universe(&self) -> VarUniverse {
        self.universe
    }

    pub fn expansion(&self) -> &BTreeMap<(Monomial, Partition), Rational> {
        &self.expansion
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let ys = self.universe.ys();
        let mut acc = Polynomial::zero(self.universe);
        let mut cache: BTreeMap<&Partition, Polynomial> = BTreeMap::new();
        for ((m, l), c) in &self.expansion {
            let s = cache.entry(l).or_insert_with(|| schur(l, &ys, self.universe));
            acc += &s.mul_monomial(m, c);
        }
        acc
    }

    /// The x-part of a coefficient monomial.
    pub fn x_part(&self, m: &Monomial) -> Vec<u32> {
        self.universe.x_range().map(|i| m.exp(i)).collect()
    }

    /// The t-part of a coefficient monomial.
    pub fn t_part(&self, m: &Monomial) -> Vec<u32> {
        self.universe.t_range().map(|i| m.exp(i)).collect()
    }
}
