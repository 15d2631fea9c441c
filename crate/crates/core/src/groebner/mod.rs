//! Reduced Gröbner bases, normal forms, standard monomials and associated graded ideals.

mod engine;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, PolynomialJson, TermOrder, Var, VarUniverse};
use crate::univariate::QPoly;
use engine::{Encoding, IPoly};

/// A reduced, monic Gröbner basis.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    universe: VarUniverse,
    order: TermOrder,
    generators: Vec<Polynomial>,
    leads: Vec<Monomial>,
    internal: Vec<IPoly>,
}

/// Dimension of `Q[vars] / I` over Q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuotientDimension {
    Finite(usize),
    /// Variables without a pure-power leading monomial.
    Infinite(Vec<String>),
}

impl QuotientDimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(n) => Some(*n),
            QuotientDimension::Infinite(_) => None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub order: TermOrder,
    pub generators: Vec<PolynomialJson>,
}

/// Run Buchberger's algorithm on `gens`.
pub fn buchberger(gens: &[Polynomial], order: TermOrder) -> Result<GroebnerBasis> {
    let universe = common_universe(gens)?;
    let enc = Encoding { order, nvars: universe.len() };
    let inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| enc.encode_poly(g))
        .collect();
    if inputs.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let internal = engine::run(&enc, inputs).unwrap_or_else(|| vec![engine::one(&enc)]);
    Ok(GroebnerBasis::from_internal(universe, order, internal))
}

fn common_universe(gens: &[Polynomial]) -> Result<VarUniverse> {
    let first = gens.first().ok_or(Error::ZeroIdeal)?.universe();
    for g in gens {
        if g.universe() != first {
            return Err(Error::UniverseMismatch(first, g.universe()));
        }
    }
    Ok(first)
}

impl GroebnerBasis {
    fn from_internal(universe: VarUniverse, order: TermOrder, internal: Vec<IPoly>) -> Self {
        let enc = Encoding { order, nvars: universe.len() };
        let generators: Vec<Polynomial> =
            internal.iter().map(|p| enc.decode_poly(universe, p)).collect();
        let leads = internal.iter().map(|p| enc.decode(p.lead())).collect();
        Self { universe, order, generators, leads, internal }
    }

    fn encoding(&self) -> Encoding {
        Encoding { order: self.order, nvars: self.universe.len() }
    }

    pub fn universe(&self) -> VarUniverse {
        self.universe
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Generators sorted ascending by leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(Monomial::is_one)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.universe(), self.universe, "normal form across universes");
        let enc = self.encoding();
        let all: Vec<usize> = (0..self.internal.len()).collect();
        let r = engine::reduce(&enc, &enc.encode_poly(f), &self.internal, &all);
        enc.decode_poly(self.universe, &r)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    /// S-pair audit: `None` if every S-polynomial reduces to zero, otherwise the
    /// offending pair of generator indices.
    pub fn audit(&self) -> Option<(usize, usize)> {
        engine::audit(&self.encoding(), &self.internal)
    }

    /// Whether the basis is reduced and monic.
    pub fn is_reduced(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            g.leading_coefficient(self.order).is_ok_and(|c| *c == crate::poly::rat(1))
                && g.terms().all(|(m, _)| {
                    self.leads.iter().enumerate().all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }

    /// Standard monomials of the whole ring.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let all: Vec<usize> = (0..self.universe.len()).collect();
        self.standard_monomials_in(&all)
    }

    /// Standard monomials involving only the variables at the given indices.
    pub fn standard_monomials_in(&self, vars: &[usize]) -> Result<Vec<Monomial>> {
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let bounds = self.pure_power_bounds(vars)?;
        let mut out = Vec::new();
        let mut m = Monomial::one(self.universe.len());
        self.enumerate(vars, &bounds, 0, &mut m, None, &mut out);
        out.sort_by(|a, b| self.order.cmp(a, b));
        Ok(out)
    }

    /// Standard monomials in the given variables of total degree at most `max_degree`.
    pub fn standard_monomials_up_to(&self, vars: &[usize], max_degree: u32) -> Vec<Monomial> {
        if self.is_unit() {
            return Vec::new();
        }
        let bounds: Vec<Option<u32>> = vars
            .iter()
            .map(|&v| self.leads.iter().filter_map(|l| pure_power(l, v)).min())
            .collect();
        let mut out = Vec::new();
        let mut m = Monomial::one(self.universe.len());
        self.enumerate(vars, &bounds, 0, &mut m, Some(max_degree), &mut out);
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }

    fn pure_power_bounds(&self, vars: &[usize]) -> Result<Vec<Option<u32>>> {
        let bounds: Vec<Option<u32>> = vars
            .iter()
            .map(|&v| self.leads.iter().filter_map(|l| pure_power(l, v)).min())
            .collect();
        let missing: Vec<Var> = vars
            .iter()
            .zip(&bounds)
            .filter(|(_, b)| b.is_none())
            .map(|(&v, _)| self.universe.var(v))
            .collect();
        if missing.is_empty() {
            Ok(bounds)
        } else {
            Err(Error::InfiniteQuotient(missing))
        }
    }

    fn enumerate(
        &self,
        vars: &[usize],
        bounds: &[Option<u32>],
        pos: usize,
        m: &mut Monomial,
        max_degree: Option<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == vars.len() {
            out.push(m.clone());
            return;
        }
        let v = vars[pos];
        let mut e = 0;
        loop {
            if bounds[pos].is_some_and(|b| e >= b) {
                break;
            }
            m.set_exp(v, e);
            if max_degree.is_some_and(|d| m.degree() > d) || !self.is_standard(m) {
                break;
            }
            self.enumerate(vars, bounds, pos + 1, m, max_degree, out);
            e += 1;
        }
        m.set_exp(v, 0);
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        match self.standard_monomials() {
            Ok(ms) => QuotientDimension::Finite(ms.len()),
            Err(Error::InfiniteQuotient(vars)) => {
                QuotientDimension::Infinite(vars.iter().map(Var::to_string).collect())
            }
            Err(e) => unreachable!("{e}"),
        }
    }

    /// `sum q^deg(m)` over standard monomials; requires a finite quotient.
    pub fn hilbert_series(&self) -> Result<QPoly> {
        Ok(QPoly::from_degrees(self.standard_monomials()?.iter().map(Monomial::degree)))
    }

    /// Hilbert series truncated at `max_degree`; defined for infinite quotients too.
    pub fn hilbert_series_truncated(&self, max_degree: u32) -> QPoly {
        let all: Vec<usize> = (0..self.universe.len()).collect();
        QPoly::from_degrees(
            self.standard_monomials_up_to(&all, max_degree).iter().map(Monomial::degree),
        )
    }

    pub fn to_json(&self) -> GroebnerJson {
        GroebnerJson {
            order: self.order,
            generators: self.generators.iter().map(|g| g.to_json(self.order)).collect(),
        }
    }
}

fn pure_power(m: &Monomial, var: usize) -> Option<u32> {
    (m.pure_power_var() == Some(var)).then(|| m.exp(var))
}

/// Generators of the associated graded ideal: top forms of a graded-lex Gröbner basis.
pub fn associated_graded(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let gb = buchberger(gens, TermOrder::GradedLex)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    gb.generators().iter().map(Polynomial::top_form).collect()
}

/// Ideal equality by comparing reduced Gröbner bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], order: TermOrder) -> Result<bool> {
    let ga = buchberger(a, order)?;
    let gb = buchberger(b, order)?;
    Ok(ga.generators == gb.generators)
}
