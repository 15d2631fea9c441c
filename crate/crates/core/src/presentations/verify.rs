use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use super::{basis_a_in, basis_c, basis_c_in, ideal_i, ideal_jq, ideal_jqt, rank};
use crate::combin::substaircase_sequences;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, Polynomial, Rational, TermOrder, VarUniverse};
use crate::symfun::{complete, elementary, gaussian_binomial, reynolds_y};
use crate::univariate::QPoly;

fn usize_of(n: num_bigint::BigUint) -> usize {
    usize::try_from(n).expect("count fits in usize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub leading_t_free: bool,
    pub standard_monomials_match: bool,
    pub rank: usize,
    pub expected: usize,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.leading_t_free && self.standard_monomials_match && self.rank == self.expected
    }
}

/// Lex basis of the t-deformed ideal with t smallest: leading monomials must avoid t,
/// and the t-free standard monomials must be exactly the A monomials.
pub fn verify_at_freeness(n: usize, k: usize, d: usize) -> Result<FreenessReport> {
    let jqt = ideal_jqt(n, k, d)?;
    let u = jqt.universe;
    let gb = buchberger(&jqt.generators, TermOrder::Lex)?;
    let xy = 0..u.n + u.d;
    let leading_t_free = gb.leading_monomials().iter().all(|m| m.supported_in(xy.clone()));
    let vars: Vec<usize> = xy.collect();
    let standard: BTreeSet<Monomial> = match gb.standard_monomials_in(&vars) {
        Ok(v) => v.into_iter().collect(),
        Err(Error::InfiniteQuotient(_)) => BTreeSet::new(),
        Err(e) => return Err(e),
    };
    let expected: BTreeSet<Monomial> = basis_a_in(n, k, d, u)?.into_iter().collect();
    Ok(FreenessReport {
        leading_t_free,
        standard_monomials_match: standard == expected,
        rank: standard.len(),
        expected: expected.len(),
    })
}

/// Coordinates of normal forms with respect to the standard monomials of a
/// finite-dimensional quotient.
struct Coordinates {
    gb: GroebnerBasis,
    index: BTreeMap<Monomial, usize>,
    standard: Vec<Monomial>,
}

impl Coordinates {
    fn new(gb: GroebnerBasis) -> Result<Self> {
        let standard = gb.standard_monomials()?;
        let index = standard.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self { gb, index, standard })
    }

    fn of(&self, f: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.standard.len()];
        for (m, c) in self.gb.normal_form(f).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantQuotientReport {
    pub quotient_dimension: usize,
    pub invariant_dimension: usize,
    pub expected: usize,
    pub basis_size: usize,
    pub basis_in_invariants: bool,
    pub determinant_nonzero: bool,
}

impl InvariantQuotientReport {
    pub fn passed(&self) -> bool {
        self.invariant_dimension == self.expected
            && self.basis_size == self.expected
            && self.basis_in_invariants
            && self.determinant_nonzero
    }
}

/// Inside `Q[x, y] / Jq`: symmetrize the A basis to get the invariant subspace,
/// then check that the Schur-type elements form a basis of it.
pub fn verify_invariant_quotient(n: usize, k: usize, d: usize) -> Result<InvariantQuotientReport> {
    let jq = ideal_jq(n, k, d)?;
    let coords = Coordinates::new(buchberger(&jq.generators, TermOrder::Lex)?)?;
    let u = jq.universe;
    let symmetrized: Matrix = coords
        .standard
        .iter()
        .map(|m| coords.of(&reynolds_y(&Polynomial::monomial(u, m.clone(), crate::poly::rat(1)))))
        .collect();
    let invariant_dimension = linalg::rank(&symmetrized);
    let c: Matrix = basis_c(n, k, d)?.iter().map(|e| coords.of(&e.poly)).collect();
    let mut both = symmetrized;
    both.extend(c.iter().cloned());
    let basis_in_invariants = linalg::rank(&both) == invariant_dimension;

    let mut reduced = c.clone();
    let pivots = linalg::rref(&mut reduced);
    let determinant_nonzero = pivots.len() == c.len() && {
        let square: Matrix =
            c.iter().map(|row| pivots.iter().map(|&j| row[j].clone()).collect()).collect();
        !linalg::determinant(&square).is_zero()
    };
    Ok(InvariantQuotientReport {
        quotient_dimension: coords.standard.len(),
        invariant_dimension,
        expected: usize_of(rank(n, k, d)),
        basis_size: c.len(),
        basis_in_invariants,
        determinant_nonzero,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub invariant_series: QPoly,
    pub product: QPoly,
    pub matches: bool,
}

/// Graded dimension of the invariant part of `Q[x, y] / Jq`, against the product
/// of the substaircase generating function and the Gaussian binomial.
pub fn hilbert_factorization(n: usize, k: usize, d: usize) -> Result<HilbertReport> {
    let jq = ideal_jq(n, k, d)?;
    let coords = Coordinates::new(buchberger(&jq.generators, TermOrder::Lex)?)?;
    let u = jq.universe;
    let mut by_degree: BTreeMap<u32, Matrix> = BTreeMap::new();
    for m in &coords.standard {
        let row = coords.of(&reynolds_y(&Polynomial::monomial(u, m.clone(), crate::poly::rat(1))));
        by_degree.entry(m.degree()).or_default().push(row);
    }
    let mut coeffs = Vec::new();
    for (deg, rows) in &by_degree {
        let deg = *deg as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0.into());
        }
        coeffs[deg] = linalg::rank(rows).into();
    }
    let invariant_series = QPoly::from_coeffs(coeffs);
    let staircase = QPoly::from_degrees(substaircase_sequences(n, d).iter().map(|a| a.iter().sum()));
    let product = &staircase * &gaussian_binomial(k, d);
    Ok(HilbertReport { matches: invariant_series == product, invariant_series, product })
}

/// `f` expressed in a basis of a quotient of `Q[x, y, t]` that is free over `Q[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureConstant {
    pub left: usize,
    pub right: usize,
    /// One coefficient per basis element, polynomials in t.
    #[serde(serialize_with = "serialize_polys")]
    pub coefficients: Vec<Polynomial>,
}

fn serialize_polys<S: serde::Serializer>(v: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

/// Solves `f = sum_c coef_c(t) * c` modulo a lex basis whose leading monomials are
/// t-free, degree by degree in t against the constant part of the coefficient matrix.
struct TSolver<'a> {
    gb: &'a GroebnerBasis,
    columns: Vec<BTreeMap<Monomial, Polynomial>>,
    pivot_rows: Vec<Monomial>,
    left_inverse: Matrix,
}

impl<'a> TSolver<'a> {
    fn new(gb: &'a GroebnerBasis, basis: &[Polynomial]) -> Result<Self> {
        let u = gb.universe();
        let xy = 0..u.n + u.d;
        if !gb.leading_monomials().iter().all(|m| m.supported_in(xy.clone())) {
            return Err(Error::InvalidParameters(
                "a leading monomial involves t; quotient is not visibly free".into(),
            ));
        }
        let columns: Vec<_> = basis.iter().map(|b| split_t(&gb.normal_form(b))).collect();
        let rows: Vec<Monomial> =
            columns.iter().flat_map(|c| c.keys().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
        // transpose of the constant part, so the pivots of its echelon form pick rows
        let mut constant_t: Matrix = columns
            .iter()
            .map(|col| {
                rows.iter()
                    .map(|r| col.get(r).map_or_else(Rational::zero, Polynomial::constant_term))
                    .collect()
            })
            .collect();
        let original = constant_t.clone();
        let pivots = linalg::rref(&mut constant_t);
        if pivots.len() < basis.len() {
            return Err(Error::InvalidParameters("basis is dependent at t = 0".into()));
        }
        let square: Matrix = pivots
            .iter()
            .map(|&r| original.iter().map(|col| col[r].clone()).collect())
            .collect();
        let left_inverse = linalg::inverse(&square).expect("pivot rows are independent");
        Ok(Self {
            gb,
            columns,
            pivot_rows: pivots.iter().map(|&r| rows[r].clone()).collect(),
            left_inverse,
        })
    }

    fn solve(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        let u = self.gb.universe();
        let target = split_t(&self.gb.normal_form(f));
        let max_degree = f.total_degree().unwrap_or(0);
        let mut coef = vec![Polynomial::zero(u); self.columns.len()];
        for j in 0..=max_degree {
            let residual: Vec<Polynomial> = self
                .pivot_rows
                .iter()
                .map(|r| {
                    let mut acc = target.get(r).cloned().unwrap_or_else(|| Polynomial::zero(u));
                    for (col, c) in self.columns.iter().zip(&coef) {
                        if let Some(e) = col.get(r) {
                            acc -= &(e * c);
                        }
                    }
                    acc.homogeneous_component(j)
                })
                .collect();
            for (i, row) in self.left_inverse.iter().enumerate() {
                for (x, r) in row.iter().zip(&residual) {
                    if !x.is_zero() {
                        coef[i] += &r.scale(x);
                    }
                }
            }
        }
        let mut check = target;
        for (col, c) in self.columns.iter().zip(&coef) {
            for (m, e) in col {
                let entry = check.entry(m.clone()).or_insert_with(|| Polynomial::zero(u));
                *entry -= &(e * c);
            }
        }
        check.values().all(Polynomial::is_zero).then_some(coef)
    }
}

/// Group a polynomial by its (x, y)-part; values are polynomials in t alone.
fn split_t(f: &Polynomial) -> BTreeMap<Monomial, Polynomial> {
    let u = f.universe();
    let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut xy = m.clone();
        let mut t = Monomial::one(u.len());
        for i in u.t_range() {
            t.set_exp(i, m.exp(i));
            xy.set_exp(i, 0);
        }
        out.entry(xy).or_insert_with(|| Polynomial::zero(u)).add_term(t, c.clone());
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Structure constants of all products `basis[i] * basis[j]` with `i <= j`, or the
/// first pair whose product is not in the `Q[t]`-span of the basis.
pub fn structure_constants(
    gb: &GroebnerBasis,
    basis: &[Polynomial],
) -> Result<std::result::Result<Vec<StructureConstant>, (usize, usize)>> {
    let solver = TSolver::new(gb, basis)?;
    let pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|i| (i..basis.len()).map(move |j| (i, j))).collect();
    use rayon::prelude::*;
    let solved: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| {
            solver
                .solve(&(&basis[i] * &basis[j]))
                .map(|coefficients| StructureConstant { left: i, right: j, coefficients })
                .ok_or((i, j))
        })
        .collect();
    Ok(solved.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityReport {
    pub pairs: usize,
    pub spanned: bool,
    pub integral: bool,
    pub offending_pair: Option<(usize, usize)>,
    pub groebner_integral: bool,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.spanned && self.integral
    }
}

/// Every product of two Schur-type basis elements, reduced modulo the t-deformed
/// ideal, is an integer `Z[t]`-combination of the basis.
pub fn verify_integrality(n: usize, k: usize, d: usize) -> Result<IntegralityReport> {
    let jqt = ideal_jqt(n, k, d)?;
    let gb = buchberger(&jqt.generators, TermOrder::Lex)?;
    let basis: Vec<Polynomial> =
        basis_c_in(n, k, d, jqt.universe)?.into_iter().map(|e| e.poly).collect();
    integrality_of(&gb, &basis)
}

pub(crate) fn integrality_of(gb: &GroebnerBasis, basis: &[Polynomial]) -> Result<IntegralityReport> {
    let groebner_integral = gb.generators().iter().all(Polynomial::is_integer_polynomial);
    let pairs = basis.len() * (basis.len() + 1) / 2;
    Ok(match structure_constants(gb, basis)? {
        Ok(consts) => {
            let offending = consts
                .iter()
                .find(|s| !s.coefficients.iter().all(Polynomial::is_integer_polynomial));
            IntegralityReport {
                pairs,
                spanned: true,
                integral: offending.is_none(),
                offending_pair: offending.map(|s| (s.left, s.right)),
                groebner_integral,
            }
        }
        Err(pair) => IntegralityReport {
            pairs,
            spanned: false,
            integral: false,
            offending_pair: Some(pair),
            groebner_integral,
        },
    })
}

/// For `1 <= i <= d`: whether `h_{a+i}(y_i, .., y_d)` lies in `(h_r(y) : r > a)`.
pub fn verify_h_integrality(a: usize, d: usize) -> Result<Vec<bool>> {
    let u = VarUniverse::new(0, d, 0);
    let ys = u.ys();
    let gens: Vec<Polynomial> = (a + 1..=a + d).map(|r| complete(r as i64, &ys, u)).collect();
    let gb = buchberger(&gens, TermOrder::GradedLex)?;
    Ok((1..=d)
        .map(|i| gb.contains(&complete((a + i) as i64, &ys[i - 1..], u)))
        .collect())
}

/// For `1 <= r <= k`: whether `e_r(y) - e_r(t)` lies in the `d = k` ideal.
pub fn elementary_differences_in_ideal(n: usize, k: usize) -> Result<Vec<bool>> {
    let ideal = ideal_i(n, k, k)?;
    let u = ideal.universe;
    let gb = buchberger(&ideal.generators, TermOrder::GradedLex)?;
    (1..=k as i64)
        .map(|r| {
            let f = &elementary(r, &u.ys(), u)? - &elementary(r, &u.ts(), u)?;
            Ok(gb.contains(&f))
        })
        .collect()
}
