//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial lives in a [`VarUniverse`]: an ordered block of
//! x-variables, then y-variables, then t-variables. The variable order
//! `x1 > .. > xn > y1 > .. > yd > t1 > .. > tk` is baked into the exponent
//! layout, so lexicographic comparison of exponent vectors is the lex order.

mod json;
mod order;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

pub use json::PolynomialJson;
pub use order::TermOrder;
pub use text::parse_rational;

use crate::error::{Error, Result};

/// Rational coefficient type used throughout the crate.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The three variable blocks of a polynomial ring `Q[x_1..x_n, y_1..y_d, t_1..t_k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarUniverse {
    pub n: usize,
    pub d: usize,
    pub k: usize,
}

impl VarUniverse {
    pub const fn new(n: usize, d: usize, k: usize) -> Self {
        Self { n, d, k }
    }

    /// Universe for a parameter triple `n >= k >= d >= 1`.
    pub fn for_instance(n: usize, k: usize, d: usize) -> Result<Self> {
        if !(n >= k && k >= d && d >= 1) {
            return Err(Error::InvalidParameters(format!(
                "need n >= k >= d >= 1, got (n,k,d) = ({n},{k},{d})"
            )));
        }
        Ok(Self { n, d, k })
    }

    pub fn len(&self) -> usize {
        self.n + self.d + self.k
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, var: Var) -> Option<usize> {
        match var {
            Var::X(i) if (1..=self.n).contains(&i) => Some(i - 1),
            Var::Y(i) if (1..=self.d).contains(&i) => Some(self.n + i - 1),
            Var::T(i) if (1..=self.k).contains(&i) => Some(self.n + self.d + i - 1),
            _ => None,
        }
    }

    pub fn var(&self, index: usize) -> Var {
        if index < self.n {
            Var::X(index + 1)
        } else if index < self.n + self.d {
            Var::Y(index - self.n + 1)
        } else {
            assert!(index < self.len(), "variable index {index} out of range for {self}");
            Var::T(index - self.n - self.d + 1)
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.len()).map(|i| self.var(i))
    }

    pub fn xs(&self) -> Vec<Var> {
        (1..=self.n).map(Var::X).collect()
    }

    pub fn ys(&self) -> Vec<Var> {
        (1..=self.d).map(Var::Y).collect()
    }

    pub fn ts(&self) -> Vec<Var> {
        (1..=self.k).map(Var::T).collect()
    }

    pub fn x_range(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn y_range(&self) -> std::ops::Range<usize> {
        self.n..self.n + self.d
    }

    pub fn t_range(&self) -> std::ops::Range<usize> {
        self.n + self.d..self.len()
    }
}

impl fmt::Display for VarUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x;{}, y;{}, t;{}]", self.n, self.d, self.k)
    }
}

/// A single variable, 1-indexed within its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    T(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::T(i) => write!(f, "t{i}"),
        }
    }
}

impl std::str::FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable name `{s}`"));
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let idx: usize = tail.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match head {
            "x" => Ok(Var::X(idx)),
            "y" => Ok(Var::Y(idx)),
            "t" => Ok(Var::T(idx)),
            _ => Err(bad()),
        }
    }
}

pub(crate) type Exps = SmallVec<[u16; 12]>;

/// Exponent vector indexed by the positions of a [`VarUniverse`].
///
/// The derived `Ord` is the lexicographic order on exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Exps);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial(exps.iter().map(|&e| to_u16(e)).collect())
    }

    pub fn var(universe: VarUniverse, var: Var, power: u32) -> Result<Self> {
        let idx = universe
            .index(var)
            .ok_or(Error::VariableOutsideUniverse(var, universe))?;
        let mut m = Self::one(universe.len());
        m.0[idx] = to_u16(power);
        Ok(m)
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        self.0[i] = to_u16(e);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        self.0[range].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other.0.iter().zip(&self.0).map(|(&a, &b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Whether every exponent outside `range` is zero.
    pub fn supported_in(&self, range: std::ops::Range<usize>) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || range.contains(&i))
    }

    /// Index of the only variable with a nonzero exponent, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

fn to_u16(e: u32) -> u16 {
    u16::try_from(e).expect("exponent exceeds u16::MAX")
}

/// A polynomial in `Q[x, y, t]`, stored as a map from monomials to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    universe: VarUniverse,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(universe: VarUniverse) -> Self {
        Self { universe, terms: BTreeMap::new() }
    }

    pub fn one(universe: VarUniverse) -> Self {
        Self::constant(universe, Rational::one())
    }

    pub fn constant(universe: VarUniverse, c: Rational) -> Self {
        Self::monomial(universe, Monomial::one(universe.len()), c)
    }

    pub fn monomial(universe: VarUniverse, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), universe.len(), "monomial length does not match {universe}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { universe, terms }
    }

    /// The polynomial consisting of a single variable.
    ///
    /// Panics if `var` is not part of `universe`.
    pub fn var(universe: VarUniverse, var: Var) -> Self {
        let m = Monomial::var(universe, var, 1).unwrap_or_else(|e| panic!("{e}"));
        Self::monomial(universe, m, Rational::one())
    }

    pub fn from_terms(
        universe: VarUniverse,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(universe);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn universe(&self) -> VarUniverse {
        self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: TermOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.universe.len()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.universe.len());
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Sum of the terms of maximal total degree.
    pub fn top_form(&self) -> Result<Polynomial> {
        let top = self
            .total_degree()
            .ok_or(Error::ZeroPolynomial("top form"))?;
        Ok(Self {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    pub fn homogeneous_component(&self, degree: u32) -> Polynomial {
        Self {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn leading_monomial(&self, ord: TermOrder) -> Result<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    pub fn leading_term(&self, ord: TermOrder) -> Result<(&Monomial, &Rational)> {
        let lead = match ord {
            TermOrder::Lex => self.terms.iter().next_back(),
            TermOrder::GradedLex => self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0)),
        };
        lead.ok_or(Error::ZeroPolynomial("leading monomial"))
    }

    pub fn leading_coefficient(&self, ord: TermOrder) -> Result<&Rational> {
        self.leading_term(ord).map(|(_, c)| c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.universe);
        }
        Self {
            universe: self.universe,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.universe);
        }
        Self {
            universe: self.universe,
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    /// Divide by the leading coefficient under `ord`.
    pub fn monic(&self, ord: TermOrder) -> Result<Polynomial> {
        let lc = self.leading_coefficient(ord)?.clone();
        Ok(self.scale(&lc.recip()))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.universe);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_integer_polynomial(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest variable index occurring in the polynomial, if any.
    pub fn occurring_vars(&self) -> Vec<Var> {
        let mut seen = vec![false; self.universe.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.universe.var(i))
            .collect()
    }

    pub fn degree_in_var(&self, var: Var) -> u32 {
        match self.universe.index(var) {
            Some(i) => self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Exact value at a point. Every occurring variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<Var, Rational>) -> Result<Rational> {
        let mut values = Vec::with_capacity(self.universe.len());
        for (i, var) in self.universe.vars().enumerate() {
            let used = self.terms.keys().any(|m| m.exp(i) > 0);
            match point.get(&var) {
                Some(v) => values.push(Some(v.clone())),
                None if used => return Err(Error::MissingAssignment(var)),
                None => values.push(None),
            }
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let v = values[i].as_ref().expect("checked above");
                    term *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Value at a point given as a full coordinate vector in universe order.
    pub fn evaluate_at(&self, coords: &[Rational]) -> Rational {
        assert_eq!(coords.len(), self.universe.len());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term *= num_traits::pow(coords[i].clone(), e as usize);
                }
            }
            total += term;
        }
        total
    }

    /// Ring homomorphism into `target`: every variable in `subst` is replaced by its
    /// image, every other occurring variable is carried over unchanged (it must exist
    /// in `target`).
    pub fn substitute(
        &self,
        subst: &HashMap<Var, Polynomial>,
        target: VarUniverse,
    ) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.universe.len());
        let used = self.occurring_vars();
        for var in self.universe.vars() {
            let img = match subst.get(&var) {
                Some(p) => {
                    if p.universe != target {
                        return Err(Error::UniverseMismatch(p.universe, target));
                    }
                    p.clone()
                }
                None if used.contains(&var) => {
                    if target.index(var).is_none() {
                        return Err(Error::VariableOutsideUniverse(var, target));
                    }
                    Polynomial::var(target, var)
                }
                None => Polynomial::zero(target),
            };
            images.push(img);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .into_iter()
            .map(|p| vec![Polynomial::one(target), p])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            out += &term;
        }
        Ok(out)
    }

    /// Permute variables by index: variable at position `i` becomes position `perm[i]`.
    /// Both universes must have the same size.
    pub fn permute_indices(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.universe.len());
        let mut out = Polynomial::zero(self.universe);
        for (m, c) in &self.terms {
            let mut exps: Exps = SmallVec::from_elem(0, m.len());
            for (i, &e) in m.exps().iter().enumerate() {
                exps[perm[i]] = e;
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    /// Move the polynomial into another universe, mapping x_i, y_i, t_i to the same
    /// names. Fails if a variable that occurs has no counterpart in `target`.
    pub fn change_universe(&self, target: VarUniverse) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.universe.len());
        for var in self.universe.vars() {
            map.push(target.index(var));
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps: Exps = SmallVec::from_elem(0, target.len());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(Error::VariableOutsideUniverse(self.universe.var(i), target))
                    }
                }
            }
            out.terms.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Multiply by the least common denominator and divide by the content, making the
    /// coefficients coprime integers with positive leading coefficient under `ord`.
    pub fn primitive(&self, ord: TermOrder) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            gcd = num_integer::Integer::gcd(&gcd, &v);
        }
        let mut factor = Rational::new(lcm, gcd);
        if self.leading_coefficient(ord).expect("nonzero").is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Polynomial division by a single divisor under `ord`: returns `(q, r)` with
    /// `self = q * divisor + r` and no term of `r` divisible by the leading monomial of
    /// `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial, ord: TermOrder) -> Result<(Polynomial, Polynomial)> {
        let (lm, lc) = divisor.leading_term(ord)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut quotient = Polynomial::zero(self.universe);
        let mut remainder = Polynomial::zero(self.universe);
        let mut work = self.clone();
        while !work.is_zero() {
            let (m, c) = {
                let (m, c) = work.leading_term(ord)?;
                (m.clone(), c.clone())
            };
            match lm.quotient_of(&m) {
                Some(q) => {
                    let coef = &c / &lc;
                    work -= &divisor.mul_monomial(&q, &coef);
                    quotient.add_term(q, coef);
                }
                None => {
                    work.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        Ok((quotient, remainder))
    }

    fn check_universe(&self, other: &Polynomial) {
        assert_eq!(
            self.universe, other.universe,
            "arithmetic between polynomials of different universes"
        );
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl std::ops::AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.check_universe(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        self.check_universe(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.check_universe(rhs);
        let mut out = Polynomial::zero(self.universe);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            universe: self.universe,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(TermOrder::Lex))
    }
}
