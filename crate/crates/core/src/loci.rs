//! Finite point loci in `Q^{n+d}` and the ideal data of their t-deformed family.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combin::{all_permutations, falling_factorial, factorial, stirling2, words, Word};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_equal};
use crate::poly::{rat, ratio, Polynomial, Rational, TermOrder, Var, VarUniverse};
use crate::presentations::{basis_a, ideal_jq};
use crate::symfun::{alternating_eh, alternating_eh_values, elementary};

/// Parameters of a specialized locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocusSpec {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    alpha: Vec<Rational>,
}

impl LocusSpec {
    pub fn new(n: usize, k: usize, d: usize, alpha: Vec<Rational>) -> Result<Self> {
        VarUniverse::for_instance(n, k, d)?;
        if alpha.len() != k {
            return Err(Error::InvalidParameters(format!(
                "expected {k} alpha values, got {}",
                alpha.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for a in &alpha {
            if !seen.insert(a) {
                return Err(Error::RepeatedAlpha(a.to_string()));
            }
        }
        Ok(Self { n, k, d, alpha })
    }

    /// `alpha = (1, 2, .., k)`.
    pub fn standard(n: usize, k: usize, d: usize) -> Result<Self> {
        Self::new(n, k, d, (1..=k as i64).map(rat).collect())
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    /// The ring `Q[x_1..x_n, y_1..y_d]` the locus lives in.
    pub fn universe(&self) -> VarUniverse {
        VarUniverse::new(self.n, self.d, 0)
    }

    pub fn expected_points(&self) -> BigUint {
        point_count(self.n, self.k, self.d)
    }
}

/// `k! d! / (k-d)! * Stir(n, d)`.
pub fn point_count(n: usize, k: usize, d: usize) -> BigUint {
    falling_factorial(k, d) * factorial(d) * stirling2(n, d)
}

/// `k` distinct rationals with numerators in `[-9, 9]` and denominators in `1..=3`.
pub fn random_alpha(k: usize, seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let a = ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3));
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// A point `(z_1..z_n; z_{n+1}..z_{n+d})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocusPoint {
    pub coords: Vec<Rational>,
    n: usize,
}

impl LocusPoint {
    pub fn x_part(&self) -> &[Rational] {
        &self.coords[..self.n]
    }

    pub fn y_part(&self) -> &[Rational] {
        &self.coords[self.n..]
    }

    /// Whether the point satisfies the three defining conditions for the given values.
    pub fn is_valid(&self, alpha: &[Rational]) -> bool {
        let ys: BTreeSet<&Rational> = self.y_part().iter().collect();
        let xs: BTreeSet<&Rational> = self.x_part().iter().collect();
        self.coords.iter().all(|z| alpha.contains(z))
            && ys.len() == self.y_part().len()
            && xs == ys
    }

    /// Permute the last `d` coordinates: position `i` receives old position `perm[i] - 1`.
    pub fn permute_y(&self, perm: &[usize]) -> LocusPoint {
        let mut coords = self.coords.clone();
        for (i, &p) in perm.iter().enumerate() {
            coords[self.n + i] = self.coords[self.n + p - 1].clone();
        }
        LocusPoint { coords, n: self.n }
    }
}

/// All points of the locus: an ordered choice of `d` distinct values for the
/// y-block, then a surjection from the x-positions onto the y-positions.
pub fn enumerate_points(spec: &LocusSpec) -> Vec<LocusPoint> {
    let (n, d) = (spec.n, spec.d);
    let surjections = words(n, d, d);
    let mut out = Vec::new();
    for choice in injections(d, spec.k) {
        let ys: Vec<Rational> = choice.iter().map(|&j| spec.alpha[j].clone()).collect();
        for g in &surjections {
            let mut coords: Vec<Rational> =
                g.letters().iter().map(|&l| ys[l as usize - 1].clone()).collect();
            coords.extend(ys.iter().cloned());
            out.push(LocusPoint { coords, n });
        }
    }
    out
}

/// Ordered `d`-tuples of distinct indices in `0..k`, lexicographic.
fn injections(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for j in 0..k {
            if !cur.contains(&j) {
                cur.push(j);
                go(d, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(d, k, &mut Vec::with_capacity(d), &mut out);
    out
}

/// Orbits of the y-block permutation action on a point set, together with whether
/// the action is free (no non-identity permutation fixes a point).
pub fn y_orbits(points: &[LocusPoint], d: usize) -> (Vec<Vec<LocusPoint>>, bool) {
    let perms = all_permutations(d);
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    let mut free = true;
    for p in points {
        if seen.contains(p) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for perm in &perms {
            let q = p.permute_y(perm);
            let identity = perm.iter().enumerate().all(|(i, &v)| v == i + 1);
            if !identity && q == *p {
                free = false;
            }
            orbit.insert(q);
        }
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect());
    }
    (orbits, free)
}

/// `prod_j (x_i - y_j)` expanded as `x_i^d - x_i^{d-1} e_1(y) + .. + (-1)^d e_d(y)`.
pub(crate) fn x_root_relation(i: usize, roots: &[Var], u: VarUniverse) -> Polynomial {
    let x = Polynomial::var(u, Var::X(i));
    let d = roots.len();
    let mut acc = Polynomial::zero(u);
    for j in 0..=d {
        let term = &x.pow((d - j) as u32) * &elementary(j as i64, roots, u).expect("nonnegative");
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Generators of the vanishing ideal of the locus in `Q[x, y]`.
///
/// The value family runs over `k-d < r <= k` and the x family over `n-d < r <= n`;
/// higher `r` are consequences of these.
pub fn locus_ideal_gens(spec: &LocusSpec) -> Vec<Polynomial> {
    let u = spec.universe();
    let (xs, ys) = (u.xs(), u.ys());
    let mut gens: Vec<Polynomial> = (spec.k - spec.d + 1..=spec.k)
        .map(|r| alternating_eh_values(r, &spec.alpha, &ys, u))
        .collect();
    gens.extend((spec.n - spec.d + 1..=spec.n).map(|r| alternating_eh(r, &xs, &ys, u)));
    gens.extend((1..=spec.n).map(|i| x_root_relation(i, &ys, u)));
    gens
}

/// Generators of the t-deformed ideal in `Q[x, y, t]`.
pub fn family_ideal_gens(n: usize, k: usize, d: usize) -> Result<Vec<Polynomial>> {
    let u = VarUniverse::for_instance(n, k, d)?;
    let (xs, ys, ts) = (u.xs(), u.ys(), u.ts());
    let mut gens: Vec<Polynomial> =
        (k - d + 1..=k).map(|r| alternating_eh(r, &ts, &ys, u)).collect();
    gens.extend((n - d + 1..=n).map(|r| alternating_eh(r, &xs, &ys, u)));
    gens.extend((1..=n).map(|i| x_root_relation(i, &ys, u)));
    Ok(gens)
}

/// Substitute `t_i -> values[i-1]`, landing in the t-free universe.
pub fn specialize_t(f: &Polynomial, values: &[Rational]) -> Result<Polynomial> {
    let u = f.universe();
    let target = VarUniverse::new(u.n, u.d, 0);
    let subst: HashMap<Var, Polynomial> = u
        .ts()
        .into_iter()
        .zip(values)
        .map(|(t, v)| (t, Polynomial::constant(target, v.clone())))
        .collect();
    f.substitute(&subst, target)
}

/// Membership in the t-family: `z = (x; y; t)` belongs iff some injection
/// `f: [d] -> [k]` has `y_i = t_{f(i)}` and some surjection `g: [n] -> [d]` has
/// `x_j = y_{g(j)}`.
pub fn family_points_membership(n: usize, k: usize, d: usize, z: &[Rational]) -> bool {
    if z.len() != n + d + k {
        return false;
    }
    let (x, rest) = z.split_at(n);
    let (y, t) = rest.split_at(d);
    let f_ok = injections(d, k).iter().any(|f| f.iter().enumerate().all(|(i, &j)| y[i] == t[j]));
    f_ok && words(n, d, d)
        .iter()
        .any(|g: &Word| g.letters().iter().enumerate().all(|(j, &l)| x[j] == y[l as usize - 1]))
}

/// Vanishing plus dimension certificate for the locus ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub vanishes: bool,
    pub dimension: Option<usize>,
    pub expected: usize,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.vanishes && self.dimension == Some(self.expected)
    }
}

/// Every generator vanishes on every point and the quotient dimension equals the
/// point count; together these certify that the generators cut out the locus ideal.
pub fn verify_vanishing_ideal(spec: &LocusSpec) -> Result<VanishingReport> {
    let gens = locus_ideal_gens(spec);
    let points = enumerate_points(spec);
    let vanishes = gens
        .iter()
        .all(|g| points.iter().all(|p| g.evaluate_at(&p.coords).is_zero()));
    let gb = buchberger(&gens, TermOrder::GradedLex)?;
    Ok(VanishingReport {
        vanishes,
        dimension: gb.quotient_dimension().finite(),
        expected: points.len(),
    })
}

/// Result of the orbit harmonics check for one locus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitHarmonicsReport {
    pub ideal_equal: bool,
    pub standard_monomials_match: bool,
    pub dimension: usize,
    pub expected: usize,
    pub elapsed_ms: u64,
}

impl OrbitHarmonicsReport {
    pub fn passed(&self) -> bool {
        self.ideal_equal && self.standard_monomials_match && self.dimension == self.expected
    }
}

/// Compare the associated graded ideal of the locus with the homogeneous
/// presentation, and its lex standard monomials with the expected monomial basis.
/// `elapsed_ms` is only filled in when `timed` is set, so reports stay reproducible.
pub fn verify_orbit_harmonics(spec: &LocusSpec, timed: bool) -> Result<OrbitHarmonicsReport> {
    let start = Instant::now();
    let gens = locus_ideal_gens(spec);
    let gb = buchberger(&gens, TermOrder::GradedLex)?;
    if gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dimension = gb.quotient_dimension().finite().unwrap_or(0);
    let gr: Vec<Polynomial> =
        gb.generators().iter().map(Polynomial::top_form).collect::<Result<_>>()?;
    let jq = ideal_jq(spec.n, spec.k, spec.d)?;
    let ideal_equal = ideal_equal(&gr, &jq.generators, TermOrder::GradedLex)?;

    let lex = buchberger(&jq.generators, TermOrder::Lex)?;
    let standard: BTreeSet<_> = lex.standard_monomials()?.into_iter().collect();
    let expected_basis: BTreeSet<_> = basis_a(spec.n, spec.k, spec.d)?.into_iter().collect();
    let expected = usize::try_from(spec.expected_points()).expect("point count fits in usize");
    Ok(OrbitHarmonicsReport {
        ideal_equal,
        standard_monomials_match: standard == expected_basis,
        dimension,
        expected,
        elapsed_ms: if timed { start.elapsed().as_millis() as u64 } else { 0 },
    })
}

#[cfg(test)]
mod tests;
