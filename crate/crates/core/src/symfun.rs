//! Symmetric polynomials in a block of variables, partitions in a box, and
//! symmetrization over the y-block.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combin::perm::all_permutations;
use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Polynomial, Rational, Var, VarUniverse};
use crate::univariate::QPoly;

/// A weakly decreasing list of positive parts; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Trailing zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not a partition")));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn var_polys(universe: VarUniverse, vars: &[Var]) -> Vec<Polynomial> {
    vars.iter().map(|&v| Polynomial::var(universe, v)).collect()
}

/// Elementary symmetric polynomial `e_r` of `vars`.
pub fn elementary(r: i64, vars: &[Var], universe: VarUniverse) -> Result<Polynomial> {
    if r < 0 {
        return Err(Error::NegativeDegree(r));
    }
    let r = r as usize;
    // e[j] holds e_j of the variables processed so far.
    let mut e = vec![Polynomial::one(universe)];
    for x in var_polys(universe, vars) {
        e.push(Polynomial::zero(universe));
        for j in (1..e.len()).rev() {
            let add = &e[j - 1] * &x;
            e[j] += &add;
        }
    }
    Ok(e.into_iter().nth(r).unwrap_or_else(|| Polynomial::zero(universe)))
}

/// Complete homogeneous symmetric polynomial `h_r` of `vars`; zero for negative `r`.
pub fn complete(r: i64, vars: &[Var], universe: VarUniverse) -> Polynomial {
    if r < 0 {
        return Polynomial::zero(universe);
    }
    let r = r as usize;
    let mut h = vec![Polynomial::one(universe)];
    h.extend((0..r).map(|_| Polynomial::zero(universe)));
    for x in var_polys(universe, vars) {
        // h_j(new) = h_j(old) + x * h_{j-1}(new)
        for j in 1..=r {
            let add = &h[j - 1] * &x;
            h[j] += &add;
        }
    }
    h.swap_remove(r)
}

/// Every `h_0..=h_max` of `vars`.
pub fn complete_all(max: usize, vars: &[Var], universe: VarUniverse) -> Vec<Polynomial> {
    let mut h = vec![Polynomial::one(universe)];
    h.extend((0..max).map(|_| Polynomial::zero(universe)));
    for x in var_polys(universe, vars) {
        for j in 1..=max {
            let add = &h[j - 1] * &x;
            h[j] += &add;
        }
    }
    h
}

/// Schur polynomial by the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur(lambda: &Partition, vars: &[Var], universe: VarUniverse) -> Polynomial {
    let l = lambda.len();
    if l == 0 {
        return Polynomial::one(universe);
    }
    let max = (lambda.part(0) as usize) + l;
    let h = complete_all(max, vars, universe);
    let entry = |i: usize, j: usize| -> Polynomial {
        let idx = lambda.part(i) as i64 - i as i64 + j as i64;
        if idx < 0 {
            Polynomial::zero(universe)
        } else {
            h[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<Polynomial>> = (0..l).map(|i| (0..l).map(|j| entry(i, j)).collect()).collect();
    poly_determinant(&matrix, universe)
}

/// Determinant of a small polynomial matrix by Laplace expansion along the first row.
pub fn poly_determinant(m: &[Vec<Polynomial>], universe: VarUniverse) -> Polynomial {
    fn go(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize], universe: VarUniverse) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(universe);
        }
        let r = rows[0];
        let mut acc = Polynomial::zero(universe);
        for (pos, &c) in cols.iter().enumerate() {
            if m[r][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = go(m, &rows[1..], &rest, universe);
            let term = &m[r][c] * &minor;
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    go(m, &idx, &idx, universe)
}

/// All partitions with at most `rows` parts, each at most `cols`, in lexicographic
/// order of their padded part lists.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn go(rows: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix.clone()).expect("weakly decreasing"));
            return;
        }
        for p in 0..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// The `d`-subset `{λ_i + d - i + 1}` of `[k]` attached to a partition in the
/// `d x (k-d)` box, returned ascending.
pub fn subset_of_partition(lambda: &Partition, d: usize, k: usize) -> Result<Vec<usize>> {
    if d > k || !lambda.fits_in_box(d, (k - d) as u32) {
        return Err(Error::OutsideBox(lambda.parts().to_vec(), d, k.saturating_sub(d)));
    }
    let mut s: Vec<usize> = (1..=d).map(|i| lambda.part(i - 1) as usize + d - i + 1).collect();
    s.reverse();
    Ok(s)
}

/// Inverse of [`subset_of_partition`].
pub fn partition_of_subset(subset: &[usize], d: usize, k: usize) -> Result<Partition> {
    let sorted: BTreeSet<usize> = subset.iter().copied().collect();
    if sorted.len() != d || subset.len() != d || sorted.iter().any(|&s| s == 0 || s > k) {
        return Err(Error::InvalidParameters(format!(
            "{subset:?} is not a {d}-subset of [{k}]"
        )));
    }
    let desc: Vec<usize> = sorted.into_iter().rev().collect();
    Partition::new((1..=d).map(|i| (desc[i - 1] + i - 1 - d) as u32).collect())
}

/// Gaussian binomial `[k choose d]_q` by the q-Pascal recurrence.
pub fn gaussian_binomial(k: usize, d: usize) -> QPoly {
    if d > k {
        return QPoly::zero();
    }
    // row[j] = [i choose j]_q
    let mut row = vec![QPoly::one()];
    for i in 1..=k {
        let mut next = vec![QPoly::one(); i + 1];
        for j in 1..i {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            next[j] = &row[j - 1] + &row[j].shift(j);
        }
        row = next;
    }
    row.swap_remove(d)
}

/// Average over all permutations of the y-block.
pub fn reynolds_y(f: &Polynomial) -> Polynomial {
    let u = f.universe();
    let d = u.d;
    if d <= 1 {
        return f.clone();
    }
    let mut acc = Polynomial::zero(u);
    for perm in all_permutations(d) {
        acc += &permute_y(f, &perm);
    }
    let fact: BigInt = (1..=d).map(BigInt::from).product();
    acc.scale(&Rational::new(BigInt::one(), fact))
}

/// Apply a permutation of the y-block: `y_i ↦ y_{perm[i-1]}` (1-based values).
pub fn permute_y(f: &Polynomial, perm: &[usize]) -> Polynomial {
    let u = f.universe();
    let mut idx: Vec<usize> = (0..u.len()).collect();
    for (i, &p) in perm.iter().enumerate() {
        idx[u.n + i] = u.n + p - 1;
    }
    f.permute_indices(&idx)
}

/// Whether `f` is fixed by every transposition of adjacent y-variables.
pub fn is_y_symmetric(f: &Polynomial) -> bool {
    let d = f.universe().d;
    (1..d).all(|i| {
        let mut perm: Vec<usize> = (1..=d).collect();
        perm.swap(i - 1, i);
        permute_y(f, &perm) == *f
    })
}

/// Expand a y-symmetric polynomial in the Schur basis of the y-block, with
/// coefficients in the x- and t-variables. Returns (x,t)-monomial × partition →
/// coefficient, or `None` if `f` is not y-symmetric.
pub fn schur_expansion(f: &Polynomial) -> Option<Vec<(Monomial, Partition, Rational)>> {
    if !is_y_symmetric(f) {
        return None;
    }
    let u = f.universe();
    let ys = u.ys();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut cache: HashMap<Partition, Polynomial> = HashMap::new();
    while !rest.is_zero() {
        // Leading term in lex: its y-exponent is a partition (weakly decreasing by symmetry).
        let (m, c) = {
            let (m, c) = rest.terms().next_back().expect("nonzero");
            (m.clone(), c.clone())
        };
        let parts: Vec<u32> = u.y_range().map(|i| m.exp(i)).collect();
        let lambda = Partition::new(parts).ok()?;
        let mut other = m.clone();
        for i in u.y_range() {
            other.set_exp(i, 0);
        }
        let s = cache
            .entry(lambda.clone())
            .or_insert_with(|| schur(&lambda, &ys, u))
            .clone();
        rest -= &s.mul_monomial(&other, &c);
        out.push((other, lambda, c));
    }
    out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
    Some(out)
}

/// Alternating sum `sum_{a+b=r} (-1)^b e_a(first) h_b(second)`.
pub fn alternating_eh(
    r: usize,
    e_vars: &[Var],
    h_vars: &[Var],
    universe: VarUniverse,
) -> Polynomial {
    let h = complete_all(r, h_vars, universe);
    let mut acc = Polynomial::zero(universe);
    for (b, hb) in h.iter().enumerate().take(r + 1) {
        let a = r - b;
        if a > e_vars.len() {
            continue;
        }
        let e = elementary(a as i64, e_vars, universe).expect("nonnegative");
        let term = &e * hb;
        if b % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Same alternating sum with the e-part evaluated at constants.
pub fn alternating_eh_values(
    r: usize,
    values: &[Rational],
    h_vars: &[Var],
    universe: VarUniverse,
) -> Polynomial {
    let e = elementary_values(values);
    let h = complete_all(r, h_vars, universe);
    let mut acc = Polynomial::zero(universe);
    for (b, hb) in h.iter().enumerate().take(r + 1) {
        let a = r - b;
        if a >= e.len() {
            continue;
        }
        let sign = if b % 2 == 0 { rat(1) } else { rat(-1) };
        acc += &hb.scale(&(&e[a] * &sign));
    }
    acc
}

/// `[e_0, .., e_m]` of a list of constants.
pub fn elementary_values(values: &[Rational]) -> Vec<Rational> {
    let mut e = vec![rat(1)];
    for v in values {
        e.push(rat(0));
        for j in (1..e.len()).rev() {
            let add = &e[j - 1] * v;
            e[j] += add;
        }
    }
    e
}

#[cfg(test)]
mod tests;
