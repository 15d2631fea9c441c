//! Restriction of invariant polynomials to torus-fixed points, indexed by words.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::combin::{words, Word};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::loci::random_alpha;
use crate::poly::{Polynomial, TermOrder, Var, VarUniverse};
use crate::presentations::{basis_c, ideal_i};
use crate::symfun::is_y_symmetric;

/// The ring `Q[t_1..t_k]` restrictions land in.
pub fn t_universe(k: usize) -> VarUniverse {
    VarUniverse::new(0, 0, k)
}

/// `x_i -> t_{w(i)}`, the y-block -> `{t_j : j in w([n])}`, `t_j -> t_j`.
pub fn restrict_at_word(f: &Polynomial, w: &Word, k: usize) -> Result<Polynomial> {
    let u = f.universe();
    if !is_y_symmetric(f) {
        return Err(Error::NotInvariant);
    }
    let support = w.support();
    if w.len() != u.n || support.len() != u.d || support.last().is_some_and(|&l| l as usize > k) || u.k > k {
        return Err(Error::InvalidParameters(format!(
            "word {w} does not index a fixed point for {u} with k = {k}"
        )));
    }
    let target = t_universe(k);
    let t = |j: u32| Polynomial::var(target, Var::T(j as usize));
    let mut subst: HashMap<Var, Polynomial> = HashMap::new();
    for (i, &l) in w.letters().iter().enumerate() {
        subst.insert(Var::X(i + 1), t(l));
    }
    for (i, &l) in support.iter().enumerate() {
        subst.insert(Var::Y(i + 1), t(l));
    }
    f.substitute(&subst, target)
}

/// Rows indexed by the words of image size `d` (lexicographic), columns by `basis`.
pub fn restriction_matrix(
    n: usize,
    k: usize,
    d: usize,
    basis: &[Polynomial],
) -> Result<Vec<Vec<Polynomial>>> {
    VarUniverse::for_instance(n, k, d)?;
    words(n, k, d)
        .par_iter()
        .map(|w| basis.iter().map(|b| restrict_at_word(b, w, k)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub rows: usize,
    pub columns: usize,
    pub generators_restrict_to_zero: bool,
    pub determinant_nonzero: bool,
    /// Seed whose specialization gave a nonzero determinant, if any.
    pub seed: Option<u64>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.rows == self.columns && self.generators_restrict_to_zero && self.determinant_nonzero
    }
}

/// Restriction matrix on the Schur-type basis, specialized at seeded distinct
/// rationals; a nonzero determinant certifies injectivity. A second seed is tried
/// before giving up.
pub fn verify_injectivity(n: usize, k: usize, d: usize, seed: u64) -> Result<InjectivityReport> {
    let ideal = ideal_i(n, k, d)?;
    let fixed = words(n, k, d);
    let generators_restrict_to_zero = fixed.par_iter().all(|w| {
        ideal
            .generators
            .iter()
            .all(|g| restrict_at_word(g, w, k).is_ok_and(|r| r.is_zero()))
    });
    let basis: Vec<Polynomial> = basis_c(n, k, d)?.into_iter().map(|e| e.poly).collect();
    let matrix = restriction_matrix(n, k, d, &basis)?;
    let square = matrix.len() == basis.len();
    let mut used = None;
    if square {
        for s in [seed, seed.wrapping_add(1)] {
            let point = random_alpha(k, s);
            let numeric: Matrix = matrix
                .iter()
                .map(|row| row.iter().map(|e| e.evaluate_at(&point)).collect())
                .collect();
            if !linalg::determinant(&numeric).is_zero() {
                used = Some(s);
                break;
            }
        }
    }
    Ok(InjectivityReport {
        rows: matrix.len(),
        columns: basis.len(),
        generators_restrict_to_zero,
        determinant_nonzero: used.is_some(),
        seed: used,
    })
}

/// Two fixed points joined by a one-dimensional orbit: `w1` and `w2` agree off
/// `positions`, where `w1` reads `from` and `w2` reads `to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarPair {
    pub w1: Word,
    pub w2: Word,
    /// 1-based.
    pub positions: Vec<usize>,
    pub from: u32,
    pub to: u32,
}

/// The witness for an ordered pair, if there is one. The positions are forced to
/// be exactly where the words differ.
pub fn star_witness(w1: &Word, w2: &Word) -> Option<StarPair> {
    if w1.len() != w2.len() {
        return None;
    }
    let diff: Vec<usize> = (0..w1.len()).filter(|&i| w1.letters()[i] != w2.letters()[i]).collect();
    let &first = diff.first()?;
    let (from, to) = (w1.letters()[first], w2.letters()[first]);
    diff.iter()
        .all(|&i| w1.letters()[i] == from && w2.letters()[i] == to)
        .then(|| StarPair {
            w1: w1.clone(),
            w2: w2.clone(),
            positions: diff.iter().map(|i| i + 1).collect(),
            from,
            to,
        })
}

/// All ordered pairs of fixed words admitting a witness.
pub fn star_pairs(n: usize, k: usize, d: usize) -> Vec<StarPair> {
    let fixed = words(n, k, d);
    fixed
        .iter()
        .flat_map(|a| fixed.iter().filter_map(move |b| star_witness(a, b)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub pairs: usize,
    pub basis_size: usize,
    pub all_divisible: bool,
    /// (pair index, basis index) of the first failure.
    pub offending: Option<(usize, usize)>,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.all_divisible
    }
}

/// `(t_from - t_to)` divides the difference of restrictions for every pair and
/// every Schur-type basis element.
pub fn verify_divisibility(n: usize, k: usize, d: usize) -> Result<DivisibilityReport> {
    let basis: Vec<Polynomial> = basis_c(n, k, d)?.into_iter().map(|e| e.poly).collect();
    let fixed = words(n, k, d);
    let index: HashMap<&Word, usize> = fixed.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let matrix = restriction_matrix(n, k, d, &basis)?;
    let pairs = star_pairs(n, k, d);
    let tu = t_universe(k);
    let failures: Vec<(usize, usize)> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(p, pair)| {
            let divisor = &Polynomial::var(tu, Var::T(pair.from as usize))
                - &Polynomial::var(tu, Var::T(pair.to as usize));
            let (r1, r2) = (&matrix[index[&pair.w1]], &matrix[index[&pair.w2]]);
            (0..basis.len()).find_map(|c| {
                let diff = &r1[c] - &r2[c];
                let (_, rem) = diff.div_rem(&divisor, TermOrder::Lex).expect("nonzero divisor");
                (!rem.is_zero()).then_some((p, c))
            })
        })
        .collect();
    Ok(DivisibilityReport {
        pairs: pairs.len(),
        basis_size: basis.len(),
        all_divisible: failures.is_empty(),
        offending: failures.into_iter().min(),
    })
}

#[cfg(test)]
mod tests;
