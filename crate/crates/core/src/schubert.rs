//! Double Schubert polynomials (transition recursion, with divided differences from
//! the top class as a cross-check) and cell representatives for surjective words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;
use serde::Serialize;

use crate::combin::{words, Permutation, Word};
use crate::error::{Error, Result};
use crate::groebner::buchberger;
use crate::linalg::{self, Matrix};
use crate::loci::random_alpha;
use crate::poly::{rat, Monomial, Polynomial, Rational, TermOrder, Var, VarUniverse};
use crate::presentations::ideal_ink;

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})` on the x-block, `i` 1-based.
pub fn divided_difference(f: &Polynomial, i: usize) -> Polynomial {
    let u = f.universe();
    assert!(i >= 1 && i < u.n, "∂_{i} needs x_{i} and x_{}", i + 1);
    let (a_idx, b_idx) = (i - 1, i);
    let mut out = Polynomial::zero(u);
    for (m, c) in f.terms() {
        let (a, b) = (m.exp(a_idx), m.exp(b_idx));
        if a == b {
            continue;
        }
        // x^a y^b - x^b y^a = (x - y) * sign * (x y)^lo * sum_{j < hi-lo} x^{hi-lo-1-j} y^j
        let (lo, hi, c) = if a > b { (b, a, c.clone()) } else { (a, b, -c.clone()) };
        for j in 0..hi - lo {
            let mut t = m.clone();
            t.set_exp(a_idx, lo + (hi - lo - 1 - j));
            t.set_exp(b_idx, lo + j);
            out.add_term(t, c.clone());
        }
    }
    out
}

/// `prod_{i+j <= n} (x_i - t_j)` in `Q[x_1..x_n, t_1..t_n]`.
pub fn top_double_schubert(n: usize) -> Polynomial {
    let u = VarUniverse::new(n, 0, n);
    let mut acc = Polynomial::one(u);
    for i in 1..n {
        for j in 1..=n - i {
            acc = &acc * &(&Polynomial::var(u, Var::X(i)) - &Polynomial::var(u, Var::T(j)));
        }
    }
    acc
}

/// Which ascent to climb through when walking up to the longest permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// Double Schubert polynomial by divided differences from the top class, climbing
/// through the given ascents. Uncached; exponential in `n`.
pub fn double_schubert_along(perm: &Permutation, choice: AscentChoice) -> Polynomial {
    let n = perm.len();
    let mut path = Vec::new();
    let mut v = perm.clone();
    // climb v -> v s_i while there is an ascent; record the steps
    loop {
        let ascents: Vec<usize> =
            (1..n).filter(|&i| v.apply(i) < v.apply(i + 1)).collect();
        let i = match choice {
            AscentChoice::First => ascents.first(),
            AscentChoice::Last => ascents.last(),
        };
        let Some(&i) = i else { break };
        path.push(i);
        v = v.swap_positions(i);
    }
    let mut f = top_double_schubert(n);
    for &i in path.iter().rev() {
        f = divided_difference(&f, i);
    }
    f
}

fn cache() -> &'static RwLock<HashMap<Permutation, Polynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Polynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `𝔖_perm(x; t)` in `Q[x_1..x_n, t_1..t_n]`, memoized per permutation.
pub fn double_schubert(perm: &Permutation) -> Polynomial {
    if let Some(p) = cache().read().expect("cache lock").get(perm) {
        return p.clone();
    }
    let p = transition(perm);
    cache().write().expect("cache lock").entry(perm.clone()).or_insert(p).clone()
}

/// Transition recursion: with `r` the last descent, `s` the last position after `r`
/// holding a smaller value and `v = w t_{rs}`,
/// `𝔖_w = (x_r - t_{v(r)}) 𝔖_v + sum 𝔖_{v t_{ir}}` over `i < r` with
/// `l(v t_{ir}) = l(v) + 1`. Never touches the top class, so large `n` stays cheap.
fn transition(w: &Permutation) -> Polynomial {
    let n = w.len();
    let u = VarUniverse::new(n, 0, n);
    let Some(&r) = w.descents().last() else {
        return Polynomial::one(u);
    };
    let s = (r + 1..=n).filter(|&j| w.apply(j) < w.apply(r)).max().expect("r is a descent");
    let v = swap(w, r, s);
    let factor = &Polynomial::var(u, Var::X(r)) - &Polynomial::var(u, Var::T(v.apply(r)));
    let mut out = &factor * &double_schubert(&v);
    for i in 1..r {
        let (lo, hi) = (v.apply(i), v.apply(r));
        if lo < hi && (i + 1..r).all(|j| !(lo < v.apply(j) && v.apply(j) < hi)) {
            out += &double_schubert(&swap(&v, i, r));
        }
    }
    out
}

fn swap(w: &Permutation, i: usize, j: usize) -> Permutation {
    let mut line = w.one_line().to_vec();
    line.swap(i - 1, j - 1);
    Permutation::new(line).expect("a transposition keeps a permutation")
}

/// How the sorting permutation acts on the x-variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    /// `π · f = f(x_{π(1)}, .., x_{π(n)})`.
    Left,
    /// `π · f = f(x_{π^{-1}(1)}, .., x_{π^{-1}(n)})`.
    Right,
}

/// Sign applied to the t-arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TSign {
    /// Arguments `(-x | t)`, as printed.
    Plus,
    /// Arguments `(-x | -t)`.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Convention {
    pub action: Action,
    pub t_sign: TSign,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention { action: Action::Left, t_sign: TSign::Plus },
        Convention { action: Action::Right, t_sign: TSign::Plus },
        Convention { action: Action::Left, t_sign: TSign::Minus },
        Convention { action: Action::Right, t_sign: TSign::Minus },
    ];
}

impl Default for Convention {
    fn default() -> Self {
        Convention { action: Action::Right, t_sign: TSign::Minus }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = match self.action {
            Action::Left => "left",
            Action::Right => "right",
        };
        let t = match self.t_sign {
            TSign::Plus => "plus",
            TSign::Minus => "minus",
        };
        write!(f, "{a}-{t}")
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown convention {s:?}")))
    }
}

/// Permute the x-variables of `f` by `π` under the given action.
pub fn act_on_x(f: &Polynomial, pi: &Permutation, action: Action) -> Polynomial {
    let u = f.universe();
    // position of x_i moves to position target[i]
    let mut idx: Vec<usize> = (0..u.len()).collect();
    for i in 1..=u.n {
        let j = match action {
            // f(x_{π(1)}, ..): the variable x_i in f becomes x_{π(i)}
            Action::Left => pi.apply(i),
            Action::Right => pi.inverse().apply(i),
        };
        idx[i - 1] = j - 1;
    }
    f.permute_indices(&idx)
}

/// The data the representative is built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellData {
    pub word: Word,
    pub convex: Word,
    pub sort: Permutation,
    pub standard: Permutation,
}

pub fn cell_data(w: &Word, k: usize) -> Result<CellData> {
    if !w.is_fubini(k) {
        return Err(Error::NotFubini);
    }
    let (convex, sort) = w.convexify();
    let standard = convex.standardize_convex(k)?;
    Ok(CellData { word: w.clone(), convex, sort, standard })
}

/// `σ(w)^{-1} · 𝔖_{std(conv(w))}(-x | ±t)` in `Q[x_1..x_n, t_1..t_k]`.
pub fn cell_representative(w: &Word, k: usize, convention: Convention) -> Result<Polynomial> {
    let data = cell_data(w, k)?;
    let n = w.len();
    let s = double_schubert(&data.standard);
    let target = VarUniverse::new(n, 0, k);
    let t_sign = match convention.t_sign {
        TSign::Plus => rat(1),
        TSign::Minus => rat(-1),
    };
    let mut subst: HashMap<Var, Polynomial> = HashMap::new();
    for i in 1..=n {
        subst.insert(Var::X(i), Polynomial::var(target, Var::X(i)).scale(&rat(-1)));
    }
    for j in 1..=k {
        subst.insert(Var::T(j), Polynomial::var(target, Var::T(j)).scale(&t_sign));
    }
    // t_j with j > k has no image; substitution fails if one occurs
    let specialized = s.substitute(&subst, target)?;
    Ok(act_on_x(&specialized, &data.sort.inverse(), convention.action))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentativeReport {
    pub convention: Convention,
    pub representatives: usize,
    pub standard_monomials: usize,
    /// Degrees of the representatives match those of the standard monomials, so a
    /// nonzero determinant is a nonzero constant.
    pub degrees_balanced: bool,
    pub determinant_nonzero: bool,
    pub seed: Option<u64>,
    /// Restrictions to fixed points are triangular with nonzero diagonal.
    pub support_triangular: bool,
    pub t_zero_integral: bool,
}

impl RepresentativeReport {
    pub fn is_basis(&self) -> bool {
        self.representatives == self.standard_monomials
            && self.degrees_balanced
            && self.determinant_nonzero
    }

    pub fn passed(&self) -> bool {
        self.is_basis() && self.t_zero_integral
    }
}

/// Reduce every representative modulo the lex basis of the `d = k` ideal and check
/// that the coefficient matrix against the t-free standard monomials is invertible
/// over `Q[t]`.
pub fn verify_representatives(
    n: usize,
    k: usize,
    convention: Convention,
    seed: u64,
) -> Result<RepresentativeReport> {
    let ink = ideal_ink(n, k)?;
    let u = ink.universe;
    let gb = buchberger(&ink.generators, TermOrder::Lex)?;
    let standard = gb.standard_monomials_in(&u.x_range().collect::<Vec<_>>())?;
    let cells = words(n, k, k);
    let reps: Vec<Polynomial> =
        cells.iter().map(|w| cell_representative(w, k, convention)).collect::<Result<_>>()?;

    let col: BTreeMap<&Monomial, usize> = standard.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let matrix: Vec<Vec<Polynomial>> = reps
        .iter()
        .map(|r| {
            let mut row = vec![Polynomial::zero(u); standard.len()];
            for (m, c) in gb.normal_form(r).terms() {
                let mut x = m.clone();
                let mut t = Monomial::one(u.len());
                for i in u.t_range() {
                    t.set_exp(i, m.exp(i));
                    x.set_exp(i, 0);
                }
                row[col[&x]].add_term(t, c.clone());
            }
            row
        })
        .collect();

    let mut rep_degrees: Vec<u32> = reps.iter().filter_map(Polynomial::total_degree).collect();
    let mut std_degrees: Vec<u32> = standard.iter().map(Monomial::degree).collect();
    rep_degrees.sort_unstable();
    std_degrees.sort_unstable();

    let mut used = None;
    if reps.len() == standard.len() {
        for s in [seed, seed.wrapping_add(1)] {
            let mut point = vec![Rational::zero(); u.len()];
            for (i, v) in u.t_range().zip(random_alpha(k, s)) {
                point[i] = v;
            }
            let numeric: Matrix =
                matrix.iter().map(|row| row.iter().map(|e| e.evaluate_at(&point)).collect()).collect();
            if !linalg::determinant(&numeric).is_zero() {
                used = Some(s);
                break;
            }
        }
    }

    let zero = vec![Rational::zero(); k];
    let t_zero_integral = reps
        .iter()
        .all(|r| crate::loci::specialize_t(r, &zero).is_ok_and(|p| p.is_integer_polynomial()));

    Ok(RepresentativeReport {
        convention,
        representatives: reps.len(),
        standard_monomials: standard.len(),
        degrees_balanced: rep_degrees == std_degrees,
        determinant_nonzero: used.is_some(),
        seed: used,
        support_triangular: support_triangular(&cells, &reps, k),
        t_zero_integral,
    })
}

/// Whether "the restriction of `reps[a]` at `cells[b]` is nonzero" orders the cells
/// acyclically, with every representative nonzero at its own cell.
fn support_triangular(cells: &[Word], reps: &[Polynomial], k: usize) -> bool {
    let tu = VarUniverse::new(0, 0, k);
    let restrict = |f: &Polynomial, w: &Word| {
        let subst: HashMap<Var, Polynomial> = w
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| (Var::X(i + 1), Polynomial::var(tu, Var::T(l as usize))))
            .collect();
        f.substitute(&subst, tu).expect("t-variables are shared")
    };
    let m = cells.len();
    let nonzero: Vec<Vec<bool>> = reps
        .iter()
        .map(|r| cells.iter().map(|w| !restrict(r, w).is_zero()).collect())
        .collect();
    if (0..m).any(|a| !nonzero[a][a]) {
        return false;
    }
    // repeatedly peel a representative supported only on itself among the remaining
    let mut alive = vec![true; m];
    for _ in 0..m {
        let Some(a) = (0..m).find(|&a| {
            alive[a] && (0..m).all(|b| b == a || !alive[b] || !nonzero[a][b])
        }) else {
            return false;
        };
        alive[a] = false;
    }
    true
}

#[cfg(test)]
mod tests;
