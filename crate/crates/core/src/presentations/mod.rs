//! Named ideals and bases of the presentation, and the checks built on them.

mod invariant;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combin::{falling_factorial, stirling2, substaircase_sequences};
use crate::error::{Error, Result};
use crate::loci::{family_ideal_gens, x_root_relation};
use crate::poly::{Monomial, Polynomial, TermOrder, Var, VarUniverse};
use crate::symfun::{alternating_eh, complete, partitions_in_box, schur, Partition};

pub use invariant::InvariantElement;
pub use verify::{
    hilbert_factorization, elementary_differences_in_ideal, structure_constants, verify_at_freeness,
    verify_h_integrality, verify_integrality, verify_invariant_quotient, FreenessReport,
    HilbertReport, IntegralityReport, InvariantQuotientReport, StructureConstant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdealName {
    /// Generators of the equivariant presentation, read in the invariant ring.
    I,
    /// Homogeneous ideal in `Q[x, y]`.
    Jq,
    /// t-deformation of `Jq` in `Q[x, y, t]`.
    Jqt,
    /// The `d = k` presentation in `Q[x, t]`.
    Ink,
}

impl FromStr for IdealName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" => Ok(Self::I),
            "jq" => Ok(Self::Jq),
            "jqt" => Ok(Self::Jqt),
            "ink" => Ok(Self::Ink),
            _ => Err(Error::Parse(format!("unknown ideal {s:?}; expected I, Jq, Jqt or Ink"))),
        }
    }
}

impl fmt::Display for IdealName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::I => "I",
            Self::Jq => "Jq",
            Self::Jqt => "Jqt",
            Self::Ink => "Ink",
        })
    }
}

/// A named generator list with its parameters.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    pub name: IdealName,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub universe: VarUniverse,
    pub generators: Vec<Polynomial>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealJson {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub generators: Vec<crate::poly::PolynomialJson>,
}

impl IdealPresentation {
    pub fn to_json(&self, order: TermOrder) -> IdealJson {
        IdealJson {
            name: self.name.to_string(),
            n: self.n,
            k: self.k,
            d: self.d,
            generators: self.generators.iter().map(|g| g.to_json(order)).collect(),
        }
    }
}

pub fn ideal(name: IdealName, n: usize, k: usize, d: usize) -> Result<IdealPresentation> {
    match name {
        IdealName::I => ideal_i(n, k, d),
        IdealName::Jq => ideal_jq(n, k, d),
        IdealName::Jqt => ideal_jqt(n, k, d),
        IdealName::Ink => {
            if d != k {
                return Err(Error::InvalidParameters(format!(
                    "Ink needs d = k, got k={k} d={d}"
                )));
            }
            ideal_ink(n, k)
        }
    }
}

/// Same generators as [`ideal_jqt`]; every one is y-symmetric.
pub fn ideal_i(n: usize, k: usize, d: usize) -> Result<IdealPresentation> {
    Ok(IdealPresentation { name: IdealName::I, ..ideal_jqt(n, k, d)? })
}

pub fn ideal_jqt(n: usize, k: usize, d: usize) -> Result<IdealPresentation> {
    let generators = family_ideal_gens(n, k, d)?;
    Ok(IdealPresentation {
        name: IdealName::Jqt,
        n,
        k,
        d,
        universe: VarUniverse::new(n, d, k),
        generators,
    })
}

/// `h_r(y)` for `k-d < r <= k`, the alternating x sums for `n-d < r <= n`, and
/// `prod_j (x_i - y_j)`.
pub fn ideal_jq(n: usize, k: usize, d: usize) -> Result<IdealPresentation> {
    VarUniverse::for_instance(n, k, d)?;
    let u = VarUniverse::new(n, d, 0);
    let (xs, ys) = (u.xs(), u.ys());
    let mut generators: Vec<Polynomial> =
        (k - d + 1..=k).map(|r| complete(r as i64, &ys, u)).collect();
    generators.extend((n - d + 1..=n).map(|r| alternating_eh(r, &xs, &ys, u)));
    generators.extend((1..=n).map(|i| x_root_relation(i, &ys, u)));
    Ok(IdealPresentation { name: IdealName::Jq, n, k, d, universe: u, generators })
}

/// `prod_j (x_i - t_j)` and the alternating `e(x)` / `h(t)` sums for `n-k < r <= n`.
pub fn ideal_ink(n: usize, k: usize) -> Result<IdealPresentation> {
    VarUniverse::for_instance(n, k, k)?;
    let u = VarUniverse::new(n, 0, k);
    let (xs, ts) = (u.xs(), u.ts());
    let mut generators: Vec<Polynomial> =
        (1..=n).map(|i| x_root_relation(i, &ts, u)).collect();
    generators.extend((n - k + 1..=n).map(|r| alternating_eh(r, &xs, &ts, u)));
    Ok(IdealPresentation { name: IdealName::Ink, n, k, d: k, universe: u, generators })
}

/// `k! / (k-d)! * Stir(n, d)`.
pub fn rank(n: usize, k: usize, d: usize) -> BigUint {
    falling_factorial(k, d) * stirling2(n, d)
}

/// Monomials `x^a y^b` with `a` substaircase and `b_i < k-d+i`, in `Q[x, y]`,
/// ordered by x-part and then y-part.
pub fn basis_a(n: usize, k: usize, d: usize) -> Result<Vec<Monomial>> {
    basis_a_in(n, k, d, VarUniverse::new(n, d, 0))
}

pub fn basis_a_in(n: usize, k: usize, d: usize, u: VarUniverse) -> Result<Vec<Monomial>> {
    VarUniverse::for_instance(n, k, d)?;
    check_universe(n, d, u)?;
    let ys = y_exponents(k, d);
    let mut out = Vec::new();
    for a in substaircase_sequences(n, d) {
        for b in &ys {
            let mut m = Monomial::one(u.len());
            for (i, &e) in a.iter().chain(b).enumerate() {
                m.set_exp(i, e);
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// Exponent vectors `b` with `b_i < k-d+i`, lexicographic.
fn y_exponents(k: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for i in 1..=d {
        let bound = (k - d + i) as u32;
        out = out
            .into_iter()
            .flat_map(|b: Vec<u32>| {
                (0..bound).map(move |e| {
                    let mut b = b.clone();
                    b.push(e);
                    b
                })
            })
            .collect();
    }
    out
}

fn check_universe(n: usize, d: usize, u: VarUniverse) -> Result<()> {
    if u.n != n || u.d != d {
        return Err(Error::InvalidParameters(format!(
            "universe {u} does not have {n} x-variables and {d} y-variables"
        )));
    }
    Ok(())
}

/// One element of the invariant spanning set: a substaircase x-monomial times a
/// boxed Schur polynomial in the y-block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurElement {
    pub x_exponents: Vec<u32>,
    pub partition: Partition,
    #[serde(skip)]
    pub poly: Polynomial,
}

impl SchurElement {
    pub fn degree(&self) -> u32 {
        self.x_exponents.iter().sum::<u32>() + self.partition.size()
    }

    pub fn label(&self) -> String {
        let x: Vec<String> = self
            .x_exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
            .collect();
        let x = if x.is_empty() { "1".to_string() } else { x.join("*") };
        match (self.partition.is_empty(), x.as_str()) {
            (true, _) => x,
            (false, "1") => format!("s{}", self.partition),
            (false, _) => format!("{x}*s{}", self.partition),
        }
    }
}

/// Substaircase x-monomials times `s_lambda(y)` for `lambda` in the `d x (k-d)` box,
/// in `Q[x, y]`.
pub fn basis_c(n: usize, k: usize, d: usize) -> Result<Vec<SchurElement>> {
    basis_c_in(n, k, d, VarUniverse::new(n, d, 0))
}

pub fn basis_c_in(n: usize, k: usize, d: usize, u: VarUniverse) -> Result<Vec<SchurElement>> {
    VarUniverse::for_instance(n, k, d)?;
    check_universe(n, d, u)?;
    let ys: Vec<Var> = u.ys();
    let schurs: Vec<(Partition, Polynomial)> = partitions_in_box(d, (k - d) as u32)
        .into_iter()
        .map(|l| {
            let s = schur(&l, &ys, u);
            (l, s)
        })
        .collect();
    let mut out = Vec::new();
    for a in substaircase_sequences(n, d) {
        let mut m = Monomial::one(u.len());
        for (i, &e) in a.iter().enumerate() {
            m.set_exp(i, e);
        }
        for (l, s) in &schurs {
            out.push(SchurElement {
                x_exponents: a.clone(),
                partition: l.clone(),
                poly: s.mul_monomial(&m, &crate::poly::rat(1)),
            });
        }
    }
    Ok(out)
}
