use thiserror::Error;

use crate::poly::{Var, VarUniverse};

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(Var),
    #[error("variable {0} is not part of universe {1}")]
    VariableOutsideUniverse(Var, VarUniverse),
    #[error("polynomials live in different universes ({0} vs {1})")]
    UniverseMismatch(VarUniverse, VarUniverse),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("ideal is the whole ring")]
    UnitIdeal,
    #[error("quotient is infinite-dimensional; no pure power for {}", fmt_vars(.0))]
    InfiniteQuotient(Vec<Var>),
    #[error("restriction defined only on invariants")]
    NotInvariant,
    #[error("representative formula known only for d = k")]
    NotFubini,
    #[error("word {0:?} is not convex")]
    NotConvex(Vec<u32>),
    #[error("partition {0:?} does not fit in a {1}x{2} box")]
    OutsideBox(Vec<u32>, usize, usize),
    #[error("alpha values must be distinct; {0} is repeated")]
    RepeatedAlpha(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_vars(vars: &[Var]) -> String {
    vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
