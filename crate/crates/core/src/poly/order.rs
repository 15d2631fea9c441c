use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Monomial orders over the fixed variable order `x1 > .. > xn > y1 > .. > yd > t1 > .. > tk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    Lex,
    #[serde(rename = "grlex", alias = "gradedlex")]
    GradedLex,
}

impl TermOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.exps().cmp(b.exps()),
            TermOrder::GradedLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exps().cmp(b.exps())),
        }
    }

    pub fn is_degree_compatible(self) -> bool {
        matches!(self, TermOrder::GradedLex)
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::GradedLex => "grlex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "grlex" | "gradedlex" => Ok(TermOrder::GradedLex),
            other => Err(crate::Error::Parse(format!("unknown term order `{other}`"))),
        }
    }
}

impl std::fmt::Display for TermOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
