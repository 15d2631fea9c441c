use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, Polynomial, Rational, TermOrder, Var, VarUniverse};
use crate::error::{Error, Result};

impl Monomial {
    pub fn to_text(&self, universe: VarUniverse) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(universe.var(i).to_string()),
                e => parts.push(format!("{}^{e}", universe.var(i))),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Polynomial {
    /// Canonical text form: terms descending under `ord`, e.g. `x1^2 - 3/2*x1*y1 + 1`.
    pub fn to_text(&self, ord: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.to_text(self.universe());
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    /// Parse a sum of terms such as `x1^2 - 3/2*x1*y1 + 1` into `universe`.
    pub fn parse(universe: VarUniverse, text: &str) -> Result<Polynomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut poly = Polynomial::zero(universe);
        let mut chunks = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 0..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^' {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes().first() {
                Some(b'-') => (-Rational::one(), &chunk[1..]),
                Some(b'+') => (Rational::one(), &chunk[1..]),
                _ => (Rational::one(), chunk),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{text}`")));
            }
            let mut coef = sign;
            let mut mono = Monomial::one(universe.len());
            for factor in body.split('*') {
                parse_factor(universe, factor, &mut coef, &mut mono)?;
            }
            poly.add_term(mono, coef);
        }
        Ok(poly)
    }
}

fn parse_factor(
    universe: VarUniverse,
    factor: &str,
    coef: &mut Rational,
    mono: &mut Monomial,
) -> Result<()> {
    let bad = || Error::Parse(format!("bad factor `{factor}`"));
    let first = factor.chars().next().ok_or_else(bad)?;
    if first.is_ascii_digit() {
        *coef *= parse_rational(factor)?;
        return Ok(());
    }
    let (name, power) = match factor.split_once('^') {
        Some((name, p)) => (name, p.parse::<u32>().map_err(|_| bad())?),
        None => (factor, 1),
    };
    let var: Var = name.parse()?;
    let idx = universe
        .index(var)
        .ok_or(Error::VariableOutsideUniverse(var, universe))?;
    let e = mono.exp(idx) + power;
    mono.set_exp(idx, e);
    Ok(())
}

/// Parse `p` or `p/q` (optionally signed) into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}
