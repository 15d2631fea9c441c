//! Named verification checks behind a common trait, a registry to look them up,
//! and a suite runner producing reproducible JSON reports.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::combin::words;
use crate::error::{Error, Result};
use crate::gkm::{verify_divisibility, verify_injectivity};
use crate::loci::{
    enumerate_points, random_alpha, verify_orbit_harmonics, verify_vanishing_ideal, LocusSpec,
};
use crate::poly::Rational;
use crate::presentations::{
    basis_a, basis_c, hilbert_factorization, elementary_differences_in_ideal, rank, verify_at_freeness,
    verify_h_integrality, verify_integrality, verify_invariant_quotient,
};
use crate::schubert::{verify_representatives, Convention};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl Instance {
    pub fn new(n: usize, k: usize, d: usize) -> Self {
        Instance { n, k, d }
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

/// Default suite of instances.
pub const ACCEPTANCE_SUITE: [(usize, usize, usize); 9] = [
    (2, 2, 1),
    (2, 2, 2),
    (3, 2, 1),
    (3, 2, 2),
    (3, 3, 2),
    (3, 3, 3),
    (4, 2, 2),
    (4, 3, 2),
    (4, 3, 3),
];

/// What a check gets to look at.
#[derive(Debug, Clone)]
pub struct CheckContext {
    pub instance: Instance,
    pub seed: u64,
    /// Explicit point values; `None` means `1..k` plus one seeded random choice.
    pub alpha: Option<Vec<Rational>>,
    pub convention: Convention,
}

impl CheckContext {
    pub fn new(instance: Instance, seed: u64) -> Self {
        CheckContext { instance, seed, alpha: None, convention: Convention::default() }
    }

    /// Loci the point-based checks run on.
    pub fn loci(&self) -> Result<Vec<LocusSpec>> {
        let Instance { n, k, d } = self.instance;
        match &self.alpha {
            Some(a) => Ok(vec![LocusSpec::new(n, k, d, a.clone())?]),
            None => Ok(vec![
                LocusSpec::standard(n, k, d)?,
                LocusSpec::new(n, k, d, random_alpha(k, self.seed))?,
            ]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;

    /// One-line description for listings.
    fn summary(&self) -> &'static str;

    /// Instances outside the check's range are left out of reports.
    fn applies(&self, _instance: Instance) -> bool {
        true
    }

    fn run(&self, ctx: &CheckContext) -> Result<Outcome>;
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn usize_of(b: num_bigint::BigUint) -> usize {
    usize::try_from(b).expect("count fits in usize")
}

struct Counting;

impl Check for Counting {
    fn name(&self) -> &'static str {
        "counting"
    }
    fn summary(&self) -> &'static str {
        "fixed words, C basis, rank formula, points and A basis agree in size"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = usize_of(rank(n, k, d));
        let points = enumerate_points(&LocusSpec::standard(n, k, d)?).len();
        let actual = json!({
            "words": words(n, k, d).len(),
            "basis_c": basis_c(n, k, d)?.len(),
            "rank": r,
            "points": points,
            "basis_a": basis_a(n, k, d)?.len(),
        });
        let fact: usize = (1..=d).product();
        let expected = json!({
            "words": r, "basis_c": r, "rank": r, "points": fact * r, "basis_a": fact * r,
        });
        Ok(Outcome { pass: actual == expected, expected, actual })
    }
}

struct Vanishing;

impl Check for Vanishing {
    fn name(&self) -> &'static str {
        "vanishing"
    }
    fn summary(&self) -> &'static str {
        "locus generators vanish on every point and cut out exactly that many points"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let reports = ctx
            .loci()?
            .iter()
            .map(verify_vanishing_ideal)
            .collect::<Result<Vec<_>>>()?;
        let expected = json!(reports.iter().map(|r| r.expected).collect::<Vec<_>>());
        Ok(Outcome {
            pass: reports.iter().all(|r| r.passed()),
            expected,
            actual: to_value(&reports),
        })
    }
}

struct OrbitHarmonics;

impl Check for OrbitHarmonics {
    fn name(&self) -> &'static str {
        "orbit-harmonics"
    }
    fn summary(&self) -> &'static str {
        "associated graded of the locus ideal equals the homogeneous presentation"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let reports = ctx
            .loci()?
            .iter()
            .map(|spec| verify_orbit_harmonics(spec, false))
            .collect::<Result<Vec<_>>>()?;
        let expected = json!(reports.iter().map(|r| r.expected).collect::<Vec<_>>());
        Ok(Outcome {
            pass: reports.iter().all(|r| r.passed()),
            expected,
            actual: to_value(&reports),
        })
    }
}

struct AtFreeness;

impl Check for AtFreeness {
    fn name(&self) -> &'static str {
        "at-freeness"
    }
    fn summary(&self) -> &'static str {
        "t-ideal has t-free leading monomials and the expected standard monomials"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = verify_at_freeness(n, k, d)?;
        Ok(Outcome { pass: r.passed(), expected: json!(r.expected), actual: to_value(&r) })
    }
}

struct InvariantQuotient;

impl Check for InvariantQuotient {
    fn name(&self) -> &'static str {
        "invariant-quotient"
    }
    fn summary(&self) -> &'static str {
        "invariant subspace has dimension rank and the C basis spans it"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = verify_invariant_quotient(n, k, d)?;
        Ok(Outcome { pass: r.passed(), expected: json!(r.expected), actual: to_value(&r) })
    }
}

struct Integrality;

impl Check for Integrality {
    fn name(&self) -> &'static str {
        "integrality"
    }
    fn summary(&self) -> &'static str {
        "structure constants of the C basis are integer polynomials in t"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = verify_integrality(n, k, d)?;
        Ok(Outcome {
            pass: r.passed(),
            expected: json!({"spanned": true, "integral": true}),
            actual: to_value(&r),
        })
    }
}

struct HIntegrality;

impl Check for HIntegrality {
    fn name(&self) -> &'static str {
        "h-integrality"
    }
    fn summary(&self) -> &'static str {
        "truncated complete homogeneous polynomials reduce to zero"
    }
    fn applies(&self, instance: Instance) -> bool {
        instance.d >= 2
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { k, d, .. } = ctx.instance;
        let r = verify_h_integrality(k - d, d)?;
        Ok(Outcome { pass: r.iter().all(|&b| b), expected: json!(vec![true; d]), actual: json!(r) })
    }
}

struct Hilbert;

impl Check for Hilbert {
    fn name(&self) -> &'static str {
        "hilbert"
    }
    fn summary(&self) -> &'static str {
        "invariant Hilbert series factors as staircase series times Gaussian binomial"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = hilbert_factorization(n, k, d)?;
        Ok(Outcome {
            pass: r.matches,
            expected: json!(r.product.to_string()),
            actual: json!(r.invariant_series.to_string()),
        })
    }
}

struct Injectivity;

impl Check for Injectivity {
    fn name(&self) -> &'static str {
        "gkm"
    }
    fn summary(&self) -> &'static str {
        "generators restrict to zero and the restriction matrix is invertible"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = verify_injectivity(n, k, d, ctx.seed)?;
        Ok(Outcome { pass: r.passed(), expected: json!(r.columns), actual: to_value(&r) })
    }
}

struct Divisibility;

impl Check for Divisibility {
    fn name(&self) -> &'static str {
        "divisibility"
    }
    fn summary(&self) -> &'static str {
        "restrictions differ by multiples of t_a - t_b along one-dimensional orbits"
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, d } = ctx.instance;
        let r = verify_divisibility(n, k, d)?;
        Ok(Outcome { pass: r.passed(), expected: json!({"all_divisible": true}), actual: to_value(&r) })
    }
}

struct Schubert;

impl Check for Schubert {
    fn name(&self) -> &'static str {
        "schubert"
    }
    fn summary(&self) -> &'static str {
        "cell representatives form a Q[t]-basis of the full-rank quotient"
    }
    fn applies(&self, instance: Instance) -> bool {
        instance.d == instance.k
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, .. } = ctx.instance;
        let r = verify_representatives(n, k, ctx.convention, ctx.seed)?;
        Ok(Outcome { pass: r.passed(), expected: json!(r.standard_monomials), actual: to_value(&r) })
    }
}

struct ElementaryDifference;

impl Check for ElementaryDifference {
    fn name(&self) -> &'static str {
        "elementary-difference"
    }
    fn summary(&self) -> &'static str {
        "e_r(y) - e_r(t) lies in the full-rank ideal"
    }
    fn applies(&self, instance: Instance) -> bool {
        instance.d == instance.k
    }
    fn run(&self, ctx: &CheckContext) -> Result<Outcome> {
        let Instance { n, k, .. } = ctx.instance;
        let r = elementary_differences_in_ideal(n, k)?;
        Ok(Outcome { pass: r.iter().all(|&b| b), expected: json!(vec![true; k]), actual: json!(r) })
    }
}

/// Checks by name, in registration order.
pub struct Registry {
    checks: Vec<Box<dyn Check>>,
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(Counting));
        r.register(Box::new(Vanishing));
        r.register(Box::new(OrbitHarmonics));
        r.register(Box::new(AtFreeness));
        r.register(Box::new(InvariantQuotient));
        r.register(Box::new(Integrality));
        r.register(Box::new(HIntegrality));
        r.register(Box::new(Hilbert));
        r.register(Box::new(Injectivity));
        r.register(Box::new(Divisibility));
        r.register(Box::new(Schubert));
        r.register(Box::new(ElementaryDifference));
        r
    }
}

impl Registry {
    pub fn empty() -> Self {
        Registry { checks: Vec::new() }
    }

    /// Replaces an existing check of the same name.
    pub fn register(&mut self, check: Box<dyn Check>) {
        match self.checks.iter().position(|c| c.name() == check.name()) {
            Some(i) => self.checks[i] = check,
            None => self.checks.push(check),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Check> {
        self.checks.iter().map(|c| c.as_ref())
    }

    /// Expand a group name (`thm-1-2`, `all`, ...) or a single check name.
    pub fn resolve(&self, name: &str) -> Result<Vec<&'static str>> {
        let group: &[&'static str] = match name {
            "all" => return Ok(self.names()),
            "orbit-harmonics" => &["vanishing", "orbit-harmonics"],
            "thm-1-2" => &["at-freeness", "invariant-quotient", "integrality"],
            "gkm" => &["gkm", "divisibility"],
            _ => {
                let c = self
                    .get(name)
                    .ok_or_else(|| Error::Parse(format!("unknown check {name:?}")))?;
                return Ok(vec![c.name()]);
            }
        };
        Ok(group.to_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub instance: Instance,
    pub checks: Vec<CheckResult>,
    pub seed: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// `{"instances":[{"n":3,"k":3,"d":2}], "checks":[...], "seed":17, "alpha":null}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub instances: Vec<Instance>,
    pub checks: Vec<String>,
    #[serde(default)]
    pub seed: u64,
    /// Rationals as strings (`"1/2"`) or integers.
    #[serde(default)]
    pub alpha: Option<Vec<Value>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            instances: ACCEPTANCE_SUITE.iter().map(|&(n, k, d)| Instance::new(n, k, d)).collect(),
            checks: ["orbit-harmonics", "at-freeness", "invariant-quotient", "integrality", "gkm", "schubert"]
                .map(String::from)
                .to_vec(),
            seed: 17,
            alpha: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: SuiteConfig = serde_json::from_str(text)?;
        config.alpha_values()?;
        Ok(config)
    }

    pub fn alpha_values(&self) -> Result<Option<Vec<Rational>>> {
        let Some(values) = &self.alpha else { return Ok(None) };
        values
            .iter()
            .map(|v| match v {
                Value::String(s) => crate::poly::parse_rational(s),
                Value::Number(x) => crate::poly::parse_rational(&x.to_string()),
                other => Err(Error::Parse(format!("alpha entry {other} is not a rational"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }
}

/// Options that do not belong in a config file.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub timings: bool,
    pub convention: Convention,
}

/// Run every requested check on every instance. Instances are processed in
/// parallel on the current rayon pool; reports come back in config order.
pub fn run_suite(
    config: &SuiteConfig,
    registry: &Registry,
    options: RunOptions,
    progress: &(dyn Fn(&str) + Sync),
) -> Result<Vec<VerificationReport>> {
    let mut names: Vec<&'static str> = Vec::new();
    for c in &config.checks {
        for name in registry.resolve(c)? {
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    let alpha = config.alpha_values()?;
    for inst in &config.instances {
        crate::poly::VarUniverse::for_instance(inst.n, inst.k, inst.d)?;
        if let Some(a) = &alpha {
            if a.len() != inst.k {
                return Err(Error::InvalidParameters(format!(
                    "alpha has {} values but instance {inst} has k = {}",
                    a.len(),
                    inst.k
                )));
            }
        }
    }
    config
        .instances
        .par_iter()
        .map(|&instance| {
            let ctx = CheckContext {
                instance,
                seed: config.seed,
                alpha: alpha.clone(),
                convention: options.convention,
            };
            let mut checks = Vec::new();
            for &name in &names {
                let check = registry.get(name).expect("resolved names are registered");
                if !check.applies(instance) {
                    continue;
                }
                progress(&format!("{instance} {name} ..."));
                let start = Instant::now();
                let outcome = check.run(&ctx)?;
                let elapsed = start.elapsed().as_millis() as u64;
                progress(&format!(
                    "{instance} {name} {} ({elapsed} ms)",
                    if outcome.pass { "pass" } else { "FAIL" }
                ));
                checks.push(CheckResult {
                    name: name.to_string(),
                    pass: outcome.pass,
                    expected: outcome.expected,
                    actual: outcome.actual,
                    elapsed_ms: if options.timings { elapsed } else { 0 },
                });
            }
            Ok(VerificationReport { instance, checks, seed: config.seed })
        })
        .collect()
}

#[cfg(test)]
mod tests;
