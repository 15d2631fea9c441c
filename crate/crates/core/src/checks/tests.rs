use super::*;
use crate::poly::ratio;

fn quick(names: &[&str]) -> SuiteConfig {
    SuiteConfig {
        instances: vec![Instance::new(2, 2, 1), Instance::new(3, 2, 2), Instance::new(3, 3, 2)],
        checks: names.iter().map(|s| s.to_string()).collect(),
        seed: 5,
        alpha: None,
    }
}

fn silent(_: &str) {}

#[test]
fn registry_lists_and_resolves() {
    let r = Registry::default();
    assert_eq!(r.names().len(), 12);
    assert_eq!(r.resolve("thm-1-2").unwrap(), ["at-freeness", "invariant-quotient", "integrality"]);
    assert_eq!(r.resolve("schubert").unwrap(), ["schubert"]);
    assert_eq!(r.resolve("all").unwrap(), r.names());
    assert!(r.resolve("nope").is_err());
}

struct AlwaysFails;

impl Check for AlwaysFails {
    fn name(&self) -> &'static str {
        "counting"
    }
    fn summary(&self) -> &'static str {
        "stand-in"
    }
    fn run(&self, _: &CheckContext) -> Result<Outcome> {
        Ok(Outcome { pass: false, expected: json!(1), actual: json!(0) })
    }
}

#[test]
fn registering_a_name_twice_replaces() {
    let mut r = Registry::default();
    r.register(Box::new(AlwaysFails));
    assert_eq!(r.names().len(), 12);
    let reports = run_suite(&quick(&["counting"]), &r, RunOptions::default(), &silent).unwrap();
    assert!(reports.iter().all(|rep| !rep.passed()));
}

#[test]
fn suite_runs_in_config_order_and_skips_inapplicable() {
    let reports = run_suite(&quick(&["all"]), &Registry::default(), RunOptions::default(), &silent).unwrap();
    let order: Vec<Instance> = reports.iter().map(|r| r.instance).collect();
    assert_eq!(order, quick(&[]).instances);
    assert!(reports.iter().all(|r| r.passed()), "{reports:#?}");
    let names = |i: usize| reports[i].checks.iter().map(|c| c.name.as_str()).collect::<Vec<_>>();
    assert!(!names(0).contains(&"schubert") && !names(0).contains(&"h-integrality"));
    assert!(names(1).contains(&"schubert") && names(1).contains(&"elementary-difference"));
    assert!(reports.iter().flat_map(|r| &r.checks).all(|c| c.elapsed_ms == 0));
}

#[test]
fn reports_are_deterministic() {
    let cfg = quick(&["orbit-harmonics", "gkm"]);
    let a = serde_json::to_string(&run_suite(&cfg, &Registry::default(), RunOptions::default(), &silent).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&cfg, &Registry::default(), RunOptions::default(), &silent).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn config_parsing() {
    let cfg = SuiteConfig::from_json(
        r#"{"instances":[{"n":3,"k":3,"d":2}],"checks":["gkm"],"seed":17,"alpha":["1/2",3,"-4"]}"#,
    )
    .unwrap();
    assert_eq!(cfg.alpha_values().unwrap(), Some(vec![ratio(1, 2), ratio(3, 1), ratio(-4, 1)]));
    assert!(SuiteConfig::from_json(r#"{"instances":[],"checks":[],"bogus":1}"#).is_err());
    assert!(SuiteConfig::from_json(r#"{"instances":[],"checks":[],"alpha":[true]}"#).is_err());
    let default = SuiteConfig::default();
    assert_eq!(default.instances.len(), 9);
    assert_eq!(SuiteConfig::from_json(&serde_json::to_string(&default).unwrap()).unwrap(), default);
}

#[test]
fn bad_instances_are_rejected_up_front() {
    let mut cfg = quick(&["counting"]);
    cfg.instances.push(Instance::new(2, 1, 2));
    assert!(run_suite(&cfg, &Registry::default(), RunOptions::default(), &silent).is_err());
    let mut cfg = quick(&["counting"]);
    cfg.alpha = Some(vec![json!(1)]);
    assert!(run_suite(&cfg, &Registry::default(), RunOptions::default(), &silent).is_err());
}

#[test]
fn explicit_alpha_is_used_alone() {
    let mut ctx = CheckContext::new(Instance::new(3, 2, 1), 3);
    assert_eq!(ctx.loci().unwrap().len(), 2);
    ctx.alpha = Some(vec![ratio(1, 3), ratio(5, 1)]);
    let loci = ctx.loci().unwrap();
    assert_eq!(loci.len(), 1);
    assert_eq!(loci[0].alpha(), &[ratio(1, 3), ratio(5, 1)]);
}
