use proptest::prelude::*;

use super::*;
use crate::testutil::config;

fn p(u: VarUniverse, s: &str) -> Polynomial {
    Polynomial::parse(u, s).unwrap()
}

/// The 36 points for (3,3,2) as displayed: x-letters then y-letters, indices into alpha.
const POINTS_332: [&str; 36] = [
    "112;12", "121;12", "211;12", "122;12", "212;12", "221;12",
    "112;21", "121;21", "211;21", "122;21", "212;21", "221;21",
    "113;13", "131;13", "311;13", "133;13", "313;13", "331;13",
    "113;31", "131;31", "311;31", "133;31", "313;31", "331;31",
    "223;23", "232;23", "322;23", "233;23", "323;23", "332;23",
    "223;32", "232;32", "322;32", "233;32", "323;32", "332;32",
];

fn point_from(code: &str, alpha: &[Rational]) -> Vec<Rational> {
    code.chars()
        .filter(|c| c.is_ascii_digit())
        .map(|c| alpha[c.to_digit(10).unwrap() as usize - 1].clone())
        .collect()
}

#[test]
fn locus_332_matches_displayed_points() {
    let spec = LocusSpec::new(3, 3, 2, vec![rat(10), rat(-3), ratio(1, 2)]).unwrap();
    let got: BTreeSet<Vec<Rational>> = enumerate_points(&spec).into_iter().map(|p| p.coords).collect();
    let expected: BTreeSet<Vec<Rational>> =
        POINTS_332.iter().map(|c| point_from(c, spec.alpha())).collect();
    assert_eq!(got.len(), 36);
    assert_eq!(got, expected);
}

#[test]
fn small_loci() {
    let spec = LocusSpec::new(1, 1, 1, vec![rat(5)]).unwrap();
    let pts = enumerate_points(&spec);
    assert_eq!(pts.len(), 1);
    assert_eq!(pts[0].coords, vec![rat(5), rat(5)]);

    let spec = LocusSpec::standard(2, 2, 1).unwrap();
    let pts: Vec<Vec<Rational>> = enumerate_points(&spec).into_iter().map(|p| p.coords).collect();
    assert_eq!(pts, vec![vec![rat(1), rat(1), rat(1)], vec![rat(2), rat(2), rat(2)]]);
}

#[test]
fn repeated_alpha_is_rejected() {
    let err = LocusSpec::new(2, 2, 1, vec![rat(1), rat(1)]).unwrap_err();
    assert!(matches!(err, Error::RepeatedAlpha(_)));
    assert!(LocusSpec::new(2, 2, 1, vec![rat(1)]).is_err());
    assert!(LocusSpec::new(2, 3, 1, vec![rat(1), rat(2), rat(3)]).is_err());
}

/// Brute force: all vectors over alpha of length n+d satisfying the definition.
fn brute_force_points(spec: &LocusSpec) -> BTreeSet<Vec<Rational>> {
    let len = spec.n + spec.d;
    let mut out = BTreeSet::new();
    for code in 0..spec.k.pow(len as u32) {
        let mut c = code;
        let coords: Vec<Rational> = (0..len)
            .map(|_| {
                let v = spec.alpha()[c % spec.k].clone();
                c /= spec.k;
                v
            })
            .collect();
        let pt = LocusPoint { coords: coords.clone(), n: spec.n };
        if pt.is_valid(spec.alpha()) {
            out.insert(coords);
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force_and_count() {
    for n in 1..=4 {
        for k in 1..=n.min(3) {
            for d in 1..=k {
                let spec = LocusSpec::standard(n, k, d).unwrap();
                let pts = enumerate_points(&spec);
                let set: BTreeSet<Vec<Rational>> = pts.iter().map(|p| p.coords.clone()).collect();
                assert_eq!(set.len(), pts.len(), "duplicates for ({n},{k},{d})");
                assert_eq!(set, brute_force_points(&spec), "({n},{k},{d})");
                assert_eq!(BigUint::from(pts.len()), spec.expected_points());
            }
        }
    }
}

#[test]
fn y_action_is_free() {
    let spec = LocusSpec::standard(4, 3, 2).unwrap();
    let pts = enumerate_points(&spec);
    let (orbits, free) = y_orbits(&pts, 2);
    assert!(free);
    assert_eq!(orbits.len() * 2, pts.len());
    assert!(orbits.iter().all(|o| o.len() == 2));
}

#[test]
fn generators_for_a_single_point() {
    let spec = LocusSpec::new(1, 1, 1, vec![rat(7)]).unwrap();
    let u = spec.universe();
    let gens = locus_ideal_gens(&spec);
    assert_eq!(gens, vec![p(u, "7 - y1"), p(u, "x1 - y1"), p(u, "x1 - y1")]);
}

#[test]
fn generators_vanish_and_count_points() {
    let spec = LocusSpec::standard(3, 3, 2).unwrap();
    let report = verify_vanishing_ideal(&spec).unwrap();
    assert!(report.vanishes);
    assert_eq!(report.dimension, Some(36));
    assert!(report.passed());
}

#[test]
fn higher_generators_are_redundant() {
    // r = k+1, k+2 of the value family and r = n+1 of the x family lie in the ideal
    let spec = LocusSpec::standard(3, 2, 2).unwrap();
    let u = spec.universe();
    let (xs, ys) = (u.xs(), u.ys());
    let gb = buchberger(&locus_ideal_gens(&spec), TermOrder::GradedLex).unwrap();
    for r in 3..=4 {
        assert!(gb.contains(&alternating_eh_values(r, spec.alpha(), &ys, u)), "r={r}");
    }
    assert!(gb.contains(&alternating_eh(4, &xs, &ys, u)));
}

#[test]
fn family_specializes_to_locus_and_to_zero() {
    for (n, k, d) in [(2, 2, 1), (3, 3, 2), (4, 3, 2)] {
        let fam = family_ideal_gens(n, k, d).unwrap();
        let spec = LocusSpec::new(n, k, d, random_alpha(k, 11)).unwrap();
        let specialized: Vec<Polynomial> =
            fam.iter().map(|g| specialize_t(g, spec.alpha()).unwrap()).collect();
        assert_eq!(specialized, locus_ideal_gens(&spec));

        let zeros = vec![rat(0); k];
        let at_zero: Vec<Polynomial> = fam.iter().map(|g| specialize_t(g, &zeros).unwrap()).collect();
        let jq = ideal_jq(n, k, d).unwrap().generators;
        // value family: sum (-1)^b e_{r-b}(0) h_b(y) = (-1)^r h_r(y)
        for (r, (a, b)) in (k - d + 1..=k).zip(at_zero.iter().zip(&jq)) {
            let sign = if r % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(*a, b.scale(&sign));
        }
        assert_eq!(at_zero[d..], jq[d..]);
    }
}

#[test]
fn full_rank_family_is_the_ink_relations() {
    // d = k: prod_j (x_i - t_j) lies in the ideal generated by the family
    let (n, k) = (3, 2);
    let fam = family_ideal_gens(n, k, k).unwrap();
    let u = VarUniverse::new(n, k, k);
    let gb = buchberger(&fam, TermOrder::GradedLex).unwrap();
    for i in 1..=n {
        assert!(gb.contains(&x_root_relation(i, &u.ts(), u)));
    }
}

#[test]
fn family_membership_examples() {
    let spec = LocusSpec::standard(3, 3, 2).unwrap();
    for pt in enumerate_points(&spec) {
        let mut z = pt.coords.clone();
        z.extend(spec.alpha().iter().cloned());
        assert!(family_points_membership(3, 3, 2, &z));
    }
    assert!(family_points_membership(3, 3, 2, &vec![rat(0); 8]));
    // x-values omit the y-value 2
    let z: Vec<Rational> = [1, 1, 1, 1, 2, 1, 2, 3].iter().map(|&v| rat(v)).collect();
    assert!(!family_points_membership(3, 3, 2, &z));
    assert!(!family_points_membership(3, 3, 2, &z[..7]));
}

#[test]
fn orbit_harmonics_small_instances() {
    for (n, k, d, dim) in [(3, 3, 2, 36), (2, 2, 2, 4), (3, 1, 1, 1), (2, 2, 1, 2)] {
        let spec = LocusSpec::standard(n, k, d).unwrap();
        let report = verify_orbit_harmonics(&spec, false).unwrap();
        assert!(report.passed(), "({n},{k},{d}): {report:?}");
        assert_eq!(report.dimension, dim);
        assert_eq!(report.elapsed_ms, 0);
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn family_specialization_matches_locus(seed in any::<u64>(), inst in 0usize..3) {
        let (n, k, d) = [(2, 2, 1), (3, 2, 2), (3, 3, 2)][inst];
        let spec = LocusSpec::new(n, k, d, random_alpha(k, seed)).unwrap();
        let fam = family_ideal_gens(n, k, d).unwrap();
        let specialized: Vec<Polynomial> =
            fam.iter().map(|g| specialize_t(g, spec.alpha()).unwrap()).collect();
        prop_assert_eq!(specialized, locus_ideal_gens(&spec));
    }

    #[test]
    fn generators_vanish_on_random_loci(seed in any::<u64>(), inst in 0usize..3) {
        let (n, k, d) = [(2, 2, 1), (3, 2, 2), (3, 3, 2)][inst];
        let spec = LocusSpec::new(n, k, d, random_alpha(k, seed)).unwrap();
        let gens = locus_ideal_gens(&spec);
        for pt in enumerate_points(&spec) {
            prop_assert!(pt.is_valid(spec.alpha()));
            for g in &gens {
                prop_assert!(g.evaluate_at(&pt.coords).is_zero());
            }
        }
    }
}
