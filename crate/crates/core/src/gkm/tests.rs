use proptest::prelude::*;

use super::*;
use crate::poly::rat;
use crate::symfun::{elementary, reynolds_y};
use crate::testutil::{self, config};

fn p(u: VarUniverse, s: &str) -> Polynomial {
    Polynomial::parse(u, s).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

#[test]
fn restriction_examples() {
    let u = VarUniverse::new(3, 2, 3);
    let t = t_universe(3);
    assert_eq!(restrict_at_word(&p(u, "x1"), &w("1,1,2"), 3).unwrap(), p(t, "t1"));
    let e1 = elementary(1, &u.ys(), u).unwrap();
    assert_eq!(restrict_at_word(&e1, &w("1,1,2"), 3).unwrap(), p(t, "t1 + t2"));
    assert_eq!(restrict_at_word(&Polynomial::one(u), &w("3,1,3"), 3).unwrap(), p(t, "1"));
    assert_eq!(restrict_at_word(&p(u, "t2*x3"), &w("3,1,3"), 3).unwrap(), p(t, "t2*t3"));
}

#[test]
fn restriction_requires_invariants() {
    let u = VarUniverse::new(3, 2, 0);
    let err = restrict_at_word(&p(u, "y1"), &w("1,1,2"), 3).unwrap_err();
    assert_eq!(err.to_string(), "restriction defined only on invariants");
    // image size must match the y-block
    assert!(restrict_at_word(&p(u, "x1"), &w("1,1,1"), 3).is_err());
}

#[test]
fn restriction_matrix_examples() {
    let u = VarUniverse::new(2, 1, 0);
    let t = t_universe(2);
    let m = restriction_matrix(2, 2, 1, &[p(u, "1"), p(u, "y1")]).unwrap();
    assert_eq!(m, vec![vec![p(t, "1"), p(t, "t1")], vec![p(t, "1"), p(t, "t2")]]);
    let ones = restriction_matrix(3, 3, 2, &[Polynomial::one(VarUniverse::new(3, 2, 0))]).unwrap();
    assert_eq!(ones.len(), 18);
    assert!(ones.iter().all(|r| r[0] == Polynomial::one(t_universe(3))));
}

#[test]
fn injectivity_examples() {
    let r = verify_injectivity(2, 2, 1, 3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!((r.rows, r.columns), (2, 2));
    let r = verify_injectivity(3, 3, 2, 3).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.rows, 18);
    let r = verify_injectivity(4, 1, 1, 3).unwrap();
    assert_eq!((r.rows, r.columns), (1, 1));
    assert!(r.passed());
}

#[test]
fn star_witness_examples() {
    let pair = star_witness(&w("1,1,2"), &w("3,3,2")).unwrap();
    assert_eq!(pair.positions, vec![1, 2]);
    assert_eq!((pair.from, pair.to), (1, 3));
    assert!(star_witness(&w("1,1,2"), &w("1,1,2")).is_none());
    assert!(star_witness(&w("1,2"), &w("2,1")).is_none());
}

/// Exhaustive witness search over every subset I and letter pair.
fn brute_force_witness(w1: &Word, w2: &Word, k: u32) -> bool {
    let n = w1.len();
    (1u32..1 << n).any(|mask| {
        (1..=k).any(|j1| {
            (1..=k).any(|j2| {
                j1 != j2
                    && (0..n).all(|i| {
                        if mask >> i & 1 == 1 {
                            w1.at(i + 1) == j1 && w2.at(i + 1) == j2
                        } else {
                            w1.at(i + 1) == w2.at(i + 1)
                        }
                    })
            })
        })
    })
}

#[test]
fn star_pairs_match_brute_force() {
    for (n, k, d) in [(2, 2, 2), (3, 3, 2), (3, 2, 1), (4, 3, 2)] {
        let fixed = words(n, k, d);
        let mut expected = 0;
        for a in &fixed {
            for b in &fixed {
                let found = star_witness(a, b).is_some();
                assert_eq!(found, brute_force_witness(a, b, k as u32), "{a} {b}");
                expected += found as usize;
            }
        }
        assert_eq!(star_pairs(n, k, d).len(), expected);
    }
}

#[test]
fn divisibility_examples() {
    let r = verify_divisibility(2, 2, 1).unwrap();
    assert!(r.passed());
    assert_eq!(r.pairs, 2);
    let r = verify_divisibility(3, 3, 2).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.basis_size, 18);
}

#[test]
fn generators_restrict_to_zero() {
    for (n, k, d) in [(2, 2, 1), (3, 3, 2), (4, 3, 3)] {
        let ideal = ideal_i(n, k, d).unwrap();
        for word in words(n, k, d) {
            for g in &ideal.generators {
                assert!(restrict_at_word(g, &word, k).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn full_rank_restriction_is_direct_substitution() {
    // d = k: y-block goes to all of t, so restriction agrees with substituting into Q[x, t]
    let (n, k) = (3, 2);
    let u = VarUniverse::new(n, k, k);
    let f = p(u, "x1^2*t2 - 3*x2*x3 + t1");
    for word in words(n, k, k) {
        let direct = restrict_at_word(&f, &word, k).unwrap();
        let mut pt = vec![rat(0); u.len()];
        let vals = [rat(5), rat(-2)];
        for i in 0..n {
            pt[i] = vals[word.at(i + 1) as usize - 1].clone();
        }
        pt[u.n + u.d..].clone_from_slice(&vals);
        assert_eq!(direct.evaluate_at(&vals), f.evaluate_at(&pt));
    }
}

fn sym_universe() -> VarUniverse {
    VarUniverse::new(3, 2, 3)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn restriction_is_multiplicative(
        f in testutil::polynomial(sym_universe(), 3, 3),
        g in testutil::polynomial(sym_universe(), 3, 3),
        idx in 0usize..18,
    ) {
        let (f, g) = (reynolds_y(&f), reynolds_y(&g));
        let word = &words(3, 3, 2)[idx];
        let fg = restrict_at_word(&(&f * &g), word, 3).unwrap();
        let prod = &restrict_at_word(&f, word, 3).unwrap() * &restrict_at_word(&g, word, 3).unwrap();
        prop_assert_eq!(fg, prod);
        let sum = restrict_at_word(&(&f + &g), word, 3).unwrap();
        prop_assert_eq!(sum, &restrict_at_word(&f, word, 3).unwrap() + &restrict_at_word(&g, word, 3).unwrap());
    }
}
