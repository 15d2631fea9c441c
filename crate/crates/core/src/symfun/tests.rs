use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::combin::combinations;
use crate::testutil::{self, config};

fn ys(d: usize) -> (VarUniverse, Vec<Var>) {
    let u = VarUniverse::new(0, d, 0);
    (u, u.ys())
}

fn p(u: VarUniverse, s: &str) -> Polynomial {
    Polynomial::parse(u, s).unwrap()
}

/// Schur polynomial as a sum over semistandard tableaux, by brute force over fillings.
fn schur_by_tableaux(lambda: &Partition, nvars: usize, u: VarUniverse) -> Polynomial {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (0..lambda.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut acc = Polynomial::zero(u);
    let total = nvars.pow(cells.len() as u32);
    for code in 0..total {
        let mut fill = BTreeMap::new();
        let mut x = code;
        for &cell in &cells {
            fill.insert(cell, x % nvars);
            x /= nvars;
        }
        let ok = cells.iter().all(|&(r, c)| {
            let v = fill[&(r, c)];
            let row_ok = c == 0 || fill[&(r, c - 1)] <= v;
            let col_ok = r == 0 || fill[&(r - 1, c)] < v;
            row_ok && col_ok
        });
        if ok {
            let mut m = Monomial::one(u.len());
            for &v in fill.values() {
                m.set_exp(u.n + v, m.exp(u.n + v) + 1);
            }
            acc.add_term(m, rat(1));
        }
    }
    acc
}

#[test]
fn elementary_examples() {
    let u = VarUniverse::new(3, 0, 0);
    let xs = u.xs();
    assert_eq!(elementary(1, &xs, u).unwrap(), p(u, "x1 + x2 + x3"));
    assert!(elementary(4, &xs, u).unwrap().is_zero());
    assert_eq!(elementary(2, &xs, u).unwrap(), p(u, "x1*x2 + x1*x3 + x2*x3"));
    assert_eq!(elementary(0, &xs, u).unwrap(), Polynomial::one(u));
    assert_eq!(elementary(-1, &xs, u).unwrap_err().to_string(), "negative degree -1");
}

#[test]
fn complete_examples() {
    let (u, y) = ys(2);
    assert_eq!(complete(2, &y, u), p(u, "y1^2 + y1*y2 + y2^2"));
    assert_eq!(complete(0, &y, u), Polynomial::one(u));
    assert!(complete(-1, &y, u).is_zero());
    assert_eq!(complete(3, &y[..1], u), p(u, "y1^3"));
}

#[test]
fn schur_examples() {
    let (u, y) = ys(2);
    let part = |v: Vec<u32>| Partition::new(v).unwrap();
    assert_eq!(schur(&part(vec![1]), &y, u), p(u, "y1 + y2"));
    // h1^2 - h2
    assert_eq!(schur(&part(vec![1, 1]), &y, u), p(u, "y1*y2"));
    // h2*h1 - h3
    assert_eq!(schur(&part(vec![2, 1]), &y, u), p(u, "y1^2*y2 + y1*y2^2"));
    assert_eq!(schur(&Partition::empty(), &y, u), Polynomial::one(u));
    assert!(schur(&part(vec![1, 1, 1]), &y, u).is_zero());
}

#[test]
fn schur_matches_tableaux_up_to_size_six() {
    for nvars in 1..=3 {
        let (u, y) = ys(nvars);
        for size in 0..=6u32 {
            for lambda in partitions_in_box(6, 6).into_iter().filter(|l| l.size() == size) {
                assert_eq!(
                    schur(&lambda, &y, u),
                    schur_by_tableaux(&lambda, nvars, u),
                    "lambda {lambda} in {nvars} variables"
                );
            }
        }
    }
}

#[test]
fn partitions_in_box_examples() {
    let show = |v: Vec<Partition>| v.into_iter().map(|p| p.to_string()).collect::<Vec<_>>();
    assert_eq!(show(partitions_in_box(1, 2)), ["()", "(1)", "(2)"]);
    assert_eq!(show(partitions_in_box(2, 1)), ["()", "(1)", "(1,1)"]);
    assert_eq!(partitions_in_box(2, 2).len(), 6);
    assert_eq!(partitions_in_box(0, 3).len(), 1);
    for d in 0..=4 {
        for m in 0..=4u32 {
            let n = crate::combin::binomial(d + m as usize, d);
            assert_eq!(partitions_in_box(d, m).len(), usize::try_from(n).unwrap());
        }
    }
}

#[test]
fn subset_of_partition_examples() {
    let part = |v: Vec<u32>| Partition::new(v).unwrap();
    assert_eq!(subset_of_partition(&Partition::empty(), 3, 6).unwrap(), vec![1, 2, 3]);
    assert_eq!(subset_of_partition(&part(vec![3, 3, 3]), 3, 6).unwrap(), vec![4, 5, 6]);
    assert_eq!(partition_of_subset(&[2, 4, 5], 3, 6).unwrap(), part(vec![2, 2, 1]));
    assert!(subset_of_partition(&part(vec![4]), 3, 6).is_err());
    assert!(subset_of_partition(&part(vec![1, 1, 1, 1]), 3, 6).is_err());
}

#[test]
fn subset_of_partition_is_a_bijection() {
    for k in 1..=7 {
        for d in 0..=k {
            let images: Vec<Vec<usize>> = partitions_in_box(d, (k - d) as u32)
                .iter()
                .map(|l| subset_of_partition(l, d, k).unwrap())
                .collect();
            let mut sorted = images.clone();
            sorted.sort();
            let expected: Vec<Vec<usize>> = combinations(k, d)
                .into_iter()
                .map(|c| c.into_iter().map(|i| i + 1).collect())
                .collect();
            assert_eq!(sorted, expected, "k={k} d={d}");
            for (l, s) in partitions_in_box(d, (k - d) as u32).iter().zip(&images) {
                assert_eq!(&partition_of_subset(s, d, k).unwrap(), l);
            }
        }
    }
}

#[test]
fn gaussian_binomial_examples() {
    assert_eq!(gaussian_binomial(2, 1), QPoly::from_i64(&[1, 1]));
    assert_eq!(gaussian_binomial(4, 2), QPoly::from_i64(&[1, 1, 2, 1, 1]));
    for k in 0..=6 {
        assert_eq!(gaussian_binomial(k, k), QPoly::one());
    }
}

#[test]
fn gaussian_binomial_counts_partitions_in_box() {
    for k in 0..=8 {
        for d in 0..=k {
            let by_partitions =
                QPoly::from_degrees(partitions_in_box(d, (k - d) as u32).iter().map(Partition::size));
            let g = gaussian_binomial(k, d);
            assert_eq!(g, by_partitions, "k={k} d={d}");
            assert_eq!(g.eval_at_one(), crate::combin::binomial(k, d).into());
        }
    }
}

#[test]
fn reynolds_examples() {
    let u = VarUniverse::new(1, 2, 0);
    assert_eq!(reynolds_y(&p(u, "y1")), p(u, "1/2*y1 + 1/2*y2"));
    let e2 = p(u, "y1*y2");
    assert_eq!(reynolds_y(&e2), e2);
    assert_eq!(reynolds_y(&p(u, "x1*y1^2")), p(u, "1/2*x1*y1^2 + 1/2*x1*y2^2"));
    // symmetrizing y1*y2^2 and clearing the 1/2! gives an integer polynomial
    let sym = reynolds_y(&p(u, "y1*y2^2")).scale(&rat(2));
    assert!(sym.is_integer_polynomial());
}

#[test]
fn schur_expansion_round_trip() {
    let u = VarUniverse::new(1, 2, 1);
    let y = u.ys();
    let l21 = Partition::new(vec![2, 1]).unwrap();
    let l1 = Partition::new(vec![1]).unwrap();
    let f = &schur(&l21, &y, u).mul_monomial(&Monomial::from_exps(&[1, 0, 0, 2]), &rat(3))
        - &schur(&l1, &y, u);
    let exp = schur_expansion(&f).unwrap();
    assert_eq!(exp.len(), 2);
    let mut back = Polynomial::zero(u);
    for (m, l, c) in &exp {
        back += &schur(l, &y, u).mul_monomial(m, c);
    }
    assert_eq!(back, f);
    assert!(schur_expansion(&p(u, "y1")).is_none());
}

#[test]
fn alternating_sum_sign_convention() {
    // r = 1: e_1(t) - h_1(y); r = 2: e_2(t) - e_1(t) h_1(y) + h_2(y)
    let u = VarUniverse::new(0, 1, 2);
    let (t, y) = (u.ts(), u.ys());
    assert_eq!(alternating_eh(1, &t, &y, u), p(u, "t1 + t2 - y1"));
    assert_eq!(
        alternating_eh(2, &t, &y, u),
        p(u, "t1*t2 - t1*y1 - t2*y1 + y1^2")
    );
    let vals = [rat(1), rat(2)];
    assert_eq!(alternating_eh_values(2, &vals, &y, u), p(u, "2 - 3*y1 + y1^2"));
}

#[test]
fn eh_identity_vanishes() {
    for nv in 1..=4 {
        let (u, y) = ys(nv);
        for r in 1..=6 {
            assert!(alternating_eh(r, &y, &y, u).is_zero(), "r={r} vars={nv}");
        }
    }
}

fn y_universe() -> VarUniverse {
    VarUniverse::new(1, 3, 0)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn reynolds_is_idempotent(f in testutil::polynomial(y_universe(), 4, 3)) {
        let r = reynolds_y(&f);
        prop_assert_eq!(reynolds_y(&r), r.clone());
        prop_assert!(is_y_symmetric(&r));
    }

    #[test]
    fn schur_is_symmetric(parts in proptest::collection::vec(0u32..4, 0..4)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts).unwrap();
        let (u, y) = ys(3);
        let s = schur(&lambda, &y, u);
        prop_assert!(is_y_symmetric(&s));
        prop_assert!(s.is_homogeneous());
    }
}
