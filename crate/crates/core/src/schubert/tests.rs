use proptest::prelude::*;

use super::*;
use crate::combin::all_permutations;
use crate::testutil::{self, config};

fn p(u: VarUniverse, s: &str) -> Polynomial {
    Polynomial::parse(u, s).unwrap()
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

const LITERAL: Convention = Convention { action: Action::Right, t_sign: TSign::Plus };

#[test]
fn small_double_schubert_polynomials() {
    assert_eq!(double_schubert(&Permutation::identity(3)), Polynomial::one(VarUniverse::new(3, 0, 3)));
    let u2 = VarUniverse::new(2, 0, 2);
    assert_eq!(double_schubert(&perm(&[2, 1])), p(u2, "x1 - t1"));
    let u = VarUniverse::new(3, 0, 3);
    assert_eq!(double_schubert(&perm(&[2, 1, 3])), p(u, "x1 - t1"));
    assert_eq!(double_schubert(&perm(&[1, 3, 2])), p(u, "x1 + x2 - t1 - t2"));
    assert_eq!(double_schubert(&perm(&[3, 2, 1])), top_double_schubert(3));
}

#[test]
fn divided_difference_examples() {
    let u = VarUniverse::new(3, 0, 1);
    assert_eq!(divided_difference(&p(u, "x1"), 1), p(u, "1"));
    assert_eq!(divided_difference(&p(u, "x2"), 1), p(u, "-1"));
    assert_eq!(divided_difference(&p(u, "x1^3*t1"), 1), p(u, "x1^2*t1 + x1*x2*t1 + x2^2*t1"));
    assert_eq!(divided_difference(&p(u, "x1*x2 + x3"), 1), p(u, "0"));
}

#[test]
fn degree_equals_length() {
    for n in 1..=4 {
        for v in all_permutations(n) {
            let v = Permutation::new(v).unwrap();
            let s = double_schubert(&v);
            assert!(s.is_homogeneous());
            assert_eq!(s.total_degree(), Some(v.length() as u32), "{v}");
        }
    }
}

#[test]
fn transition_agrees_with_divided_differences() {
    for n in 1..=5 {
        for v in all_permutations(n) {
            let v = Permutation::new(v).unwrap();
            assert_eq!(double_schubert(&v), double_schubert_along(&v, AscentChoice::First), "{v}");
        }
    }
}

#[test]
fn large_permutations_are_cheap() {
    let v = perm(&[2, 5, 4, 6, 7, 1, 8, 9, 3]);
    let s = double_schubert(&v);
    assert_eq!(s.total_degree(), Some(v.length() as u32));
    assert!(s.is_homogeneous());
    // only t_1..t_4 occur, as the representative formula needs
    assert!(s.occurring_vars().iter().all(|var| !matches!(var, Var::T(j) if *j > 4)));
}

#[test]
fn ascent_choice_does_not_matter() {
    for v in all_permutations(4) {
        let v = Permutation::new(v).unwrap();
        assert_eq!(
            double_schubert_along(&v, AscentChoice::First),
            double_schubert_along(&v, AscentChoice::Last),
            "{v}"
        );
    }
}

/// Bruhat order by the tableau criterion: sorted prefixes compare entrywise.
fn bruhat_le(v: &Permutation, u: &Permutation) -> bool {
    (1..=v.len()).all(|i| {
        let mut a: Vec<usize> = v.one_line()[..i].to_vec();
        let mut b: Vec<usize> = u.one_line()[..i].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

#[test]
fn localization_vanishes_outside_bruhat_interval() {
    let n = 3;
    let u = VarUniverse::new(n, 0, n);
    let tu = VarUniverse::new(0, 0, n);
    let all: Vec<Permutation> = all_permutations(n).into_iter().map(|v| Permutation::new(v).unwrap()).collect();
    for v in &all {
        for at in &all {
            let subst: HashMap<Var, Polynomial> =
                (1..=n).map(|i| (Var::X(i), Polynomial::var(tu, Var::T(at.apply(i))))).collect();
            let value = double_schubert(v).substitute(&subst, tu).unwrap();
            assert_eq!(value.is_zero(), !bruhat_le(v, at), "{v} at {at}");
        }
    }
    assert_eq!(u.len(), 6);
}

#[test]
fn worked_example_cell_data() {
    let data = cell_data(&w("2,4,1,1,2,4,1,3,4"), 4).unwrap();
    assert_eq!(data.convex, w("2,2,4,4,4,1,1,1,3"));
    assert_eq!(data.sort, perm(&[1, 5, 2, 6, 9, 3, 4, 7, 8]));
    assert_eq!(data.standard, perm(&[2, 5, 4, 6, 7, 1, 8, 9, 3]));
}

#[test]
fn representative_examples() {
    let u = VarUniverse::new(2, 0, 2);
    assert_eq!(cell_representative(&w("1,2"), 2, Convention::default()).unwrap(), p(u, "1"));
    assert_eq!(cell_representative(&w("2,1"), 2, LITERAL).unwrap(), p(u, "-x1 - t1"));
    assert_eq!(cell_representative(&w("2,1"), 2, Convention::default()).unwrap(), p(u, "-x1 + t1"));
    let u1 = VarUniverse::new(2, 0, 1);
    assert_eq!(cell_representative(&w("1,1"), 1, Convention::default()).unwrap(), p(u1, "1"));
    let err = cell_representative(&w("1,1"), 2, Convention::default()).unwrap_err();
    assert_eq!(err.to_string(), "representative formula known only for d = k");
}

#[test]
fn representatives_use_only_low_t_variables() {
    for n in 1..=4 {
        for k in 1..=n {
            for word in words(n, k, k) {
                for c in Convention::ALL {
                    let r = cell_representative(&word, k, c).unwrap();
                    assert_eq!(r.universe(), VarUniverse::new(n, 0, k));
                }
            }
        }
    }
}

#[test]
fn action_moves_variables() {
    let u = VarUniverse::new(3, 0, 0);
    let pi = perm(&[2, 3, 1]);
    assert_eq!(act_on_x(&p(u, "x1"), &pi, Action::Left), p(u, "x2"));
    assert_eq!(act_on_x(&p(u, "x1"), &pi, Action::Right), p(u, "x3"));
}

#[test]
fn conventions_parse() {
    for c in Convention::ALL {
        assert_eq!(c.to_string().parse::<Convention>().unwrap(), c);
    }
    assert!("up-down".parse::<Convention>().is_err());
}

#[test]
fn representatives_form_a_basis() {
    for (n, k) in [(2, 2), (3, 2), (3, 3), (4, 2)] {
        let r = verify_representatives(n, k, Convention::default(), 7).unwrap();
        assert!(r.passed(), "({n},{k}): {r:?}");
        assert!(r.support_triangular);
        assert!(verify_representatives(n, k, LITERAL, 7).unwrap().is_basis());
    }
    assert_eq!(verify_representatives(3, 2, Convention::default(), 7).unwrap().representatives, 6);
}

#[test]
fn left_action_fails_beyond_small_cases() {
    for t_sign in [TSign::Plus, TSign::Minus] {
        let c = Convention { action: Action::Left, t_sign };
        assert!(verify_representatives(2, 2, c, 7).unwrap().is_basis());
        assert!(!verify_representatives(4, 2, c, 7).unwrap().is_basis());
    }
}

#[test]
fn t_zero_limit_is_single_schubert_in_minus_x() {
    // 𝔖_v(x; 0) is the single Schubert polynomial; compare with ∂ from x1^{n-1} x2^{n-2} ...
    let n = 3;
    let u = VarUniverse::new(n, 0, n);
    let zero = vec![Rational::zero(); n];
    let mut top = Polynomial::one(u);
    for i in 1..n {
        top = &top * &Polynomial::var(u, Var::X(i)).pow((n - i) as u32);
    }
    for v in all_permutations(n) {
        let v = Permutation::new(v).unwrap();
        // climb by ascents to w0, then come back down with ∂ on x^δ
        let mut path = Vec::new();
        let mut cur = v.clone();
        while let Some(i) = (1..n).find(|&i| cur.apply(i) < cur.apply(i + 1)) {
            path.push(i);
            cur = cur.swap_positions(i);
        }
        let single = path.iter().rev().fold(top.clone(), |f, &i| divided_difference(&f, i));
        let at_zero = crate::loci::specialize_t(&double_schubert(&v), &zero).unwrap();
        assert_eq!(at_zero, crate::loci::specialize_t(&single, &zero).unwrap(), "{v}");
    }
}

fn op_universe() -> VarUniverse {
    VarUniverse::new(4, 0, 1)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn divided_differences_square_to_zero(f in testutil::polynomial(op_universe(), 4, 4), i in 1usize..4) {
        prop_assert!(divided_difference(&divided_difference(&f, i), i).is_zero());
    }

    #[test]
    fn divided_differences_satisfy_braid_relations(f in testutil::polynomial(op_universe(), 4, 4), i in 1usize..3) {
        let a = divided_difference(&divided_difference(&divided_difference(&f, i), i + 1), i);
        let b = divided_difference(&divided_difference(&divided_difference(&f, i + 1), i), i + 1);
        prop_assert_eq!(a, b);
        // far-apart operators commute
        let c = divided_difference(&divided_difference(&f, 1), 3);
        let d = divided_difference(&divided_difference(&f, 3), 1);
        prop_assert_eq!(c, d);
    }

    #[test]
    fn divided_difference_matches_quotient(f in testutil::polynomial(op_universe(), 4, 4), i in 1usize..4) {
        // (x_i - x_{i+1}) ∂_i f = f - s_i f
        let u = op_universe();
        let mut swap: Vec<usize> = (0..u.len()).collect();
        swap.swap(i - 1, i);
        let lhs = &(&Polynomial::var(u, Var::X(i)) - &Polynomial::var(u, Var::X(i + 1))) * &divided_difference(&f, i);
        prop_assert_eq!(lhs, &f - &f.permute_indices(&swap));
    }

    #[test]
    fn schubert_is_reduced_word_independent(idx in 0usize..24) {
        let v = Permutation::new(all_permutations(4)[idx].clone()).unwrap();
        prop_assert_eq!(double_schubert_along(&v, AscentChoice::First), double_schubert_along(&v, AscentChoice::Last));
    }
}
