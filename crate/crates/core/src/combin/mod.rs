//! Stirling numbers, words, staircases and permutations.

pub mod perm;
pub mod word;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use perm::{all_permutations, Permutation};
pub use word::{words, Cell, PatternMatrix, Word};

/// Stirling number of the second kind by the triangle recurrence.
pub fn stirling2(n: usize, d: usize) -> BigUint {
    if d > n {
        return BigUint::zero();
    }
    // row[j] = Stir(i, j)
    let mut row = vec![BigUint::zero(); d + 1];
    row[0] = BigUint::one();
    for _ in 1..=n {
        for j in (1..=d).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(d)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `k! / (k-d)!`.
pub fn falling_factorial(k: usize, d: usize) -> BigUint {
    if d > k {
        return BigUint::zero();
    }
    (k - d + 1..=k).map(BigUint::from).product()
}

pub fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    falling_factorial(n, r) / factorial(r)
}

/// Shuffles of `(0, 1, .., d-1)` with `n-d` copies of `d-1`, deduplicated and sorted.
pub fn staircases(n: usize, d: usize) -> Vec<Vec<u32>> {
    assert!(d >= 1 && d <= n, "staircases need 1 <= d <= n");
    let mut out = BTreeSet::new();
    for positions in combinations(n, d) {
        let mut seq = vec![d as u32 - 1; n];
        for (v, &p) in positions.iter().enumerate() {
            seq[p] = v as u32;
        }
        out.insert(seq);
    }
    out.into_iter().collect()
}

/// Sequences componentwise below some staircase, sorted lexicographically.
pub fn substaircase_sequences(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn below(bound: &[u32], cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if cur.len() == bound.len() {
            out.insert(cur.clone());
            return;
        }
        for e in 0..=bound[cur.len()] {
            cur.push(e);
            below(bound, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    for s in staircases(n, d) {
        below(&s, &mut Vec::with_capacity(n), &mut out);
    }
    out.into_iter().collect()
}

/// `r`-element subsets of `{0, .., n-1}` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, 0, &mut Vec::new(), &mut out);
    out
}
