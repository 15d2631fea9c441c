use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A word `w : [n] -> [k]`, stored as its 1-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "word {letters:?} has a zero letter; letters are 1-based"
            )));
        }
        Ok(Self(letters))
    }

    /// Construct and check that every letter lies in `[k]`.
    pub fn over(letters: Vec<u32>, k: usize) -> Result<Self> {
        if letters.iter().any(|&l| l as usize > k) {
            return Err(Error::InvalidParameters(format!(
                "word {letters:?} uses a letter outside [{k}]"
            )));
        }
        Self::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The image set, ascending.
    pub fn support(&self) -> Vec<u32> {
        self.0.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn image_size(&self) -> usize {
        self.support().len()
    }

    pub fn is_fubini(&self, k: usize) -> bool {
        self.support() == (1..=k as u32).collect::<Vec<_>>()
    }

    /// Positions (1-based) holding the first occurrence of their letter.
    pub fn initial_positions(&self) -> Vec<usize> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (j, &l) in self.0.iter().enumerate() {
            if seen.insert(l) {
                out.push(j + 1);
            }
        }
        out
    }

    /// Distinct letters in order of first occurrence.
    pub fn first_occurrence_order(&self) -> Vec<u32> {
        let mut seen = BTreeSet::new();
        self.0.iter().copied().filter(|l| seen.insert(*l)).collect()
    }

    /// No subword `i .. j .. i` with `i != j`.
    pub fn is_convex(&self) -> bool {
        let mut closed = BTreeSet::new();
        for w in self.0.windows(2) {
            if w[0] != w[1] {
                closed.insert(w[0]);
                if closed.contains(&w[1]) {
                    return false;
                }
            }
        }
        true
    }

    /// Order-preserving relabeling onto `[d]`, `d` the image size.
    pub fn relabel(&self) -> Word {
        let rank: BTreeMap<u32, u32> = self
            .support()
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i as u32 + 1))
            .collect();
        Word(self.0.iter().map(|l| rank[l]).collect())
    }

    /// The convex word with the same letter multiplicities whose letters appear in the
    /// same first-occurrence order, together with the permutation `σ` satisfying
    /// `conv(i) = w(σ(i))`, i.e. `σ` lists the positions of `w` letter class by letter
    /// class, each class in increasing order.
    pub fn convexify(&self) -> (Word, Permutation) {
        let order = self.first_occurrence_order();
        let mut conv = Vec::with_capacity(self.len());
        let mut sigma = Vec::with_capacity(self.len());
        for &letter in &order {
            for (j, &l) in self.0.iter().enumerate() {
                if l == letter {
                    conv.push(letter);
                    sigma.push(j + 1);
                }
            }
        }
        (Word(conv), Permutation::new(sigma).expect("positions form a permutation"))
    }

    /// Replace the non-initial letters of a convex Fubini word by `k+1, .., n` from
    /// left to right.
    pub fn standardize_convex(&self, k: usize) -> Result<Permutation> {
        if !self.is_convex() {
            return Err(Error::NotConvex(self.0.clone()));
        }
        if !self.is_fubini(k) {
            return Err(Error::InvalidParameters(format!(
                "word {:?} is not a surjection onto [{k}]",
                self.0
            )));
        }
        let initial: BTreeSet<usize> = self.initial_positions().into_iter().collect();
        let mut next = k + 1;
        let one_line = self
            .0
            .iter()
            .enumerate()
            .map(|(j, &l)| {
                if initial.contains(&(j + 1)) {
                    l as usize
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        Permutation::new(one_line)
    }

    /// The `k x n` pattern matrix.
    pub fn pattern_matrix(&self, k: usize) -> PatternMatrix {
        let n = self.len();
        let first: BTreeMap<u32, usize> = self
            .initial_positions()
            .into_iter()
            .map(|j| (self.at(j), j))
            .collect();
        let mut rows = vec![vec![Cell::Zero; n]; k];
        for j in 1..=n {
            let wj = self.at(j);
            let initial = first[&wj] == j;
            for i in 1..=k as u32 {
                let cell = if wj == i {
                    Cell::One
                } else if initial {
                    let earlier = first.get(&i).is_some_and(|&p| p < j);
                    if wj > i && earlier {
                        Cell::Star
                    } else {
                        Cell::Zero
                    }
                } else if first.get(&i).is_some_and(|&p| p < first[&wj]) {
                    Cell::Star
                } else {
                    Cell::Zero
                };
                rows[i as usize - 1][j - 1] = cell;
            }
        }
        PatternMatrix { rows }
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Vec<u32> {
        w.0
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Comma-separated letters, e.g. `4,4,1,4,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad letter `{t}` in word `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    Star,
}

impl Serialize for Cell {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Cell::Zero => "0",
            Cell::One => "1",
            Cell::Star => "*",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternMatrix {
    rows: Vec<Vec<Cell>>,
}

impl PatternMatrix {
    /// Entry at 1-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> Cell {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    /// 1-based coordinates of the stars, row-major.
    pub fn stars(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c == Cell::Star {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }
}

impl fmt::Display for PatternMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let s: Vec<&str> = row
                .iter()
                .map(|c| match c {
                    Cell::Zero => "0",
                    Cell::One => "1",
                    Cell::Star => "*",
                })
                .collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// All words of length `n` over `[k]` with image size exactly `d`, in lexicographic order.
pub fn words(n: usize, k: usize, d: usize) -> Vec<Word> {
    fn go(n: usize, k: usize, d: usize, prefix: &mut Vec<u32>, used: &mut [usize], distinct: usize, out: &mut Vec<Word>) {
        let remaining = n - prefix.len();
        if distinct > d || distinct + remaining < d {
            return;
        }
        if remaining == 0 {
            out.push(Word(prefix.clone()));
            return;
        }
        for l in 1..=k {
            let fresh = used[l - 1] == 0;
            used[l - 1] += 1;
            prefix.push(l as u32);
            go(n, k, d, prefix, used, distinct + fresh as usize, out);
            prefix.pop();
            used[l - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![0; k];
    go(n, k, d, &mut Vec::with_capacity(n), &mut used, 0, &mut out);
    out
}
