//! Internal representation used while running Buchberger's algorithm.
//!
//! Monomials are stored as order keys: the exponent vector for lex, and the
//! total degree followed by the exponent vector for graded lex. Under this
//! encoding both orders are plain lexicographic comparison of keys, and
//! multiplication and division are componentwise.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::poly::{Monomial, Polynomial, Rational, TermOrder, VarUniverse};

pub(crate) type Key = SmallVec<[u16; 16]>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Encoding {
    pub order: TermOrder,
    pub nvars: usize,
}

impl Encoding {
    fn offset(&self) -> usize {
        match self.order {
            TermOrder::Lex => 0,
            TermOrder::GradedLex => 1,
        }
    }

    pub fn encode(&self, m: &Monomial) -> Key {
        let mut k = Key::with_capacity(self.nvars + 1);
        if self.order == TermOrder::GradedLex {
            k.push(u16::try_from(m.degree()).expect("degree exceeds u16::MAX"));
        }
        k.extend_from_slice(m.exps());
        k
    }

    pub fn decode(&self, k: &Key) -> Monomial {
        Monomial::from_exps(&k[self.offset()..].iter().map(|&e| e as u32).collect::<Vec<_>>())
    }

    pub fn degree(&self, k: &Key) -> u32 {
        match self.order {
            TermOrder::Lex => k.iter().map(|&e| e as u32).sum(),
            TermOrder::GradedLex => k[0] as u32,
        }
    }

    pub fn lcm(&self, a: &Key, b: &Key) -> Key {
        let mut out: Key = a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect();
        if self.order == TermOrder::GradedLex {
            out[0] = out[1..].iter().sum();
        }
        out
    }

    pub fn coprime(&self, a: &Key, b: &Key) -> bool {
        a[self.offset()..]
            .iter()
            .zip(&b[self.offset()..])
            .all(|(&x, &y)| x == 0 || y == 0)
    }

    pub fn sev(&self, k: &Key) -> u64 {
        let mut bits = 0u64;
        for (i, &e) in k[self.offset()..].iter().enumerate() {
            if e > 0 {
                bits |= 1 << (i % 64);
            }
        }
        bits
    }

    pub fn encode_poly(&self, p: &Polynomial) -> IPoly {
        let mut terms: Vec<(Key, Rational)> =
            p.terms().map(|(m, c)| (self.encode(m), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        IPoly::from_sorted(self, terms)
    }

    pub fn decode_poly(&self, universe: VarUniverse, p: &IPoly) -> Polynomial {
        Polynomial::from_terms(universe, p.terms.iter().map(|(k, c)| (self.decode(k), c.clone())))
    }
}

pub(crate) fn divides(a: &Key, b: &Key) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn key_mul(a: &Key, b: &Key) -> Key {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn key_quot(num: &Key, den: &Key) -> Key {
    num.iter().zip(den).map(|(&x, &y)| x - y).collect()
}

/// Terms sorted strictly descending by key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Key, Rational)>,
    pub sev: u64,
}

impl IPoly {
    pub fn from_sorted(enc: &Encoding, terms: Vec<(Key, Rational)>) -> Self {
        let sev = terms.first().map_or(0, |(k, _)| enc.sev(k));
        Self { terms, sev }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Key {
        &self.terms[0].0
    }

    pub fn is_constant(&self, enc: &Encoding) -> bool {
        !self.is_zero() && enc.degree(self.lead()) == 0
    }

    pub fn make_monic(&mut self) {
        let lc = self.terms[0].1.clone();
        if lc.is_one() {
            return;
        }
        let inv = lc.recip();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }
}

/// Full reduction of the terms in `work` by the polynomials `reducers[idx]` for `idx` in
/// `active`, all of which must be monic. Returns the remainder.
pub(crate) fn reduce_map(
    enc: &Encoding,
    mut work: BTreeMap<Key, Rational>,
    reducers: &[IPoly],
    active: &[usize],
) -> IPoly {
    let mut rem: Vec<(Key, Rational)> = Vec::new();
    while let Some((key, coef)) = work.pop_last() {
        let sev = enc.sev(&key);
        let mut best: Option<usize> = None;
        for &i in active {
            let g = &reducers[i];
            if g.sev & !sev != 0 || !divides(g.lead(), &key) {
                continue;
            }
            if best.is_none_or(|b| g.terms.len() < reducers[b].terms.len()) {
                best = Some(i);
            }
        }
        match best {
            None => rem.push((key, coef)),
            Some(i) => {
                let g = &reducers[i];
                let q = key_quot(&key, g.lead());
                for (k2, c2) in &g.terms[1..] {
                    let k = key_mul(k2, &q);
                    let delta = &coef * c2;
                    match work.entry(k) {
                        std::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(-delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut o) => {
                            *o.get_mut() -= delta;
                            if o.get().is_zero() {
                                o.remove();
                            }
                        }
                    }
                }
            }
        }
    }
    IPoly::from_sorted(enc, rem)
}

pub(crate) fn reduce(enc: &Encoding, f: &IPoly, reducers: &[IPoly], active: &[usize]) -> IPoly {
    let work: BTreeMap<Key, Rational> = f.terms.iter().cloned().collect();
    reduce_map(enc, work, reducers, active)
}

/// S-polynomial of two monic polynomials, with the cancelling leading terms omitted.
pub(crate) fn s_poly_map(enc: &Encoding, f: &IPoly, g: &IPoly) -> BTreeMap<Key, Rational> {
    let l = enc.lcm(f.lead(), g.lead());
    let qf = key_quot(&l, f.lead());
    let qg = key_quot(&l, g.lead());
    let mut work: BTreeMap<Key, Rational> = BTreeMap::new();
    for (k, c) in &f.terms[1..] {
        work.insert(key_mul(k, &qf), c.clone());
    }
    for (k, c) in &g.terms[1..] {
        let key = key_mul(k, &qg);
        match work.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(-c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
    work
}

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller installation of criteria. Returns the reduced basis sorted
/// ascending by leading key, or `None` for the unit ideal.
pub(crate) fn run(enc: &Encoding, inputs: Vec<IPoly>) -> Option<Vec<IPoly>> {
    let mut inputs = inputs;
    for p in &mut inputs {
        p.make_monic();
    }
    inputs.sort_by(|a, b| a.lead().cmp(b.lead()).then_with(|| a.terms.len().cmp(&b.terms.len())));

    let mut state = State { enc: *enc, polys: Vec::new(), active: Vec::new(), pairs: BTreeMap::new() };
    for f in inputs {
        let mut h = reduce(enc, &f, &state.polys, &state.active);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant(enc) {
            return None;
        }
        state.insert(h);
    }

    while let Some(((_, i, j), _)) = state.pairs.pop_first() {
        let work = s_poly_map(enc, &state.polys[i], &state.polys[j]);
        let mut h = reduce_map(enc, work, &state.polys, &state.active);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.is_constant(enc) {
            return None;
        }
        state.insert(h);
    }

    Some(interreduce(enc, &state.polys, &state.active))
}

struct State {
    enc: Encoding,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    /// (lcm degree, i, j) with i < j, mapped to the lcm key.
    pairs: BTreeMap<(u32, usize, usize), Key>,
}

impl State {
    fn insert(&mut self, h: IPoly) {
        let enc = self.enc;
        let hi = self.polys.len();
        let lh = h.lead().clone();

        // Chain criterion among the new pairs.
        let cands: Vec<(usize, Key, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.polys[g].lead();
                (g, enc.lcm(lg, &lh), enc.coprime(lg, &lh))
            })
            .collect();
        let mut kept: Vec<(usize, Key, bool)> = Vec::new();
        for (idx, (g, l, cop)) in cands.iter().enumerate() {
            let dominated = !cop
                && (cands[idx + 1..].iter().any(|(_, l2, _)| divides(l2, l))
                    || kept.iter().any(|(_, l2, _)| divides(l2, l)));
            if !dominated {
                kept.push((*g, l.clone(), *cop));
            }
        }

        // Old pairs made redundant by h.
        self.pairs.retain(|&(_, i, j), l| {
            if !divides(&lh, l) {
                return true;
            }
            let li = enc.lcm(self.polys[i].lead(), &lh);
            let lj = enc.lcm(self.polys[j].lead(), &lh);
            li == *l || lj == *l
        });

        for (g, l, cop) in kept {
            if !cop {
                self.pairs.insert((enc.degree(&l), g, hi), l);
            }
        }

        let polys = &self.polys;
        self.active.retain(|&g| !divides(&lh, polys[g].lead()));
        self.active.push(hi);
        self.polys.push(h);
    }
}

fn interreduce(enc: &Encoding, polys: &[IPoly], active: &[usize]) -> Vec<IPoly> {
    let mut idx: Vec<usize> = active.to_vec();
    idx.sort_by(|&a, &b| polys[a].lead().cmp(polys[b].lead()));
    let mut out: Vec<IPoly> = Vec::with_capacity(idx.len());
    for (pos, &i) in idx.iter().enumerate() {
        let others: Vec<usize> = idx.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &j)| j).collect();
        let f = &polys[i];
        // The leading term is irreducible by the others, so reduce only the tail.
        let tail: BTreeMap<Key, Rational> = f.terms[1..].iter().cloned().collect();
        let r = reduce_map(enc, tail, polys, &others);
        let mut terms = Vec::with_capacity(r.terms.len() + 1);
        terms.push(f.terms[0].clone());
        terms.extend(r.terms);
        let mut g = IPoly::from_sorted(enc, terms);
        g.make_monic();
        out.push(g);
    }
    out
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub(crate) fn audit(enc: &Encoding, basis: &[IPoly]) -> Option<(usize, usize)> {
    let all: Vec<usize> = (0..basis.len()).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let work = s_poly_map(enc, &basis[i], &basis[j]);
            if !reduce_map(enc, work, basis, &all).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

pub(crate) fn one(enc: &Encoding) -> IPoly {
    let k: Key = SmallVec::from_elem(0, enc.nvars + enc.offset());
    IPoly::from_sorted(enc, vec![(k, Rational::one())])
}
