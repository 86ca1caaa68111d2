//! Straight-line reference implementations used as test oracles. None of
//! this calls into the engine's enumeration or elimination code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use sqcoh::{GradedAlgebra, Monomial, Poly, Presentation};

pub type Exps = Vec<u32>;

/// Exponent vectors of total degree `d`, by extending partial vectors one
/// generator at a time (breadth first).
pub fn oracle_monomials(degrees: &[u32], d: u32) -> Vec<Exps> {
    let mut partial: Vec<(Exps, u32)> = vec![(Vec::new(), 0)];
    for &g in degrees {
        let mut next = Vec::new();
        for (exps, used) in partial {
            let mut e = 0;
            while used + e * g <= d {
                let mut v = exps.clone();
                v.push(e);
                next.push((v, used + e * g));
                e += 1;
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .filter(|(_, used)| *used == d)
        .map(|(e, _)| e)
        .collect()
}

fn degree_of(degrees: &[u32], e: &[u32]) -> u32 {
    e.iter().zip(degrees).map(|(a, b)| a * b).sum()
}

fn add(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Orders exponent vectors by (degree, lexicographic).
fn key(degrees: &[u32], e: &[u32]) -> (u32, Exps) {
    (degree_of(degrees, e), e.to_vec())
}

/// Plain Gaussian elimination on rows of `bool`, pivoting on the lowest
/// column. Returns the pivot rows keyed by pivot column, fully reduced.
fn eliminate(rows: Vec<Vec<bool>>, ncols: usize) -> BTreeMap<usize, Vec<bool>> {
    let mut pivots: BTreeMap<usize, Vec<bool>> = BTreeMap::new();
    for mut row in rows {
        for (&p, prow) in &pivots {
            if row[p] {
                for c in 0..ncols {
                    row[c] ^= prow[c];
                }
            }
        }
        if let Some(p) = row.iter().position(|&b| b) {
            let snapshot = row.clone();
            for prow in pivots.values_mut() {
                if prow[p] {
                    for c in 0..ncols {
                        prow[c] ^= snapshot[c];
                    }
                }
            }
            pivots.insert(p, row);
        }
    }
    pivots
}

/// One degree of a presented algebra computed the slow way.
pub struct OracleDegree {
    /// Monomials in increasing order.
    pub columns: Vec<Exps>,
    pivots: BTreeMap<usize, Vec<bool>>,
}

impl OracleDegree {
    pub fn new(degrees: &[u32], relations: &[Vec<Exps>], d: u32) -> Self {
        let mut columns = oracle_monomials(degrees, d);
        columns.sort_by_key(|e| key(degrees, e));
        let n = columns.len();
        let mut rows = Vec::new();
        for rel in relations {
            let Some(first) = rel.first() else { continue };
            let e = degree_of(degrees, first);
            if e > d {
                continue;
            }
            for m in oracle_monomials(degrees, d - e) {
                let mut row = vec![false; n];
                for t in rel {
                    let prod = add(t, &m);
                    let c = columns.iter().position(|x| *x == prod).unwrap();
                    row[c] ^= true;
                }
                rows.push(row);
            }
        }
        OracleDegree {
            pivots: eliminate(rows, n),
            columns,
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len() - self.pivots.len()
    }

    /// Normal form: clear every pivot column.
    pub fn reduce(&self, terms: &BTreeSet<Exps>) -> BTreeSet<Exps> {
        let mut v: Vec<bool> = self.columns.iter().map(|c| terms.contains(c)).collect();
        for (&p, row) in &self.pivots {
            if v[p] {
                for c in 0..v.len() {
                    v[c] ^= row[c];
                }
            }
        }
        self.columns
            .iter()
            .zip(&v)
            .filter(|(_, &b)| b)
            .map(|(c, _)| c.clone())
            .collect()
    }

    /// Basis monomials in increasing order.
    pub fn basis(&self) -> Vec<Exps> {
        (0..self.columns.len())
            .filter(|c| !self.pivots.contains_key(c))
            .map(|c| self.columns[c].clone())
            .collect()
    }
}

pub fn relations_of(pres: &Presentation) -> Vec<Vec<Exps>> {
    pres.relations()
        .iter()
        .map(|r| r.terms().map(|m| m.exponents().to_vec()).collect())
        .collect()
}

pub fn oracle_series(pres: &Presentation, through: u32) -> Vec<usize> {
    let degrees = pres.degrees();
    let rels = relations_of(pres);
    (0..=through)
        .map(|d| OracleDegree::new(&degrees, &rels, d).dim())
        .collect()
}

pub fn to_exps(p: &Poly) -> BTreeSet<Exps> {
    p.terms().map(|m| m.exponents().to_vec()).collect()
}

pub fn from_exps(degrees: &[u32], terms: &BTreeSet<Exps>) -> Poly {
    terms
        .iter()
        .map(|e| Monomial::from_exponents(e.clone(), degrees))
        .collect()
}

/// `Sq^k` of a monomial in degree-1 generators, from
/// `Sq^k(prod a_j^e_j) = sum over k_1 + ... + k_n = k of prod binom(e_j, k_j) a_j^(e_j + k_j)`,
/// with binomials computed exactly by Pascal's rule.
pub fn degree_one_sq(exps: &[u32], k: u32) -> BTreeSet<Exps> {
    fn binom(n: u32, k: u32) -> u64 {
        if k > n {
            return 0;
        }
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![1u64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = (row[i - 1] + row[i]) % 2;
            }
            row = next;
        }
        row[k as usize]
    }
    let mut out = BTreeSet::new();
    fn walk(
        exps: &[u32],
        i: usize,
        left: u32,
        cur: &mut Exps,
        out: &mut BTreeSet<Exps>,
        binom: &dyn Fn(u32, u32) -> u64,
    ) {
        if i == exps.len() {
            if left == 0 && !out.remove(cur) {
                out.insert(cur.clone());
            }
            return;
        }
        for ki in 0..=left.min(exps[i]) {
            if binom(exps[i], ki) % 2 == 1 {
                cur.push(exps[i] + ki);
                walk(exps, i + 1, left - ki, cur, out, binom);
                cur.pop();
            }
        }
    }
    walk(exps, 0, k, &mut Vec::new(), &mut out, &binom);
    out
}

/// Applies a word (rightmost first) to a polynomial in degree-1 generators.
pub fn degree_one_word(word: &[u32], terms: &BTreeSet<Exps>) -> BTreeSet<Exps> {
    let mut cur = terms.clone();
    for &k in word.iter().rev() {
        let mut next = BTreeSet::new();
        for m in &cur {
            for t in degree_one_sq(m, k) {
                if !next.remove(&t) {
                    next.insert(t);
                }
            }
        }
        cur = next;
    }
    cur
}

/// A uniformly random subset of the monomials of degree `d`, normalized.
pub fn random_element<R: Rng>(alg: &GradedAlgebra, d: u32, rng: &mut R) -> Poly {
    let ms = alg.monomials_of_degree(d).unwrap();
    let p: Poly = ms.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    alg.normal_form(&p).unwrap()
}

/// A random polynomial of degree `d` in the free ring (not normalized).
pub fn random_free<R: Rng>(alg: &GradedAlgebra, d: u32, rng: &mut R) -> Poly {
    let ms = alg.monomials_of_degree(d).unwrap();
    ms.into_iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// A random word with the given total degree.
pub fn random_word<R: Rng>(total: u32, rng: &mut R) -> Vec<u32> {
    let mut left = total;
    let mut w = Vec::new();
    while left > 0 {
        let k = rng.gen_range(1..=left);
        w.push(k);
        left -= k;
    }
    w.shuffle(rng);
    w
}
