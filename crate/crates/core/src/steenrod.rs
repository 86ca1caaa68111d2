//! Steenrod squares and Milnor operations on presented algebras.
//!
//! Squares on generators come from the presentation's partial table, with
//! the unstable condition filling in `Sq^0`, the top square and everything
//! above it. Products are expanded with the Cartan formula. A needed table
//! entry that is missing surfaces as [`Error::UnknownSteenrod`] only when an
//! evaluation actually reaches it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::presentation::{Monomial, Poly};

/// `binom(n, k) mod 2` by Lucas' theorem: odd iff the bits of `k` are a
/// subset of the bits of `n`.
pub fn binom_mod2(n: u32, k: u32) -> bool {
    k <= n && k & !n == 0
}

/// A composition `Sq^{i_1} ... Sq^{i_k}`; the rightmost square acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqWord(Vec<u32>);

impl SqWord {
    /// Builds a word, eliding `Sq^0` factors.
    pub fn new(superscripts: impl IntoIterator<Item = u32>) -> Self {
        SqWord(superscripts.into_iter().filter(|&i| i != 0).collect())
    }

    pub fn identity() -> Self {
        SqWord(Vec::new())
    }

    pub fn superscripts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree raised by the word.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Position of the leftmost pair `(a, b)` with `a < 2b`.
    pub fn first_inadmissible(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] < 2 * w[1])
    }

    pub fn is_admissible(&self) -> bool {
        self.first_inadmissible().is_none()
    }

    /// Excess `i_1 - i_2 - ... - i_k`; for admissible words this is the
    /// smallest degree on which the word can act nontrivially.
    pub fn excess(&self) -> i64 {
        match self.0.split_first() {
            None => 0,
            Some((&first, rest)) => first as i64 - rest.iter().map(|&i| i as i64).sum::<i64>(),
        }
    }
}

impl fmt::Display for SqWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("Sq{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SqWord {
    type Err = Error;

    /// Parses whitespace-separated `Sq<k>` tokens; `1` alone is the identity.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(SqWord::identity());
        }
        let mut out = Vec::new();
        for token in s.split_whitespace() {
            let n = token
                .strip_prefix("Sq")
                .and_then(|k| k.strip_prefix('^').or(Some(k)))
                .filter(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|k| k.parse::<u32>().ok())
                .ok_or_else(|| Error::Word(s.to_string()))?;
            out.push(n);
        }
        if out.is_empty() {
            return Err(Error::Word(s.to_string()));
        }
        Ok(SqWord::new(out))
    }
}

/// A sum of admissible words with F2 coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AdmissibleSum(BTreeSet<SqWord>);

impl AdmissibleSum {
    pub fn words(&self) -> impl Iterator<Item = &SqWord> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, w: &SqWord) -> bool {
        self.0.contains(w)
    }
}

impl fmt::Display for AdmissibleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        // longest words last, then lexicographic
        let mut words: Vec<&SqWord> = self.0.iter().collect();
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.0.cmp(&a.0)));
        let parts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Rewrites `w` into admissible form with the Adem relations
/// `Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c` for `a < 2b`,
/// always at the leftmost inadmissible pair.
pub fn adem_normalize(w: &SqWord) -> AdmissibleSum {
    let mut pending: BTreeMap<SqWord, bool> = BTreeMap::from([(w.clone(), true)]);
    let mut done = BTreeSet::new();
    while let Some((word, odd)) = pending.pop_first() {
        if !odd {
            continue;
        }
        let Some(at) = word.first_inadmissible() else {
            if !done.remove(&word) {
                done.insert(word);
            }
            continue;
        };
        let (a, b) = (word.0[at], word.0[at + 1]);
        for c in 0..=a / 2 {
            if !binom_mod2(b - c - 1, a - 2 * c) {
                continue;
            }
            let mut next = Vec::with_capacity(word.0.len());
            next.extend_from_slice(&word.0[..at]);
            next.push(a + b - c);
            if c > 0 {
                next.push(c);
            }
            next.extend_from_slice(&word.0[at + 2..]);
            let entry = pending.entry(SqWord(next)).or_insert(false);
            *entry = !*entry;
        }
    }
    AdmissibleSum(done)
}

/// Index of a Milnor primitive `Q_i`, which raises degree by `2^{i+1} - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MilnorIndex(pub u32);

impl MilnorIndex {
    pub fn degree_shift(self) -> u32 {
        (1u32 << (self.0 + 1)) - 1
    }
}

// Sq^l on a single generator, in the free ring.
fn sq_generator(alg: &GradedAlgebra, g: usize, l: u32) -> Result<Poly> {
    let pres = alg.presentation();
    let deg = pres.generators()[g].degree;
    if l == 0 {
        return Ok(pres.generator_poly(g));
    }
    if l > deg {
        return Ok(Poly::zero());
    }
    if l == deg {
        return Ok(pres.generator_poly(g).square());
    }
    pres.sq_entry(g, l)
        .cloned()
        .ok_or_else(|| Error::UnknownSteenrod {
            generator: pres.generators()[g].name.clone(),
            i: l,
        })
}

// Sq^b(g^(2^k)) = (Sq^(b / 2^k) g)^(2^k) when 2^k divides b, and 0 otherwise.
fn sq_power_of_two(alg: &GradedAlgebra, g: usize, k: u32, b: u32) -> Result<Poly> {
    let step = 1u32 << k;
    if !b.is_multiple_of(step) {
        return Ok(Poly::zero());
    }
    let mut p = sq_generator(alg, g, b / step)?;
    for _ in 0..k {
        p = p.square();
    }
    Ok(p)
}

// Sq^i of one monomial by the Cartan formula over its factors g^(2^k).
fn sq_monomial(alg: &GradedAlgebra, i: u32, m: &Monomial) -> Result<Poly> {
    let ngens = m.ngens();
    let factors: Vec<(usize, u32)> = m
        .exponents()
        .iter()
        .enumerate()
        .flat_map(|(g, &e)| {
            (0..32)
                .filter(move |k| e >> k & 1 == 1)
                .map(move |k| (g, k))
        })
        .collect();
    let width = i as usize + 1;
    // acc[j] = Sq^j of the factors processed so far
    let mut acc: Vec<Poly> = vec![Poly::zero(); width];
    acc[0] = Poly::one(ngens);
    for (n, &(g, k)) in factors.iter().enumerate() {
        let last = n + 1 == factors.len();
        let mut next = vec![Poly::zero(); width];
        for (a, part) in acc.iter().enumerate() {
            if part.is_zero() {
                continue;
            }
            let targets = if last {
                i as usize..=i as usize
            } else {
                a..=i as usize
            };
            for j in targets {
                let b = (j - a) as u32;
                let s = sq_power_of_two(alg, g, k, b)?;
                if !s.is_zero() {
                    next[j].add_assign(&part.mul(&s));
                }
            }
        }
        acc = next;
    }
    Ok(std::mem::take(&mut acc[i as usize]))
}

/// `Sq^i p`, in normal form.
pub fn apply_sq(alg: &GradedAlgebra, i: u32, p: &Poly) -> Result<Poly> {
    let p = alg.normal_form(p)?;
    let Some(d) = alg.degree_of(&p)? else {
        return Ok(p);
    };
    alg.check_bound(d + i)?;
    if i == 0 {
        return Ok(p);
    }
    let mut out = Poly::zero();
    for m in p.terms() {
        out.add_assign(&sq_monomial(alg, i, m)?);
    }
    alg.normal_form(&out)
}

/// Applies the word right to left.
pub fn apply_sq_word(alg: &GradedAlgebra, w: &SqWord, p: &Poly) -> Result<Poly> {
    let mut cur = alg.normal_form(p)?;
    if let Some(d) = alg.degree_of(&cur)? {
        alg.check_bound(d + w.degree())?;
    }
    for &i in w.superscripts().iter().rev() {
        cur = apply_sq(alg, i, &cur)?;
    }
    Ok(cur)
}

/// Action of a sum of words.
pub fn apply_sum(alg: &GradedAlgebra, s: &AdmissibleSum, p: &Poly) -> Result<Poly> {
    let mut out = Poly::zero();
    for w in s.words() {
        out.add_assign(&apply_sq_word(alg, w, p)?);
    }
    Ok(out)
}

/// `Q_i p` via `Q_0 = Sq^1`, `Q_i = Sq^(2^i) Q_(i-1) + Q_(i-1) Sq^(2^i)`.
pub fn milnor_q(alg: &GradedAlgebra, i: u32, p: &Poly) -> Result<Poly> {
    let p = alg.normal_form(p)?;
    let Some(d) = alg.degree_of(&p)? else {
        return Ok(p);
    };
    alg.check_bound(d + MilnorIndex(i).degree_shift())?;
    milnor_rec(alg, i, &p)
}

fn milnor_rec(alg: &GradedAlgebra, i: u32, p: &Poly) -> Result<Poly> {
    if i == 0 {
        return apply_sq(alg, 1, p);
    }
    let s = 1u32 << i;
    let left = apply_sq(alg, s, &milnor_rec(alg, i - 1, p)?)?;
    let right = milnor_rec(alg, i - 1, &apply_sq(alg, s, p)?)?;
    Ok(left.add(&right))
}

/// A mismatch between a length-two word and its admissible form on a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub generator: String,
    pub word: SqWord,
    pub direct: Poly,
    pub admissible: Poly,
}

/// A comparison that could not be made because a table entry is missing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub generator: String,
    pub word: SqWord,
    pub missing: Error,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableReport {
    pub violations: Vec<Violation>,
    pub skipped: Vec<Skipped>,
    pub checked: usize,
}

impl TableReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `Sq^a Sq^b g` with the admissible form of `Sq^a Sq^b` on `g` for
/// every generator and every inadmissible pair within degree `through`.
pub fn check_table_consistency(alg: &GradedAlgebra, through: u32) -> Result<TableReport> {
    alg.check_bound(through)?;
    let pres = alg.presentation();
    let mut report = TableReport::default();
    for (g, gen) in pres.generators().iter().enumerate() {
        if gen.degree > through {
            continue;
        }
        let x = pres.generator_poly(g);
        let room = through - gen.degree;
        for b in 1..=room {
            for a in 1..(2 * b).min(room - b + 1) {
                let word = SqWord::new([a, b]);
                let direct = apply_sq_word(alg, &word, &x);
                let admissible = apply_sum(alg, &adem_normalize(&word), &x);
                match (direct, admissible) {
                    (Ok(direct), Ok(admissible)) => {
                        report.checked += 1;
                        if direct != admissible {
                            report.violations.push(Violation {
                                generator: gen.name.clone(),
                                word,
                                direct,
                                admissible,
                            });
                        }
                    }
                    (Err(e @ Error::UnknownSteenrod { .. }), _)
                    | (_, Err(e @ Error::UnknownSteenrod { .. })) => report.skipped.push(Skipped {
                        generator: gen.name.clone(),
                        word,
                        missing: e,
                    }),
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn word(s: &[u32]) -> SqWord {
        SqWord::new(s.iter().copied())
    }

    fn sum(words: &[&[u32]]) -> AdmissibleSum {
        AdmissibleSum(words.iter().map(|w| word(w)).collect())
    }

    #[test]
    fn lucas() {
        assert!(binom_mod2(5, 1));
        assert!(!binom_mod2(6, 1));
        assert!(binom_mod2(7, 3));
        assert!(!binom_mod2(3, 4));
        assert!(binom_mod2(0, 0));
        for n in 0..40u32 {
            let mut row = vec![1u64];
            for _ in 0..n {
                let mut next = vec![1u64; row.len() + 1];
                for k in 1..row.len() {
                    next[k] = row[k - 1] + row[k];
                }
                row = next;
            }
            for k in 0..=n + 2 {
                let exact = row.get(k as usize).copied().unwrap_or(0);
                assert_eq!(binom_mod2(n, k), exact % 2 == 1, "binom({n},{k})");
            }
        }
    }

    #[test]
    fn adem_examples() {
        assert_eq!(adem_normalize(&word(&[1, 2])), sum(&[&[3]]));
        assert_eq!(adem_normalize(&word(&[3])), sum(&[&[3]]));
        assert_eq!(adem_normalize(&word(&[2, 2])), sum(&[&[3, 1]]));
        assert_eq!(adem_normalize(&word(&[1, 1])), sum(&[]));
        assert_eq!(adem_normalize(&SqWord::identity()), sum(&[&[]]));
        // Sq^2 Sq^3 = Sq^5 + Sq^4 Sq^1
        assert_eq!(adem_normalize(&word(&[2, 3])), sum(&[&[5], &[4, 1]]));
    }

    #[test]
    fn word_syntax() {
        assert_eq!("Sq1 Sq2".parse::<SqWord>().unwrap(), word(&[1, 2]));
        assert_eq!("Sq^4  Sq0".parse::<SqWord>().unwrap(), word(&[4]));
        assert_eq!("1".parse::<SqWord>().unwrap(), SqWord::identity());
        assert!("Sq".parse::<SqWord>().is_err());
        assert!("Q1".parse::<SqWord>().is_err());
        assert!("".parse::<SqWord>().is_err());
        assert_eq!(word(&[3, 1]).to_string(), "Sq3 Sq1");
        assert_eq!(sum(&[&[5], &[4, 1]]).to_string(), "Sq5 + Sq4 Sq1");
        assert_eq!(sum(&[]).to_string(), "0");
    }

    #[test]
    fn milnor_shift() {
        assert_eq!(MilnorIndex(0).degree_shift(), 1);
        assert_eq!(MilnorIndex(2).degree_shift(), 7);
    }

    #[test]
    fn word_on_degree_one_class() {
        let alg = GradedAlgebra::with_default_bound(parse_presentation("gen x1 1").unwrap());
        let x = alg.parse("x1").unwrap();
        let out = apply_sq_word(&alg, &word(&[2, 1]), &x).unwrap();
        assert_eq!(alg.format(&out), "x1^4");
        assert_eq!(apply_sq_word(&alg, &SqWord::identity(), &x).unwrap(), x);
    }

    #[test]
    fn missing_entry_is_named() {
        let alg = GradedAlgebra::with_default_bound(parse_presentation("gen a 3").unwrap());
        let a = alg.parse("a").unwrap();
        let err = apply_sq(&alg, 1, &a).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownSteenrod {
                generator: "a".into(),
                i: 1
            }
        );
        // forced values never need the table
        assert_eq!(alg.format(&apply_sq(&alg, 3, &a).unwrap()), "a^2");
        assert!(apply_sq(&alg, 4, &a).unwrap().is_zero());
        // odd squares of a square vanish without consulting the table
        let a2 = alg.parse("a^2").unwrap();
        assert!(apply_sq(&alg, 1, &a2).unwrap().is_zero());
    }

    #[test]
    fn bound_is_checked() {
        let alg = GradedAlgebra::new(parse_presentation("gen x 1").unwrap(), 4);
        let x = alg.parse("x^3").unwrap();
        assert!(matches!(
            apply_sq(&alg, 2, &x),
            Err(Error::DegreeBound { .. })
        ));
        assert!(matches!(
            milnor_q(&alg, 1, &x),
            Err(Error::DegreeBound { .. })
        ));
    }

    #[test]
    fn empty_table_on_degree_one_generator() {
        let alg = GradedAlgebra::with_default_bound(parse_presentation("gen x1 1").unwrap());
        let report = check_table_consistency(&alg, alg.max_degree()).unwrap();
        assert!(report.is_consistent());
        assert!(report.skipped.is_empty());
        assert!(report.checked > 0);
    }
}
