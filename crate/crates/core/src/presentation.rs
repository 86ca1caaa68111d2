//! Presentations of graded algebras over F2 and their text format.
//!
//! A presentation lists generators with degrees, homogeneous relations, and
//! a partial table of Steenrod squares on generators:
//!
//! ```text
//! # comment
//! gen x3 3
//! gen x5 5
//! rel x3*x5
//! sq 2 x3 = x5
//! ```
//!
//! Monomials are ordered first by degree and then lexicographically on
//! exponent vectors, with the first declared generator most significant.
//! Polynomials print their largest term first.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// A monomial as an exponent vector over the generators of a presentation.
///
/// The derived ordering compares the degree first and then the exponent
/// vectors lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial {
            degree: 0,
            exps: vec![0; ngens],
        }
    }

    pub fn from_exponents(exps: Vec<u32>, degrees: &[u32]) -> Self {
        assert_eq!(exps.len(), degrees.len());
        let degree = exps.iter().zip(degrees).map(|(e, d)| e * d).sum();
        Monomial { degree, exps }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, generator: usize) -> u32 {
        self.exps[generator]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn ngens(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self` divides `other` in the free polynomial ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Moves the exponents into a larger generator set; `map[i]` is the new
    /// index of generator `i`.
    pub fn reindex(&self, map: &[usize], ngens: usize) -> Monomial {
        let mut exps = vec![0; ngens];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] = e;
        }
        Monomial {
            degree: self.degree,
            exps,
        }
    }
}

/// Marker for a polynomial whose terms have different degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedDegrees;

/// A polynomial with F2 coefficients: a set of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one(ngens: usize) -> Self {
        Poly::from(Monomial::one(ngens))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds a single monomial (XOR into the term set).
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly {
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
        }
    }

    /// Product in the free polynomial ring.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32, ngens: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(ngens);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Squaring is additive over F2, so this just doubles each exponent.
    pub fn square(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|t| t.mul(t)).collect(),
        }
    }

    /// `Ok(None)` for the zero polynomial, `Ok(Some(d))` when every term has
    /// degree `d`, and `Err(MixedDegrees)` otherwise.
    pub fn homogeneous_degree(&self) -> std::result::Result<Option<u32>, MixedDegrees> {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        match degrees.next() {
            None => Ok(None),
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Ok(Some(d))
                } else {
                    Err(MixedDegrees)
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    pub fn reindex(&self, map: &[usize], ngens: usize) -> Poly {
        Poly {
            terms: self.terms.iter().map(|t| t.reindex(map, ngens)).collect(),
        }
    }
}

impl From<Monomial> for Poly {
    fn from(m: Monomial) -> Self {
        Poly {
            terms: BTreeSet::from([m]),
        }
    }
}

impl FromIterator<Monomial> for Poly {
    /// Sums the monomials with F2 cancellation.
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for m in iter {
            p.toggle(m);
        }
        p
    }
}

/// Generators, relations, and a partial Steenrod table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
    relations: Vec<Poly>,
    sq_table: BTreeMap<(usize, u32), Poly>,
    warnings: Vec<String>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            check_ident(&g.name)?;
            if g.degree == 0 {
                return Err(Error::ZeroDegreeGenerator(g.name.clone()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Presentation {
            generators,
            index,
            relations: Vec::new(),
            sq_table: BTreeMap::new(),
            warnings: Vec::new(),
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn sq_table(&self) -> &BTreeMap<(usize, u32), Poly> {
        &self.sq_table
    }

    pub fn sq_entry(&self, generator: usize, i: u32) -> Option<&Poly> {
        self.sq_table.get(&(generator, i))
    }

    /// Non-fatal diagnostics collected while loading.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn generator_monomial(&self, index: usize) -> Monomial {
        let mut exps = vec![0; self.ngens()];
        exps[index] = 1;
        Monomial {
            degree: self.generators[index].degree,
            exps,
        }
    }

    pub fn generator_poly(&self, index: usize) -> Poly {
        Poly::from(self.generator_monomial(index))
    }

    /// The polynomial consisting of the single named generator.
    pub fn var(&self, name: &str) -> Result<Poly> {
        let i = self
            .generator_index(name)
            .ok_or_else(|| Error::UnknownGenerator {
                name: name.to_string(),
                line: 0,
                column: 0,
            })?;
        Ok(self.generator_poly(i))
    }

    pub fn add_relation(&mut self, relation: Poly) -> Result<()> {
        if !relation.is_homogeneous() {
            return Err(Error::NonHomogeneous {
                context: "relation".into(),
                poly: self.format_poly(&relation),
            });
        }
        self.relations.push(relation);
        Ok(())
    }

    /// Records `Sq^i(generator) = value`, enforcing the degree and the
    /// unstable condition.
    pub fn set_sq(&mut self, generator: usize, i: u32, value: Poly) -> Result<()> {
        let g = &self.generators[generator];
        let expected = g.degree + i;
        match value.homogeneous_degree() {
            Ok(None) => {}
            Ok(Some(d)) if d == expected => {}
            _ => {
                return Err(Error::TableDegree {
                    generator: g.name.clone(),
                    i,
                    expected,
                    value: self.format_poly(&value),
                })
            }
        }
        if i > g.degree && !value.is_zero() {
            return Err(Error::Unstable {
                generator: g.name.clone(),
                i,
                value: self.format_poly(&value),
                reason: "squares above the degree vanish".into(),
            });
        }
        if i == g.degree && value != self.generator_poly(generator).square() {
            return Err(Error::Unstable {
                generator: g.name.clone(),
                i,
                value: self.format_poly(&value),
                reason: format!("the top square must be {}^2", g.name),
            });
        }
        if i == 0 && value != self.generator_poly(generator) {
            return Err(Error::Unstable {
                generator: g.name.clone(),
                i,
                value: self.format_poly(&value),
                reason: "Sq^0 is the identity".into(),
            });
        }
        self.sq_table.insert((generator, i), value);
        Ok(())
    }

    pub fn remove_sq(&mut self, generator: usize, i: u32) -> Option<Poly> {
        self.sq_table.remove(&(generator, i))
    }

    pub fn remove_relation(&mut self, index: usize) -> Poly {
        self.relations.remove(index)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        for (g, &e) in self.generators.iter().zip(&m.exps) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&g.name);
            if e > 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        out
    }

    /// Canonical rendering: largest term first, factors in declaration order.
    pub fn format_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        p.terms()
            .rev()
            .map(|m| self.format_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        PolyParser::new(text, 1, 0, self).parse_all()
    }

    /// Serializes into the text format accepted by [`parse_presentation`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            writeln!(out, "gen {} {}", g.name, g.degree).unwrap();
        }
        for r in &self.relations {
            writeln!(out, "rel {}", self.format_poly(r)).unwrap();
        }
        for ((g, i), v) in &self.sq_table {
            writeln!(
                out,
                "sq {} {} = {}",
                i,
                self.generators[*g].name,
                self.format_poly(v)
            )
            .unwrap();
        }
        out
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn check_ident(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char);
    if ok {
        Ok(())
    } else {
        Err(Error::Syntax {
            line: 0,
            column: 0,
            message: format!("invalid identifier `{name}`"),
        })
    }
}

/// Cursor over one line (or one command-line argument).
struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    // Column offset of `chars[0]` within the source line.
    offset: usize,
    pres: &'a Presentation,
}

impl<'a> PolyParser<'a> {
    fn new(text: &str, line: usize, offset: usize, pres: &'a Presentation) -> Self {
        PolyParser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            offset,
            pres,
        }
    }

    fn column(&self) -> usize {
        self.offset + self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error(format!("number `{text}` out of range"))
        })
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .chars
            .get(self.pos)
            .copied()
            .is_some_and(is_ident_start)
        {
            return Err(self.error("expected a generator name"));
        }
        while self.pos < self.chars.len() && is_ident_char(self.chars[self.pos]) {
            self.pos += 1;
        }
        Ok((
            self.chars[start..self.pos].iter().collect(),
            self.offset + start + 1,
        ))
    }

    fn factor(&mut self) -> Result<Monomial> {
        let (name, column) = self.ident()?;
        let index = self
            .pres
            .generator_index(&name)
            .ok_or_else(|| Error::UnknownGenerator {
                name: name.clone(),
                line: self.line,
                column,
            })?;
        let exp = if self.eat('^') {
            let e = self.number()?;
            if e == 0 {
                return Err(self.error("exponent must be positive"));
            }
            e
        } else {
            1
        };
        let g = self.pres.generator_monomial(index);
        let mut m = Monomial::one(self.pres.ngens());
        for _ in 0..exp {
            m = m.mul(&g);
        }
        Ok(m)
    }

    fn term(&mut self) -> Result<Monomial> {
        if self.peek() == Some('1') {
            self.pos += 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("unexpected digit after `1`"));
            }
            return Ok(Monomial::one(self.pres.ngens()));
        }
        let mut m = self.factor()?;
        while self.eat('*') {
            m = m.mul(&self.factor()?);
        }
        Ok(m)
    }

    fn parse_all(mut self) -> Result<Poly> {
        if self.peek() == Some('0') {
            self.pos += 1;
            if self.peek().is_some() {
                return Err(self.error("`0` must stand alone"));
            }
            return Ok(Poly::zero());
        }
        let mut p = Poly::zero();
        p.toggle(self.term()?);
        while self.eat('+') {
            p.toggle(self.term()?);
        }
        if self.peek().is_some() {
            return Err(self.error(format!("unexpected `{}`", self.chars[self.pos])));
        }
        Ok(p)
    }
}

fn located(err: Error, line: usize) -> Error {
    match err {
        Error::NonHomogeneous { context, poly } => Error::NonHomogeneous {
            context: format!("line {line}: {context}"),
            poly,
        },
        Error::Syntax { message, .. } => Error::Syntax {
            line,
            column: 1,
            message,
        },
        Error::DuplicateGenerator(name) => Error::Syntax {
            line,
            column: 1,
            message: format!("duplicate generator `{name}`"),
        },
        Error::ZeroDegreeGenerator(name) => Error::Syntax {
            line,
            column: 1,
            message: format!("generator `{name}` must have positive degree"),
        },
        other => other,
    }
}

// Splits off the first whitespace-delimited word, returning it with the
// byte offset of the remainder.
fn split_word(s: &str) -> (&str, &str, usize) {
    let trimmed = s.trim_start();
    let lead = s.len() - trimmed.len();
    let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
    (&trimmed[..end], &trimmed[end..], lead + end)
}

/// Parses and validates the text format.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut generators = Vec::new();
    let mut body = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let (keyword, rest, rest_offset) = split_word(line);
        match keyword {
            "gen" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(Error::Syntax {
                        line: line_no,
                        column: rest_offset + 1,
                        message: "expected `gen <name> <degree>`".into(),
                    });
                }
                check_ident(parts[0]).map_err(|e| located(e, line_no))?;
                let degree: u32 = parts[1].parse().map_err(|_| Error::Syntax {
                    line: line_no,
                    column: line.rfind(parts[1]).unwrap_or(0) + 1,
                    message: format!("invalid degree `{}`", parts[1]),
                })?;
                generators.push(Generator {
                    name: parts[0].to_string(),
                    degree,
                });
            }
            "rel" | "sq" => body.push((line_no, keyword, line, rest_offset)),
            _ => {
                return Err(Error::Syntax {
                    line: line_no,
                    column: line.len() - line.trim_start().len() + 1,
                    message: format!("unknown directive `{keyword}`"),
                })
            }
        }
    }

    let mut pres = Presentation::new(generators).map_err(|e| {
        let line = text
            .lines()
            .position(|l| l.trim_start().starts_with("gen"))
            .map_or(1, |p| p + 1);
        located(e, line)
    })?;
    let mut warnings = Vec::new();
    for (line_no, keyword, line, offset) in body {
        let char_offset = line[..offset].chars().count();
        let rest: String = line[offset..].to_string();
        if keyword == "rel" {
            let p = PolyParser::new(&rest, line_no, char_offset, &pres).parse_all()?;
            if p.is_zero() {
                warnings.push(format!("line {line_no}: relation is the zero polynomial"));
            }
            pres.add_relation(p).map_err(|e| located(e, line_no))?;
        } else {
            let mut cur = PolyParser::new(&rest, line_no, char_offset, &pres);
            let i = cur.number()?;
            if i == 0 {
                return Err(cur.error("square index must be positive"));
            }
            let (name, column) = cur.ident()?;
            let g = pres
                .generator_index(&name)
                .ok_or_else(|| Error::UnknownGenerator {
                    name: name.clone(),
                    line: line_no,
                    column,
                })?;
            if !cur.eat('=') {
                return Err(cur.error("expected `=`"));
            }
            let value_offset = char_offset + cur.pos;
            let value_text: String = cur.chars[cur.pos..].iter().collect();
            let value = PolyParser::new(&value_text, line_no, value_offset, &pres).parse_all()?;
            if pres.sq_table.contains_key(&(g, i)) {
                return Err(Error::Syntax {
                    line: line_no,
                    column: 1,
                    message: format!("duplicate table entry Sq^{i} {name}"),
                });
            }
            pres.set_sq(g, i, value).map_err(|e| located(e, line_no))?;
        }
    }
    pres.warnings.extend(warnings);
    Ok(pres)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "gen x2 2\ngen x3 3\ngen x5 5\nrel x2*x3\nsq 2 x3 = x5\n";

    #[test]
    fn single_generator_is_polynomial_ring() {
        let p = parse_presentation("gen t 2").unwrap();
        assert_eq!(p.ngens(), 1);
        assert!(p.relations().is_empty());
        assert!(p.sq_table().is_empty());
    }

    #[test]
    fn cancelling_relation_warns() {
        let p = parse_presentation("gen x 1\nrel x + x").unwrap();
        assert_eq!(p.relations().len(), 1);
        assert!(p.relations()[0].is_zero());
        assert_eq!(p.warnings().len(), 1);
        assert!(p.warnings()[0].contains("line 2"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_presentation("# header\n\ngen a 1 # trailing\n  \nrel a^3 # cube\n").unwrap();
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.format_poly(&p.relations()[0]), "a^3");
    }

    #[test]
    fn declaration_order_is_free() {
        let p = parse_presentation("rel a*b\ngen a 1\ngen b 1").unwrap();
        assert_eq!(p.format_poly(&p.relations()[0]), "a*b");
    }

    #[test]
    fn reserved_literals() {
        let p = parse_presentation(SMALL).unwrap();
        assert_eq!(p.format_poly(&Poly::zero()), "0");
        assert_eq!(p.format_poly(&Poly::one(p.ngens())), "1");
        assert_eq!(p.parse_poly("0").unwrap(), Poly::zero());
        assert_eq!(p.parse_poly(" 1 ").unwrap(), Poly::one(3));
        assert_eq!(p.parse_poly("1 + 1").unwrap(), Poly::zero());
        assert!(p.parse_poly("0 + x2").is_err());
        assert!(p.parse_poly("").is_err());
    }

    #[test]
    fn factors_print_in_declaration_order() {
        let p = parse_presentation(SMALL).unwrap();
        let q = p.parse_poly("x5 * x2^2 * x2").unwrap();
        assert_eq!(p.format_poly(&q), "x2^3*x5");
        let r = p.parse_poly("x5 + x2 * x3").unwrap();
        assert_eq!(p.format_poly(&r), "x2*x3 + x5");
    }

    #[test]
    fn unknown_generator_reports_location() {
        let err = parse_presentation("gen a 1\nrel a + bb").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownGenerator {
                name: "bb".into(),
                line: 2,
                column: 9
            }
        );
    }

    #[test]
    fn syntax_error_reports_location() {
        let err = parse_presentation("gen a 1\nrel a +* a").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 8)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_presentation("gen a 1\nfoo a").unwrap_err(),
            Error::Syntax {
                line: 2,
                column: 1,
                ..
            }
        ));
        assert!(matches!(
            parse_presentation("gen a x").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
    }

    #[test]
    fn mixed_degree_relation_rejected() {
        let err = parse_presentation("gen a 1\ngen b 2\nrel a + b").unwrap_err();
        assert!(matches!(err, Error::NonHomogeneous { .. }));
    }

    #[test]
    fn unstable_condition_enforced() {
        let above = parse_presentation("gen a 1\nsq 2 a = a^3").unwrap_err();
        assert!(matches!(above, Error::Unstable { i: 2, .. }));
        let top = parse_presentation("gen a 2\ngen b 4\nsq 2 a = b").unwrap_err();
        assert!(matches!(top, Error::Unstable { i: 2, .. }));
        assert!(parse_presentation("gen a 2\nsq 2 a = a^2").is_ok());
        let wrong_degree = parse_presentation("gen a 2\ngen b 5\nsq 1 a = b").unwrap_err();
        assert!(matches!(
            wrong_degree,
            Error::TableDegree { expected: 3, .. }
        ));
    }

    #[test]
    fn duplicate_generators_rejected() {
        assert!(parse_presentation("gen a 1\ngen a 2").is_err());
        assert!(parse_presentation("gen a 0").is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = parse_presentation(SMALL).unwrap();
        let again = parse_presentation(&p.to_text()).unwrap();
        assert_eq!(p, again);
    }
}
