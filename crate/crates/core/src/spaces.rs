//! Bundled models and the product and quotient constructions on
//! presentations.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::{parse_presentation, Generator, Poly, Presentation};

pub const BPU4_TEXT: &str = include_str!("../models/bpu4.txt");
pub const BS1_TEXT: &str = include_str!("../models/bs1.txt");
pub const P1_TEXT: &str = include_str!("../models/p1.txt");
pub const P1X4_TEXT: &str = include_str!("../models/p1x4.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelId {
    /// `H*(BPU(4); F2)` with the three known table entries.
    Bpu4,
    /// `H*(BS^1; F2) = F2[t]`, `|t| = 2`.
    Bs1,
    /// `F2[x1]`, `|x1| = 1`.
    P1,
    /// `F2[a1, a2, a3, a4]`, all of degree 1.
    P1x4,
}

impl ModelId {
    pub const ALL: [ModelId; 4] = [ModelId::Bpu4, ModelId::Bs1, ModelId::P1, ModelId::P1x4];

    pub fn name(self) -> &'static str {
        match self {
            ModelId::Bpu4 => "BPU4",
            ModelId::Bs1 => "BS1",
            ModelId::P1 => "P1",
            ModelId::P1x4 => "P1x4",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            ModelId::Bpu4 => BPU4_TEXT,
            ModelId::Bs1 => BS1_TEXT,
            ModelId::P1 => P1_TEXT,
            ModelId::P1x4 => P1X4_TEXT,
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ModelId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownModel(s.to_string()))
    }
}

pub fn bundled_model(id: ModelId) -> Presentation {
    parse_presentation(id.text()).expect("bundled models are valid")
}

/// Looks a model up by name.
pub fn model_by_name(name: &str) -> Result<Presentation> {
    Ok(bundled_model(name.parse()?))
}

/// A generator of the second factor renamed to avoid a clash.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rename {
    pub from: String,
    pub to: String,
}

/// Presentation of the tensor product of two presented algebras: the
/// disjoint union of generators, relations and Steenrod tables. Clashing
/// names in `b` get a `_1`, `_2`, ... suffix.
pub fn kunneth_product(a: &Presentation, b: &Presentation) -> (Presentation, Vec<Rename>) {
    let mut taken: HashSet<String> = a.generators().iter().map(|g| g.name.clone()).collect();
    taken.extend(b.generators().iter().map(|g| g.name.clone()));
    let mut renames = Vec::new();
    let mut generators: Vec<Generator> = a.generators().to_vec();
    let a_names: HashSet<&str> = a.generators().iter().map(|g| g.name.as_str()).collect();
    for g in b.generators() {
        let mut name = g.name.clone();
        if a_names.contains(name.as_str()) {
            let mut k = 1;
            loop {
                let candidate = format!("{}_{k}", g.name);
                if !taken.contains(&candidate) {
                    name = candidate;
                    break;
                }
                k += 1;
            }
            taken.insert(name.clone());
            renames.push(Rename {
                from: g.name.clone(),
                to: name.clone(),
            });
        }
        generators.push(Generator {
            name,
            degree: g.degree,
        });
    }

    let n = generators.len();
    let a_map: Vec<usize> = (0..a.ngens()).collect();
    let b_map: Vec<usize> = (a.ngens()..n).collect();
    let mut out = Presentation::new(generators).expect("names made unique");
    for r in a.relations() {
        out.add_relation(r.reindex(&a_map, n)).expect("homogeneous");
    }
    for r in b.relations() {
        out.add_relation(r.reindex(&b_map, n)).expect("homogeneous");
    }
    for (&(g, i), v) in a.sq_table() {
        out.set_sq(a_map[g], i, v.reindex(&a_map, n))
            .expect("validated in factor");
    }
    for (&(g, i), v) in b.sq_table() {
        out.set_sq(b_map[g], i, v.reindex(&b_map, n))
            .expect("validated in factor");
    }
    (out, renames)
}

/// Adds `ideal_gens` to the relations.
pub fn quotient_by_ideal(a: &Presentation, ideal_gens: &[Poly]) -> Result<Presentation> {
    let mut out = a.clone();
    for g in ideal_gens {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous {
                context: "ideal generator".into(),
                poly: a.format_poly(g),
            });
        }
        out.add_relation(g.clone())?;
    }
    Ok(out)
}
