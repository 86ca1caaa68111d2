//! Degreewise linear algebra for a quotient of a free graded-commutative
//! F2 polynomial algebra by a homogeneous ideal.
//!
//! Nothing here uses Gröbner bases. For each degree `d` the relation
//! multiples of degree `d` are written out in monomial coordinates and
//! row-reduced; the monomials that are not pivots form the basis of the
//! quotient in that degree.
//!
//! Matrix columns are indexed by monomials in increasing order, so each
//! relation row is solved for its smallest monomial and the basis keeps the
//! larger ones. Under this convention `x9^2 + x3^2*x12 + x5^2*x8` rewrites
//! `x9^2`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::f2::{F2Matrix, F2Vector, RowReduced};
use crate::presentation::{Monomial, Poly, Presentation};

pub const DEFAULT_MAX_DEGREE: u32 = 20;

/// All monomials of total degree `d` in generators of the given degrees,
/// largest first.
pub fn monomials_of_degree(degrees: &[u32], d: u32) -> Vec<Monomial> {
    fn walk(degrees: &[u32], i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == degrees.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps.clone(), degrees));
            }
            return;
        }
        let max = left / degrees[i];
        for e in (0..=max).rev() {
            exps[i] = e;
            walk(degrees, i + 1, left - e * degrees[i], exps, out);
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    walk(degrees, 0, d, &mut vec![0; degrees.len()], &mut out);
    out
}

/// Everything the quotient needs to know about one degree.
#[derive(Debug)]
pub struct DegreeBasis {
    degree: u32,
    // increasing order; column `j` of `span` is `columns[j]`
    columns: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
    span: RowReduced,
    // column indices of the basis monomials, increasing
    free: Vec<usize>,
}

impl DegreeBasis {
    fn build(pres: &Presentation, degrees: &[u32], d: u32) -> Self {
        let mut columns = monomials_of_degree(degrees, d);
        columns.reverse();
        let position: HashMap<Monomial, usize> = columns
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let n = columns.len();
        let mut matrix = F2Matrix::new(n);
        for rel in pres.relations() {
            let Ok(Some(e)) = rel.homogeneous_degree() else {
                continue;
            };
            if e > d {
                continue;
            }
            for m in monomials_of_degree(degrees, d - e) {
                let mut row = F2Vector::zero(n);
                for t in rel.mul_monomial(&m).terms() {
                    row.flip(position[t]);
                }
                matrix
                    .push_row(row)
                    .expect("row length matches column count");
            }
        }
        let span = matrix.row_reduce();
        let mut is_pivot = vec![false; n];
        for &p in &span.pivots {
            is_pivot[p] = true;
        }
        let free = (0..n).filter(|&c| !is_pivot[c]).collect();
        DegreeBasis {
            degree: d,
            columns,
            position,
            span,
            free,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monomials of this degree, largest first.
    pub fn all_monomials(&self) -> Vec<Monomial> {
        self.columns.iter().rev().cloned().collect()
    }

    /// Row-reduced span of the relation multiples, columns in increasing
    /// monomial order.
    pub fn relation_span(&self) -> &RowReduced {
        &self.span
    }

    pub fn column_monomials(&self) -> &[Monomial] {
        &self.columns
    }

    /// Basis of the quotient in this degree, largest first.
    pub fn basis_monomials(&self) -> Vec<Monomial> {
        self.free
            .iter()
            .rev()
            .map(|&c| self.columns[c].clone())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    fn vector_of(&self, p: &Poly) -> F2Vector {
        let mut v = F2Vector::zero(self.columns.len());
        for t in p.terms() {
            v.flip(self.position[t]);
        }
        v
    }

    fn poly_of(&self, v: &F2Vector) -> Poly {
        v.ones().map(|c| self.columns[c].clone()).collect()
    }

    /// Normal form of a polynomial whose terms all lie in this degree.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut v = self.vector_of(p);
        self.span.reduce(&mut v);
        self.poly_of(&v)
    }

    /// Coordinates of the normal form with respect to `basis_monomials`.
    pub fn coordinates(&self, p: &Poly) -> F2Vector {
        let mut v = self.vector_of(p);
        self.span.reduce(&mut v);
        F2Vector::from_bits(self.free.iter().rev().map(|&c| v.get(c)))
    }
}

/// A presented algebra together with a degree bound and a per-degree cache.
#[derive(Debug)]
pub struct GradedAlgebra {
    pres: Presentation,
    degrees: Vec<u32>,
    max_degree: u32,
    bases: Vec<OnceLock<Arc<DegreeBasis>>>,
}

impl Clone for GradedAlgebra {
    fn clone(&self) -> Self {
        GradedAlgebra::new(self.pres.clone(), self.max_degree)
    }
}

impl GradedAlgebra {
    pub fn new(pres: Presentation, max_degree: u32) -> Self {
        let degrees = pres.degrees();
        GradedAlgebra {
            pres,
            degrees,
            max_degree,
            bases: (0..=max_degree).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn with_default_bound(pres: Presentation) -> Self {
        Self::new(pres, DEFAULT_MAX_DEGREE)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn ngens(&self) -> usize {
        self.degrees.len()
    }

    pub fn check_bound(&self, degree: u32) -> Result<()> {
        if degree > self.max_degree {
            Err(Error::DegreeBound {
                degree,
                max_degree: self.max_degree,
            })
        } else {
            Ok(())
        }
    }

    pub fn monomials_of_degree(&self, d: u32) -> Result<Vec<Monomial>> {
        self.check_bound(d)?;
        Ok(monomials_of_degree(&self.degrees, d))
    }

    pub fn degree_basis(&self, d: u32) -> Result<Arc<DegreeBasis>> {
        self.check_bound(d)?;
        Ok(self.bases[d as usize]
            .get_or_init(|| Arc::new(DegreeBasis::build(&self.pres, &self.degrees, d)))
            .clone())
    }

    pub fn relation_span(&self, d: u32) -> Result<RowReduced> {
        Ok(self.degree_basis(d)?.relation_span().clone())
    }

    pub fn dim(&self, d: u32) -> Result<usize> {
        Ok(self.degree_basis(d)?.dim())
    }

    /// Degree of a homogeneous polynomial; `None` for zero.
    pub fn degree_of(&self, p: &Poly) -> Result<Option<u32>> {
        p.homogeneous_degree().map_err(|_| Error::NonHomogeneous {
            context: "normal form".into(),
            poly: self.pres.format_poly(p),
        })
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        match self.degree_of(p)? {
            None => Ok(Poly::zero()),
            Some(d) => Ok(self.degree_basis(d)?.reduce(p)),
        }
    }

    pub fn is_zero(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn multiply(&self, p: &Poly, q: &Poly) -> Result<Poly> {
        let (Some(a), Some(b)) = (self.degree_of(p)?, self.degree_of(q)?) else {
            return Ok(Poly::zero());
        };
        self.check_bound(a + b)?;
        self.normal_form(&p.mul(q))
    }

    /// Builds every degree basis up to `through`, in parallel.
    pub fn warm(&self, through: u32) -> Result<()> {
        self.check_bound(through)?;
        (0..=through)
            .into_par_iter()
            .try_for_each(|d| self.degree_basis(d).map(|_| ()))
    }

    /// Dimensions of degrees `0..=through`.
    pub fn poincare_series(&self, through: u32) -> Result<Vec<usize>> {
        self.warm(through)?;
        (0..=through).map(|d| self.dim(d)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        self.pres.parse_poly(text)
    }

    pub fn format(&self, p: &Poly) -> String {
        self.pres.format_poly(p)
    }
}
