//! Dense bit-packed linear algebra over the two-element field.
//!
//! Vectors are stored as little-endian `u64` words; entry `i` lives in bit
//! `i % 64` of word `i / 64`. Row reduction produces the reduced row echelon
//! form, so every pivot column contains exactly one set bit.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over F2 of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    words: Vec<u64>,
    len: usize,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        F2Vector {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD] |= 1 << (len % WORD);
            }
            len += 1;
        }
        F2Vector { words, len }
    }

    /// Builds a vector from 0/1 integers; any nonzero entry counts as 1.
    pub fn from_slice(entries: &[u8]) -> Self {
        Self::from_bits(entries.iter().map(|&e| e != 0))
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(index, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "index {index} out of range {}", self.len);
        self.words[index / WORD] ^= 1 << (index % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place XOR; both vectors must have the same length.
    pub fn add_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set entry.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of all set entries, increasing.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + bit)
                }
            })
        })
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A matrix over F2 stored as a list of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: Vec<F2Vector>,
    ncols: usize,
}

impl F2Matrix {
    pub fn new(ncols: usize) -> Self {
        F2Matrix {
            rows: Vec::new(),
            ncols,
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<F2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Dimension {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(F2Matrix { rows, ncols })
    }

    /// Convenience constructor for tests and small literals.
    pub fn from_nested(ncols: usize, rows: &[&[u8]]) -> Result<Self> {
        Self::from_rows(
            ncols,
            rows.iter().map(|r| F2Vector::from_slice(r)).collect(),
        )
    }

    pub fn push_row(&mut self, row: F2Vector) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row_reduce(&self) -> RowReduced {
        let (rref, pivots, _) = eliminate(self.rows.clone(), self.ncols, None);
        RowReduced {
            rank: pivots.len(),
            rref: F2Matrix {
                rows: rref,
                ncols: self.ncols,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Decides whether `v` lies in the row span. When it does, the returned
    /// coordinates select rows of `self` whose sum is `v`.
    pub fn span_membership(&self, v: &F2Vector) -> Result<Option<F2Vector>> {
        if v.len() != self.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: v.len(),
            });
        }
        let n = self.rows.len();
        let tags: Vec<F2Vector> = (0..n).map(|i| F2Vector::unit(n, i)).collect();
        let (rref, pivots, tags) = eliminate(self.rows.clone(), self.ncols, Some(tags));
        let tags = tags.expect("tags requested");
        let mut rest = v.clone();
        let mut coords = F2Vector::zero(n);
        for ((row, tag), &p) in rref.iter().zip(&tags).zip(&pivots) {
            if rest.get(p) {
                rest.add_assign(row);
                coords.add_assign(tag);
            }
        }
        Ok(rest.is_zero().then_some(coords))
    }

    /// A basis of the right kernel `{x : M x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<F2Vector> {
        let reduced = self.row_reduce();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &reduced.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = F2Vector::unit(self.ncols, free);
                for (row, &p) in reduced.rref.rows.iter().zip(&reduced.pivots) {
                    if row.get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    /// Matrix-vector product `M x` where `x` has one entry per column.
    pub fn apply(&self, x: &F2Vector) -> Result<F2Vector> {
        if x.len() != self.ncols {
            return Err(Error::Dimension {
                expected: self.ncols,
                found: x.len(),
            });
        }
        Ok(F2Vector::from_bits(self.rows.iter().map(|row| {
            row.words
                .iter()
                .zip(&x.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>()
                % 2
                == 1
        })))
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.rows).finish()
    }
}

/// Output of [`F2Matrix::row_reduce`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduced {
    /// Nonzero rows of the reduced row echelon form.
    pub rref: F2Matrix,
    pub rank: usize,
    /// Pivot column of each row of `rref`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl RowReduced {
    /// Reduces `v` against the echelon rows, clearing every pivot column.
    /// The result is the canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &mut F2Vector) {
        for (row, &p) in self.rref.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.add_assign(row);
            }
        }
    }
}

// Gauss-Jordan elimination. `tags` are carried along with the rows so that
// callers can recover which original rows combine into each echelon row.
fn eliminate(
    mut rows: Vec<F2Vector>,
    ncols: usize,
    mut tags: Option<Vec<F2Vector>>,
) -> (Vec<F2Vector>, Vec<usize>, Option<Vec<F2Vector>>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        if let Some(t) = tags.as_mut() {
            t.swap(next, found);
        }
        let pivot_row = rows[next].clone();
        let pivot_tag = tags.as_ref().map(|t| t[next].clone());
        for r in 0..rows.len() {
            if r != next && rows[r].get(col) {
                rows[r].add_assign(&pivot_row);
                if let (Some(t), Some(pt)) = (tags.as_mut(), pivot_tag.as_ref()) {
                    t[r].add_assign(pt);
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    if let Some(t) = tags.as_mut() {
        t.truncate(next);
    }
    (rows, pivots, tags)
}
