use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Coefficient, Polynomial, Rational};
use crate::error::Error;

/// Square matrix of polynomials, stored sparsely; zero entries are absent.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicMatrix<C> {
    size: usize,
    entries: BTreeMap<(usize, usize), Polynomial<C>>,
    truncation: Option<u32>,
}

impl<C: Coefficient> SymbolicMatrix<C> {
    pub fn zero(size: usize, truncation: Option<u32>) -> Self {
        SymbolicMatrix { size, entries: BTreeMap::new(), truncation }
    }

    pub fn identity(size: usize, truncation: Option<u32>) -> Self {
        let mut m = Self::zero(size, truncation);
        for i in 0..size {
            m.set(i, i, Polynomial::one(truncation));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    /// 0-based access; `None` for a zero entry.
    pub fn get(&self, row: usize, col: usize) -> Option<&Polynomial<C>> {
        self.entries.get(&(row, col))
    }

    /// Stores `p` at `(row, col)`, re-bounded to the matrix truncation; a zero
    /// polynomial clears the entry.
    pub fn set(&mut self, row: usize, col: usize, p: Polynomial<C>) {
        assert!(row < self.size && col < self.size, "({row}, {col}) outside {0}x{0}", self.size);
        let p = if p.truncation() == self.truncation { p } else { p.with_truncation(self.truncation) };
        if p.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), p);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial<C>)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Polynomial<C>)> {
        self.entries.range((r, 0)..(r + 1, 0)).map(|(&(_, c), v)| (c, v))
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        assert_eq!(self.size, other.size);
        let mut out = self.clone();
        for (&(i, j), p) in &other.entries {
            let sum = match out.entries.get(&(i, j)) {
                Some(q) => q.add(p)?,
                None => p.clone(),
            };
            out.set(i, j, sum);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.size, self.truncation);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, p.scale(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        assert_eq!(self.size, other.size);
        let mut out = Self::zero(self.size, self.truncation.or(other.truncation));
        let mut acc: BTreeMap<(usize, usize), Polynomial<C>> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (j, b) in other.row(k) {
                let prod = a.mul(b)?;
                match acc.get_mut(&(i, j)) {
                    Some(slot) => *slot = slot.add(&prod)?,
                    None => {
                        acc.insert((i, j), prod);
                    }
                }
            }
        }
        for ((i, j), p) in acc {
            out.set(i, j, p);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        SymbolicMatrix {
            size: self.size,
            entries: self.entries.iter().map(|(&(i, j), p)| ((j, i), p.clone())).collect(),
            truncation: self.truncation,
        }
    }

    /// Entrywise conjugation.
    pub fn conj(&self) -> Self {
        SymbolicMatrix {
            size: self.size,
            entries: self.entries.iter().map(|(&k, p)| (k, p.conj())).collect(),
            truncation: self.truncation,
        }
    }

    /// `ᵀ(Ā)`.
    pub fn conj_transpose(&self) -> Self {
        SymbolicMatrix {
            size: self.size,
            entries: self.entries.iter().map(|(&(i, j), p)| ((j, i), p.conj())).collect(),
            truncation: self.truncation,
        }
    }

    /// Leading `l × l` block.
    pub fn leading_block(&self, l: usize) -> Self {
        SymbolicMatrix {
            size: l,
            entries: self.entries.iter().filter(|(&(i, j), _)| i < l && j < l).map(|(&k, p)| (k, p.clone())).collect(),
            truncation: self.truncation,
        }
    }
}

/// Determinant of the leading `l × l` block of `a`.
///
/// Row-by-row Laplace expansion memoized on the set of used columns: state
/// `S` holds the signed sum over all bijections from the first `|S|` rows
/// onto `S`. Division-free, so it is exact over any coefficient ring and
/// respects truncation; cost is `O(2^l · l)` polynomial products.
pub fn minor_det<C: Coefficient>(a: &SymbolicMatrix<C>, l: usize) -> Result<Polynomial<C>, Error> {
    if l > a.size() {
        return Err(Error::MinorTooLarge { size: l, matrix: a.size() });
    }
    assert!(l <= 24, "minor of size {l} is beyond the memoized expansion");
    let trunc = a.truncation();
    if l == 0 {
        return Ok(Polynomial::one(trunc));
    }
    let rows: Vec<Vec<(usize, &Polynomial<C>)>> = (0..l).map(|r| a.row(r).filter(|&(c, _)| c < l).collect()).collect();
    let mut states: Vec<Option<Polynomial<C>>> = vec![None; 1 << l];
    states[0] = Some(Polynomial::one(trunc));
    for mask in 0usize..(1 << l) - 1 {
        let Some(partial) = states[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        for &(col, entry) in &rows[row] {
            let bit = 1usize << col;
            if mask & bit != 0 {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = partial.mul(entry)?;
            if inversions % 2 == 1 {
                term = term.neg();
            }
            if term.is_zero() {
                continue;
            }
            let next = mask | bit;
            states[next] = Some(match states[next].take() {
                Some(acc) => acc.add(&term)?,
                None => term,
            });
        }
    }
    Ok(states[(1 << l) - 1].take().unwrap_or_else(|| Polynomial::zero(trunc)))
}
