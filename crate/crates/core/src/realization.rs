//! Matrix realization of root vectors and the coordinate matrix
//! `Z(z) = Σ_{α ∈ −Q} z_α E_α`.
//!
//! The orthogonal groups use the split quadratic forms
//! `z_1 z_{d+1} + ⋯ + z_d z_{2d}` (for `SO(2d)`) and
//! `2(z_1 z_{d+1} + ⋯ + z_d z_{2d}) + z_{2d+1}²` (for `SO(2d+1)`), so the
//! Cartan subalgebra is diagonal and every root vector has at most two
//! nonzero entries, each `±1`. All matrix indices here are 0-based.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::Error;
use crate::lie::{Family, GroupSpec, PaintedDiagram, Root};
use crate::poly::{Monomial, RatPoly, Rational, SymbolicMatrix};

/// Sparse `±1` matrix of a root vector `E_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootVectorMatrix {
    pub size: usize,
    /// `(row, col, sign)`, 0-based.
    pub entries: Vec<(usize, usize, i8)>,
}

impl RootVectorMatrix {
    /// Dense integer form, for tests and numerics.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = alloc::vec![alloc::vec![0i64; self.size]; self.size];
        for &(r, c, s) in &self.entries {
            m[r][c] += s as i64;
        }
        m
    }
}

/// The root vector of `alpha` in the defining representation of `group`.
pub fn root_vector(alpha: &Root, group: &GroupSpec) -> Result<RootVectorMatrix, Error> {
    if !group.contains(alpha) {
        return Err(Error::NotARoot(alpha.clone()));
    }
    let d = group.rank();
    let size = group.matrix_size();
    let nz: Vec<(usize, i32)> =
        alpha.coeffs().iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
    let mut entries = Vec::with_capacity(2);
    let symplectic = group.family() == Family::C;
    // Sign of the mirrored entry in the off-diagonal blocks: symmetric for Sp, skew for SO.
    let mirror: i8 = if symplectic { 1 } else { -1 };
    match *nz.as_slice() {
        // e_i − e_j
        [(i, a), (j, b)] if a == -b => {
            let (i, j) = if a > 0 { (i, j) } else { (j, i) };
            entries.push((i, j, 1));
            if group.family() != Family::A {
                entries.push((d + j, d + i, -1));
            }
        }
        // ±(e_i + e_j), i < j
        [(i, a), (j, _)] => {
            if a > 0 {
                entries.push((i, d + j, 1));
                entries.push((j, d + i, mirror));
            } else {
                entries.push((d + i, j, 1));
                entries.push((d + j, i, mirror));
            }
        }
        // ±2e_i in Sp(d)
        [(i, a)] if symplectic => {
            if a > 0 {
                entries.push((i, d + i, 1));
            } else {
                entries.push((d + i, i, 1));
            }
        }
        // ±e_i in SO(2d+1)
        [(i, a)] => {
            let last = 2 * d;
            if a > 0 {
                entries.push((i, last, 1));
                entries.push((last, d + i, -1));
            } else {
                entries.push((d + i, last, 1));
                entries.push((last, i, -1));
            }
        }
        _ => return Err(Error::NotARoot(alpha.clone())),
    }
    Ok(RootVectorMatrix { size, entries })
}

/// One entry of `Z`: `sign · z_var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZEntry {
    pub var: usize,
    pub sign: i8,
}

/// The coordinate chart `z ↦ exp Z(z)` of a painted diagram.
///
/// Variable `k` is `z_α` for the `k`-th root of `−Q` in lexicographic order.
#[derive(Debug, Clone)]
pub struct CoordinateAtlas {
    diagram: PaintedDiagram,
    vars: Vec<Root>,
    z: BTreeMap<(usize, usize), ZEntry>,
}

impl CoordinateAtlas {
    /// Assembles `Z` from the root vectors of `−Q`.
    pub fn build(diagram: &PaintedDiagram) -> Result<Self, Error> {
        let group = diagram.group();
        let mut vars: Vec<Root> = diagram.black_roots().q.iter().map(Root::neg).collect();
        vars.sort();
        let mut z = BTreeMap::new();
        for (var, alpha) in vars.iter().enumerate() {
            for (row, col, sign) in root_vector(alpha, &group)?.entries {
                if z.insert((row, col), ZEntry { var, sign }).is_some() {
                    return Err(Error::PositionCollision { row, col });
                }
            }
        }
        Ok(CoordinateAtlas { diagram: diagram.clone(), vars, z })
    }

    pub fn diagram(&self) -> &PaintedDiagram {
        &self.diagram
    }

    pub fn group(&self) -> GroupSpec {
        self.diagram.group()
    }

    pub fn matrix_size(&self) -> usize {
        self.diagram.group().matrix_size()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Roots of `−Q`, indexed by variable.
    pub fn vars(&self) -> &[Root] {
        &self.vars
    }

    pub fn var_index(&self, root: &Root) -> Option<usize> {
        self.vars.binary_search(root).ok()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<ZEntry> {
        self.z.get(&(row, col)).copied()
    }

    /// Nonzero entries of `Z`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), ZEntry)> + '_ {
        self.z.iter().map(|(&k, &v)| (k, v))
    }

    /// `Z` as a symbolic matrix of linear polynomials.
    pub fn z_matrix(&self, truncation: Option<u32>) -> SymbolicMatrix<Rational> {
        let mut m = SymbolicMatrix::zero(self.matrix_size(), truncation);
        for (&(r, c), e) in &self.z {
            let p = RatPoly::holo_var(e.var, truncation);
            m.set(r, c, if e.sign < 0 { p.neg() } else { p });
        }
        m
    }

    /// Smallest `k` with `Z^k ≡ 0`.
    pub fn nilpotency_index(&self) -> usize {
        let z = self.z_matrix(None);
        let mut power = z.clone();
        let mut k = 1;
        while !power.is_zero() {
            power = power.mul(&z).expect("untruncated products");
            k += 1;
        }
        k
    }

    /// `z[α]` / `zb[α]` notation, e.g. `z[-2e1]*zb[-e1-e3]*zb[-e1+e3]`.
    pub fn render_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        let mut put = |prefix: &str, var: usize, exp: u32| {
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "{prefix}[{}]", self.vars[var]);
            if exp > 1 {
                let _ = write!(s, "^{exp}");
            }
        };
        for (v, e) in m.holo() {
            put("z", v, e);
        }
        for (v, e) in m.anti() {
            put("zb", v, e);
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Monomial in `z` / `z̄` built from roots of `−Q`; `None` if a root is not a variable.
    pub fn monomial_from_roots(&self, holo: &[Root], anti: &[Root]) -> Option<Monomial> {
        let h: Option<Vec<(usize, u32)>> = holo.iter().map(|r| self.var_index(r).map(|k| (k, 1))).collect();
        let a: Option<Vec<(usize, u32)>> = anti.iter().map(|r| self.var_index(r).map(|k| (k, 1))).collect();
        Some(Monomial::from_exponents(&h?, &a?))
    }
}
