//! Exact feasibility of `{ Σ λ_k c_k + κ = 0 } ∩ { c > 0 }` over the rationals.
//!
//! The equalities are reduced to row echelon form and parametrized; the
//! strict positivity constraints on the parametrization are then decided by
//! Fourier–Motzkin elimination, which also yields an explicit solution.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::poly::{CoeffForm, Rational};

/// Reduced row echelon form of the linear forms, over the variables `nodes`.
///
/// Returns the nonzero rows as forms (pivot coefficient 1), or `None` if the
/// system `forms = 0` is inconsistent (a nonzero constant row).
pub fn reduced_constraints(forms: &[CoeffForm], nodes: &[usize]) -> Option<Vec<CoeffForm>> {
    let (rows, pivots) = rref(forms, nodes);
    let n = nodes.len();
    if rows.iter().skip(pivots.len()).any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(
        rows.iter()
            .take(pivots.len())
            .map(|r| {
                let mut f = CoeffForm::constant(r[n].clone());
                for (k, v) in r[..n].iter().enumerate() {
                    crate::poly::Coefficient::add_assign(&mut f, &CoeffForm::term(nodes[k], v.clone()));
                }
                f
            })
            .collect(),
    )
}

/// Dense RREF; column `n` is the constant. Returns rows and pivot columns.
fn rref(forms: &[CoeffForm], nodes: &[usize]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let n = nodes.len();
    let mut rows: Vec<Vec<Rational>> = forms
        .iter()
        .map(|f| {
            let mut r: Vec<Rational> = nodes.iter().map(|&k| f.coefficient(k)).collect();
            r.push(f.constant_part().clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(top, p);
        let inv = rows[top][col].recip();
        for v in rows[top].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != top && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    // Zero rows last, with possibly nonzero constants kept for the consistency check.
    (rows, pivots)
}

/// A point `c > 0` (indexed like `nodes`) with every form vanishing, if any.
pub fn positive_solution(forms: &[CoeffForm], nodes: &[usize]) -> Option<Vec<Rational>> {
    let n = nodes.len();
    let (rows, pivots) = rref(forms, nodes);
    if rows.iter().skip(pivots.len()).any(|r| !r[n].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    // x = x0 + N t, one parameter per free column.
    let mut affine: Vec<Vec<Rational>> = vec![vec![Rational::zero(); free.len() + 1]; n];
    for (fi, &c) in free.iter().enumerate() {
        affine[c][fi] = Rational::one();
    }
    for (ri, &pc) in pivots.iter().enumerate() {
        for (fi, &c) in free.iter().enumerate() {
            affine[pc][fi] = -rows[ri][c].clone();
        }
        affine[pc][free.len()] = -rows[ri][n].clone();
    }
    let t = strict_feasible(affine.clone(), free.len())?;
    Some(
        affine
            .iter()
            .map(|row| {
                let mut v = row[free.len()].clone();
                for (a, x) in row[..free.len()].iter().zip(&t) {
                    v += a * x;
                }
                v
            })
            .collect(),
    )
}

/// Finds `t ∈ Q^k` with `a·t + b > 0` for every row `[a | b]`.
fn strict_feasible(ineqs: Vec<Vec<Rational>>, k: usize) -> Option<Vec<Rational>> {
    // levels[j] holds the system in variables t_0..t_j (before eliminating t_j).
    let mut levels: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(k);
    let mut current = dedup(ineqs);
    for var in (0..k).rev() {
        levels.push(current.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in current {
            match row[var].cmp(&Rational::zero()) {
                core::cmp::Ordering::Greater => pos.push(row),
                core::cmp::Ordering::Less => neg.push(row),
                core::cmp::Ordering::Equal => rest.push(row),
            }
        }
        for p in &pos {
            for n in &neg {
                let (wp, wn) = (-n[var].clone(), p[var].clone());
                let combined: Vec<Rational> = p.iter().zip(n).map(|(a, b)| a * &wp + b * &wn).collect();
                rest.push(combined);
            }
        }
        current = dedup(rest);
    }
    if current.iter().any(|row| !row[k].is_positive()) {
        return None;
    }
    // Back-substitute t_0, t_1, … using levels in reverse order of elimination.
    let mut t: Vec<Rational> = Vec::with_capacity(k);
    for var in 0..k {
        let system = &levels[k - 1 - var];
        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        for row in system {
            let mut rhs = row[k].clone();
            for (j, x) in t.iter().enumerate() {
                rhs += &row[j] * x;
            }
            let a = &row[var];
            if a.is_zero() {
                continue;
            }
            // a t + rhs > 0
            let bound = -rhs / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        let value = match (lo, hi) {
            (Some(l), Some(h)) => (l + h) / Rational::from_integer(2.into()),
            (Some(l), None) => l + Rational::one(),
            (None, Some(h)) => h - Rational::one(),
            (None, None) => Rational::zero(),
        };
        t.push(value);
    }
    Some(t)
}

/// Normalizes rows to a unit leading coefficient in absolute value and drops
/// duplicates and trivially true rows.
fn dedup(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for row in rows {
        let k = row.len() - 1;
        let lead = row.iter().find(|v| !v.is_zero()).cloned();
        let Some(lead) = lead else {
            // 0 > 0 is false; keep it so the final check fails.
            out.push(row);
            continue;
        };
        let scale = lead.abs().recip();
        let norm: Vec<Rational> = row.iter().map(|v| v * &scale).collect();
        if norm[..k].iter().all(Zero::is_zero) && norm[k].is_positive() {
            continue;
        }
        if seen.insert(norm.clone()) {
            out.push(norm);
        }
    }
    out
}
