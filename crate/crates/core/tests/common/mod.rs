#![allow(dead_code)]

use std::collections::BTreeMap;

use flag_bochner_core::poly::{q, Monomial, Polynomial, RatPoly, Rational, SymbolicMatrix};
use num_traits::Zero;
use proptest::prelude::*;

/// Dense exponent-vector representation used as an independent oracle.
pub type Dense = BTreeMap<(Vec<u32>, Vec<u32>), Rational>;

pub fn to_dense(p: &RatPoly, nvars: usize) -> Dense {
    let mut out = Dense::new();
    for (m, c) in p.terms() {
        let mut h = vec![0; nvars];
        let mut a = vec![0; nvars];
        for (v, e) in m.holo() {
            h[v] = e;
        }
        for (v, e) in m.anti() {
            a[v] = e;
        }
        out.insert((h, a), c.clone());
    }
    out
}

pub fn from_dense(d: &Dense, truncation: Option<u32>) -> RatPoly {
    RatPoly::from_terms(
        d.iter().map(|((h, a), c)| {
            let hs: Vec<(usize, u32)> = h.iter().copied().enumerate().collect();
            let as_: Vec<(usize, u32)> = a.iter().copied().enumerate().collect();
            (Monomial::from_exponents(&hs, &as_), c.clone())
        }),
        truncation,
    )
}

/// Schoolbook product over exponent vectors, then truncation.
pub fn dense_mul(a: &Dense, b: &Dense, truncation: Option<u32>) -> Dense {
    let mut out = Dense::new();
    for ((ha, aa), ca) in a {
        for ((hb, ab), cb) in b {
            let h: Vec<u32> = ha.iter().zip(hb).map(|(x, y)| x + y).collect();
            let an: Vec<u32> = aa.iter().zip(ab).map(|(x, y)| x + y).collect();
            let deg: u32 = h.iter().sum::<u32>() + an.iter().sum::<u32>();
            if truncation.is_some_and(|d| deg > d) {
                continue;
            }
            *out.entry((h, an)).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn arb_monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    (prop::collection::vec(0..=max_exp, nvars), prop::collection::vec(0..=max_exp, nvars)).prop_map(|(h, a)| {
        let hs: Vec<(usize, u32)> = h.into_iter().enumerate().collect();
        let as_: Vec<(usize, u32)> = a.into_iter().enumerate().collect();
        Monomial::from_exponents(&hs, &as_)
    })
}

pub fn arb_poly(nvars: usize, max_terms: usize, truncation: Option<u32>) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((arb_monomial(nvars, 2), arb_rational()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(terms, truncation))
}

/// Sparse random square matrix of polynomials.
pub fn arb_matrix(
    size: usize,
    nvars: usize,
    truncation: Option<u32>,
) -> impl Strategy<Value = SymbolicMatrix<Rational>> {
    prop::collection::vec(prop::option::weighted(0.6, arb_poly(nvars, 3, truncation)), size * size).prop_map(
        move |cells| {
            let mut m = SymbolicMatrix::zero(size, truncation);
            for (k, cell) in cells.into_iter().enumerate() {
                if let Some(p) = cell {
                    m.set(k / size, k % size, p);
                }
            }
            m
        },
    )
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

fn parity(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// Leibniz permutation sum for the leading `l × l` minor.
pub fn leibniz_det(a: &SymbolicMatrix<Rational>, l: usize) -> RatPoly {
    let trunc = a.truncation();
    let mut total = RatPoly::zero(trunc);
    'perm: for p in permutations(l) {
        let mut term = RatPoly::one(trunc);
        for (row, &col) in p.iter().enumerate() {
            match a.get(row, col) {
                Some(e) => term = term.mul(e).unwrap(),
                None => continue 'perm,
            }
        }
        total = if parity(&p) { total.sub(&term).unwrap() } else { total.add(&term).unwrap() };
    }
    total
}

/// Integer matrix product.
pub fn int_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

pub fn int_transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

pub fn int_commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ab = int_mul(a, b);
    let ba = int_mul(b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}
