use alloc::vec::Vec;

use crate::poly::{q, Monomial, RatPoly, Rational};
use crate::realization::CoordinateAtlas;

/// The four shapes of degree-three `(1, 2)` terms in a leading minor of the
/// Gram matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrinomialKind {
    /// `+½ Z_si Z̄_st Z̄_ti`, `i ≤ r`.
    I,
    /// `−½ Z_ij Z̄_is Z̄_sj`, `i, j ≤ r`, `i ≠ j`.
    II,
    /// `−Z_si Z̄_sj Z̄_ji`, `i, j ≤ r`, `i ≠ j`.
    III,
    /// `+Z_ab Z̄_ac Z̄_cb`, `{a, b, c} = {i, j, k}`, `i < j < k ≤ r`.
    IV,
}

impl TrinomialKind {
    pub fn weight(self) -> Rational {
        match self {
            TrinomialKind::I => q(1, 2),
            TrinomialKind::II => q(-1, 2),
            TrinomialKind::III => q(-1, 1),
            TrinomialKind::IV => q(1, 1),
        }
    }
}

/// One nonvanishing catalog entry `weight · Z_{z} Z̄_{zbar[0]} Z̄_{zbar[1]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trinomial {
    pub kind: TrinomialKind,
    /// Position (0-based) of the holomorphic factor.
    pub z: (usize, usize),
    /// Positions of the two conjugate factors.
    pub zbar: [(usize, usize); 2],
    pub monomial: Monomial,
    /// `weight` times the signs of the three entries.
    pub coefficient: Rational,
}

/// Enumerates the trinomials of `Δ_r(ᵀ(exp Z)‾ exp Z)` by kind, dropping those
/// containing a vanishing entry of `Z`. Their sum is the `(1, 2)` part of the
/// minor; cancellation between entries is left to the caller.
pub fn catalog_trinomials(atlas: &CoordinateAtlas, r: usize) -> Vec<Trinomial> {
    let m = atlas.matrix_size();
    let mut out = Vec::new();
    let mut push = |kind: TrinomialKind, z: (usize, usize), a: (usize, usize), b: (usize, usize)| {
        let (Some(ez), Some(ea), Some(eb)) = (atlas.entry(z.0, z.1), atlas.entry(a.0, a.1), atlas.entry(b.0, b.1))
        else {
            return;
        };
        let sign = (ez.sign * ea.sign * eb.sign) as i64;
        let monomial = Monomial::from_exponents(&[(ez.var, 1)], &[(ea.var, 1), (eb.var, 1)]);
        out.push(Trinomial {
            kind,
            z,
            zbar: [a, b],
            monomial,
            coefficient: kind.weight() * Rational::from_integer(sign.into()),
        });
    };
    for i in 0..r {
        for s in 0..m {
            for t in 0..m {
                push(TrinomialKind::I, (s, i), (s, t), (t, i));
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            for s in 0..m {
                push(TrinomialKind::II, (i, j), (i, s), (s, j));
            }
            for s in 0..m {
                push(TrinomialKind::III, (s, i), (s, j), (j, i));
            }
        }
    }
    for i in 0..r {
        for j in (i + 1)..r {
            for k in (j + 1)..r {
                for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                    push(TrinomialKind::IV, (a, b), (a, c), (c, b));
                }
            }
        }
    }
    out
}

/// Sum of catalog entries as a polynomial (truncated at degree 3).
pub fn sum_catalog(entries: &[Trinomial]) -> RatPoly {
    RatPoly::from_terms(entries.iter().map(|t| (t.monomial.clone(), t.coefficient.clone())), Some(3))
}
