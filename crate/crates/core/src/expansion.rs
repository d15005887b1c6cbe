//! Truncated expansion of the invariant Kähler potential
//! `D₀ = Σ_k c_k ln Δ_{l_k}(ᵀ(exp Z)‾ · exp Z)` in the chart coordinates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::error::Error;
use crate::lie::{Family, PaintedDiagram};
use crate::poly::{log1p_expand, minor_det, CoeffForm, Coefficient, FormPoly, RatPoly, Rational, SymbolicMatrix};
use crate::realization::CoordinateAtlas;

/// Default truncation degree: enough to see every forbidden trinomial.
pub const DEFAULT_DEGREE: u32 = 3;
/// Default degree for audit runs.
pub const DEFAULT_AUDIT_DEGREE: u32 = 6;

/// Leading principal minors that enter the potential, one per black node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleMinors {
    /// `(black node, minor size)`, increasing in both.
    pairs: Vec<(usize, usize)>,
}

impl AdmissibleMinors {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Minor sizes `l_1 < ⋯ < l_s`.
    pub fn sizes(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn size_for_node(&self, node: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == node).map(|p| p.1)
    }

    pub fn largest(&self) -> usize {
        self.pairs.last().map_or(0, |p| p.1)
    }
}

/// Node `e_r − e_{r+1}` pairs with `Δ_r`; the terminal node of B, C and D
/// pairs with `Δ_d`.
pub fn admissible_minors(diagram: &PaintedDiagram) -> AdmissibleMinors {
    let d = diagram.group().rank();
    let pairs = diagram
        .black()
        .iter()
        .map(|&node| {
            let size = match diagram.group().family() {
                Family::A => node,
                _ if node == d => d,
                _ => node,
            };
            (node, size)
        })
        .collect();
    AdmissibleMinors { pairs }
}

/// `exp Z` as the finite sum `Σ_k Z^k / k!`, truncated at total degree `degree`.
pub fn exp_z(atlas: &CoordinateAtlas, degree: u32) -> SymbolicMatrix<Rational> {
    let trunc = Some(degree);
    let z = atlas.z_matrix(trunc);
    let mut out = SymbolicMatrix::identity(atlas.matrix_size(), trunc);
    let mut power = SymbolicMatrix::identity(atlas.matrix_size(), trunc);
    let mut factorial = Rational::one();
    for k in 1..=degree {
        power = power.mul(&z).expect("uniform truncation");
        if power.is_zero() {
            break;
        }
        factorial *= Rational::from_integer((k as i64).into());
        out = out.add(&power.scale(&factorial.recip())).expect("uniform truncation");
    }
    out
}

/// `ᵀ(exp Z)‾ · exp Z`, truncated at `degree`.
pub fn gram(atlas: &CoordinateAtlas, degree: u32) -> SymbolicMatrix<Rational> {
    gram_block(atlas, degree, atlas.matrix_size())
}

/// Leading `block × block` part of [`gram`], computed without the rest.
pub fn gram_block(atlas: &CoordinateAtlas, degree: u32, block: usize) -> SymbolicMatrix<Rational> {
    let e = exp_z(atlas, degree);
    let mut cols = SymbolicMatrix::zero(e.size(), Some(degree));
    for ((i, j), p) in e.entries() {
        if j < block {
            cols.set(i, j, p.clone());
        }
    }
    cols.conj_transpose().mul(&cols).expect("uniform truncation")
}

/// Kähler parameters: symbolic `c_k`, or one positive rational per black node.
#[derive(Debug, Clone, PartialEq)]
pub enum KahlerParams {
    Symbolic,
    Numeric(Vec<Rational>),
}

impl KahlerParams {
    fn forms(&self, minors: &AdmissibleMinors) -> Result<Vec<CoeffForm>, Error> {
        match self {
            KahlerParams::Symbolic => Ok(minors.pairs.iter().map(|&(node, _)| CoeffForm::param(node)).collect()),
            KahlerParams::Numeric(values) => {
                if values.len() != minors.pairs.len() {
                    return Err(Error::CoefficientCount { expected: minors.pairs.len(), got: values.len() });
                }
                if values.iter().any(|v| !v.is_positive()) {
                    return Err(Error::NonPositiveCoefficient);
                }
                Ok(values.iter().cloned().map(CoeffForm::constant).collect())
            }
        }
    }
}

/// The truncated potential together with the data it was built from.
#[derive(Debug, Clone)]
pub struct DiastasisExpansion {
    pub atlas: CoordinateAtlas,
    pub degree: u32,
    pub minors: AdmissibleMinors,
    pub poly: FormPoly,
}

impl DiastasisExpansion {
    /// Substitutes numeric parameters (by black node) into every coefficient.
    pub fn evaluate_params(&self, values: &BTreeMap<usize, Rational>) -> RatPoly {
        self.poly.map_coeffs(|f| f.eval(values))
    }
}

/// Expands `Σ_k c_k ln Δ_{l_k}` through total degree `degree`.
pub fn diastasis(diagram: &PaintedDiagram, degree: u32, params: &KahlerParams) -> Result<DiastasisExpansion, Error> {
    let atlas = CoordinateAtlas::build(diagram)?;
    diastasis_on(atlas, degree, params)
}

/// As [`diastasis`], reusing an already built atlas.
pub fn diastasis_on(atlas: CoordinateAtlas, degree: u32, params: &KahlerParams) -> Result<DiastasisExpansion, Error> {
    if degree < 2 {
        return Err(Error::DegreeTooLow(degree));
    }
    let minors = admissible_minors(atlas.diagram());
    let weights = params.forms(&minors)?;
    let a = gram_block(&atlas, degree, minors.largest());
    let one = RatPoly::one(Some(degree));
    let mut poly = FormPoly::zero(Some(degree));
    for (&(_, size), weight) in minors.pairs.iter().zip(&weights) {
        let log = log1p_expand(&minor_det(&a, size)?.sub(&one)?, degree)?;
        for (m, q) in log.terms() {
            poly.add_term(m.clone(), weight.scale(q));
        }
    }
    let expansion = DiastasisExpansion { atlas, degree, minors, poly };
    check_invariants(&expansion)?;
    Ok(expansion)
}

/// No constant or pure `(p, 0)`/`(0, q)` terms; diagonal `(1, 1)` part with
/// positive coefficients on every coordinate.
fn check_invariants(e: &DiastasisExpansion) -> Result<(), Error> {
    let mut seen = alloc::vec![false; e.atlas.num_vars()];
    for (m, c) in e.poly.terms() {
        let (p, q) = m.bidegree();
        if p == 0 || q == 0 {
            return Err(Error::Invariant(format!("pure term {} with coefficient {c}", e.atlas.render_monomial(m))));
        }
        if (p, q) == (1, 1) {
            if !m.is_diagonal_quadratic() {
                return Err(Error::Invariant(format!("off-diagonal quadratic term {}", e.atlas.render_monomial(m))));
            }
            if !c.is_positive_on_orthant() {
                return Err(Error::Invariant(format!(
                    "quadratic coefficient {c} of {} is not positive",
                    e.atlas.render_monomial(m)
                )));
            }
            let (var, _) = m.holo().next().expect("degree one");
            seen[var] = true;
        }
    }
    if let Some(var) = seen.iter().position(|s| !s) {
        return Err(Error::Invariant(format!("coordinate z[{}] has no quadratic term", e.atlas.vars()[var])));
    }
    Ok(())
}

/// Coefficient of `|z_var|²`.
pub fn quadratic_coefficient(e: &DiastasisExpansion, var: usize) -> CoeffForm {
    let m = crate::poly::Monomial::from_exponents(&[(var, 1)], &[(var, 1)]);
    e.poly.coeff(&m).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GroupSpec;
    use crate::poly::{q, Monomial};

    fn diag(f: Family, d: usize, black: &[usize]) -> PaintedDiagram {
        PaintedDiagram::new(GroupSpec::new(f, d).unwrap(), black).unwrap()
    }

    #[test]
    fn minors_follow_black_nodes() {
        assert_eq!(admissible_minors(&diag(Family::A, 6, &[2, 4])).sizes(), alloc::vec![2, 4]);
        assert_eq!(admissible_minors(&diag(Family::D, 5, &[1, 5])).sizes(), alloc::vec![1, 5]);
        assert_eq!(admissible_minors(&diag(Family::C, 4, &[4])).sizes(), alloc::vec![4]);
        assert_eq!(admissible_minors(&diag(Family::D, 5, &[4, 5])).sizes(), alloc::vec![4, 5]);
    }

    #[test]
    fn grassmannian_exp_is_affine() {
        let atlas = CoordinateAtlas::build(&diag(Family::A, 5, &[2])).unwrap();
        let e = exp_z(&atlas, 4);
        let expect = SymbolicMatrix::identity(5, Some(4)).add(&atlas.z_matrix(Some(4))).unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn su3_exp_corner_entry() {
        // vars in lex order: −e1+e3 (0), −e1+e2 (1), −e2+e3 (2)
        let atlas = CoordinateAtlas::build(&diag(Family::A, 3, &[1, 2])).unwrap();
        let e = exp_z(&atlas, 3);
        let corner = e.get(2, 0).unwrap();
        let expect = RatPoly::from_terms(
            [(Monomial::holo_var(0), q(1, 1)), (Monomial::from_exponents(&[(1, 1), (2, 1)], &[]), q(1, 2))],
            Some(3),
        );
        assert_eq!(corner, &expect);
    }

    #[test]
    fn grassmannian_potential_is_norm_squared() {
        let atlas = CoordinateAtlas::build(&diag(Family::A, 5, &[3])).unwrap();
        let n = atlas.num_vars();
        let e = diastasis_on(atlas, 2, &KahlerParams::Symbolic).unwrap();
        assert_eq!(e.poly.len(), n);
        for (m, c) in e.poly.terms() {
            assert!(m.is_diagonal_quadratic());
            assert_eq!(c, &CoeffForm::param(3));
        }
    }

    #[test]
    fn parameter_validation() {
        let d = diag(Family::A, 4, &[1, 3]);
        assert!(matches!(
            diastasis(&d, 3, &KahlerParams::Numeric(alloc::vec![q(1, 1)])),
            Err(Error::CoefficientCount { expected: 2, got: 1 })
        ));
        assert!(matches!(
            diastasis(&d, 3, &KahlerParams::Numeric(alloc::vec![q(1, 1), q(0, 1)])),
            Err(Error::NonPositiveCoefficient)
        ));
        assert!(matches!(diastasis(&d, 1, &KahlerParams::Symbolic), Err(Error::DegreeTooLow(1))));
    }
}
