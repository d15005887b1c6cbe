use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Coefficient, Monomial, Rational};
use crate::error::Error;

/// Sparse polynomial in `z`, `z̄` with an optional total-degree truncation.
///
/// No zero coefficient is ever stored, and when `truncation` is `Some(D)`
/// every stored monomial has degree at most `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
    truncation: Option<u32>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(truncation: Option<u32>) -> Self {
        Polynomial { terms: BTreeMap::new(), truncation }
    }

    pub fn constant(c: C, truncation: Option<u32>) -> Self {
        Self::monomial(Monomial::one(), c, truncation)
    }

    pub fn one(truncation: Option<u32>) -> Self {
        Self::constant(C::from_rational(Rational::from_integer(1.into())), truncation)
    }

    pub fn monomial(m: Monomial, c: C, truncation: Option<u32>) -> Self {
        let mut p = Self::zero(truncation);
        p.add_term(m, c);
        p
    }

    /// `z_var`.
    pub fn holo_var(var: usize, truncation: Option<u32>) -> Self {
        Self::monomial(Monomial::holo_var(var), C::from_rational(Rational::from_integer(1.into())), truncation)
    }

    /// `z̄_var`.
    pub fn anti_var(var: usize, truncation: Option<u32>) -> Self {
        Self::monomial(Monomial::anti_var(var), C::from_rational(Rational::from_integer(1.into())), truncation)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>, truncation: Option<u32>) -> Self {
        let mut p = Self::zero(truncation);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
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

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> Option<&C> {
        self.terms.get(&Monomial::one())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Adds `c · m`, respecting the truncation bound.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() || self.truncation.is_some_and(|d| m.degree() > d) {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn join_truncation(&self, other: &Self) -> Result<Option<u32>, Error> {
        match (self.truncation, other.truncation) {
            (Some(a), Some(b)) if a != b => Err(Error::TruncationMismatch(Some(a), Some(b))),
            (a, b) => Ok(a.or(b)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        let mut out = self.clone();
        out.truncation = self.join_truncation(other)?;
        if let Some(d) = out.truncation {
            out.terms.retain(|m, _| m.degree() <= d);
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
            truncation: self.truncation,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(k));
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale_coeff(&self, c: &C) -> Result<Self, Error> {
        let mut out = Self::zero(self.truncation);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.try_mul(c)?);
        }
        Ok(out)
    }

    /// Exact product; monomials above the truncation bound are dropped.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        let truncation = self.join_truncation(other)?;
        let mut out: BTreeMap<Monomial, C> = BTreeMap::new();
        let rhs: Vec<(&Monomial, &C)> = other.terms.iter().collect();
        for (ma, ca) in &self.terms {
            let budget = truncation.map(|d| d.checked_sub(ma.degree()));
            if budget == Some(None) {
                break;
            }
            for &(mb, cb) in &rhs {
                if let Some(Some(b)) = budget {
                    if mb.degree() > b {
                        break;
                    }
                }
                let prod = ca.try_mul(cb)?;
                match out.entry(ma.mul(mb)) {
                    alloc::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut o) => o.get_mut().add_assign(&prod),
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(Polynomial { terms: out, truncation })
    }

    pub fn pow(&self, n: u32) -> Result<Self, Error> {
        let mut acc = Self::one(self.truncation);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Swaps `z` and `z̄` in every monomial; coefficients are real and stay put.
    pub fn conj(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.conj(), c.clone())).collect(),
            truncation: self.truncation,
        }
    }

    /// Re-bounds the polynomial, dropping terms above `truncation`.
    pub fn with_truncation(&self, truncation: Option<u32>) -> Self {
        let mut out = Self::zero(truncation);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Terms of exact bidegree `(p, q)`.
    pub fn bidegree_part(&self, p: u32, q: u32) -> Self {
        self.filter(|m| m.bidegree() == (p, q))
    }

    /// Terms of exact total degree `k`.
    pub fn degree_part(&self, k: u32) -> Self {
        self.filter(|m| m.degree() == k)
    }

    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
            truncation: self.truncation,
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero(self.truncation);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, CoeffForm, RatPoly};

    #[test]
    fn product_of_z_and_zbar() {
        let p = RatPoly::holo_var(1, None).mul(&RatPoly::anti_var(1, None)).unwrap();
        let (m, c) = p.terms().next().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(m.bidegree(), (1, 1));
        assert_eq!(*c, q(1, 1));
    }

    #[test]
    fn truncation_drops_overflow() {
        let d = Some(2);
        let z = RatPoly::holo_var(1, d);
        let zb = RatPoly::anti_var(1, d);
        let a = z.add(&z.mul(&zb).unwrap()).unwrap();
        let prod = a.mul(&zb).unwrap();
        assert_eq!(prod, z.mul(&zb).unwrap());
    }

    #[test]
    fn mismatched_truncation_is_an_error() {
        let a = RatPoly::holo_var(0, Some(2));
        let b = RatPoly::holo_var(0, Some(3));
        assert!(matches!(a.mul(&b), Err(Error::TruncationMismatch(..))));
        assert!(a.mul(&RatPoly::holo_var(1, None)).is_ok());
    }

    #[test]
    fn conj_examples() {
        let m = Monomial::from_exponents(&[(1, 2)], &[(2, 1)]);
        let p = RatPoly::monomial(m, q(1, 1), None);
        let c = p.conj();
        assert_eq!(c.terms().next().unwrap().0, &Monomial::from_exponents(&[(2, 1)], &[(1, 2)]));
        assert_eq!(RatPoly::one(None).conj(), RatPoly::one(None));
    }

    #[test]
    fn nonlinear_form_product_fails() {
        let a = Polynomial::constant(CoeffForm::param(1), None);
        let b = Polynomial::constant(CoeffForm::param(2), None);
        assert!(matches!(a.mul(&b), Err(Error::NonlinearCoefficient)));
    }
}
