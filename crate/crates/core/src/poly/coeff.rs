use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::Add;

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::Error;

/// Coefficient ring interface used by [`Polynomial`](super::Polynomial).
///
/// `try_mul` is partial: a product of two parameter-dependent linear forms
/// would leave the space of linear forms and is reported as an error.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Zero {
    fn from_rational(q: Rational) -> Self;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn scale(&self, k: &Rational) -> Self;
    fn try_mul(&self, other: &Self) -> Result<Self, Error>;
    /// The constant part, if the coefficient does not depend on the parameters.
    fn as_rational(&self) -> Option<&Rational>;
}

impl Coefficient for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn neg(&self) -> Self {
        -self
    }

    fn scale(&self, k: &Rational) -> Self {
        self * k
    }

    fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * other)
    }

    fn as_rational(&self) -> Option<&Rational> {
        Some(self)
    }
}

/// A rational linear form `κ + Σ λ_k c_k` in the Kähler parameters.
///
/// Parameters are keyed by the 1-based position of their black node in the
/// Dynkin diagram, so `c5` is the parameter attached to node 5.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoeffForm {
    constant: Rational,
    terms: BTreeMap<usize, Rational>,
}

impl CoeffForm {
    pub fn constant(q: Rational) -> Self {
        CoeffForm { constant: q, terms: BTreeMap::new() }
    }

    /// The parameter `c_node`.
    pub fn param(node: usize) -> Self {
        Self::term(node, Rational::one())
    }

    pub fn term(node: usize, lambda: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !lambda.is_zero() {
            terms.insert(node, lambda);
        }
        CoeffForm { constant: Rational::zero(), terms }
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    /// Nonzero `(node, λ)` pairs in node order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, node: usize) -> Rational {
        self.terms.get(&node).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes numeric parameter values; missing nodes count as zero.
    pub fn eval(&self, values: &BTreeMap<usize, Rational>) -> Rational {
        let mut acc = self.constant.clone();
        for (k, l) in &self.terms {
            if let Some(v) = values.get(k) {
                acc += l * v;
            }
        }
        acc
    }

    /// Positive at every point of the open positive orthant.
    pub fn is_positive_on_orthant(&self) -> bool {
        let nonneg = !self.constant.is_negative() && self.terms.values().all(|l| l.is_positive());
        nonneg && !(self.constant.is_zero() && self.terms.is_empty())
    }

    /// Has no zero on the open positive orthant.
    pub fn nonvanishing_on_orthant(&self) -> bool {
        self.is_positive_on_orthant() || Coefficient::neg(self).is_positive_on_orthant()
    }
}

impl Add for CoeffForm {
    type Output = CoeffForm;

    fn add(mut self, other: CoeffForm) -> CoeffForm {
        Coefficient::add_assign(&mut self, &other);
        self
    }
}

impl Zero for CoeffForm {
    fn zero() -> Self {
        CoeffForm::default()
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }
}

impl Coefficient for CoeffForm {
    fn from_rational(q: Rational) -> Self {
        CoeffForm::constant(q)
    }

    fn add_assign(&mut self, other: &Self) {
        self.constant += &other.constant;
        for (k, v) in &other.terms {
            let slot = self.terms.entry(*k).or_insert_with(Rational::zero);
            *slot += v;
            if slot.is_zero() {
                self.terms.remove(k);
            }
        }
    }

    fn neg(&self) -> Self {
        CoeffForm { constant: -&self.constant, terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return CoeffForm::default();
        }
        CoeffForm { constant: &self.constant * k, terms: self.terms.iter().map(|(n, v)| (*n, v * k)).collect() }
    }

    fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        match (self.is_constant(), other.is_constant()) {
            (true, _) => Ok(other.scale(&self.constant)),
            (_, true) => Ok(self.scale(&other.constant)),
            _ => Err(Error::NonlinearCoefficient),
        }
    }

    fn as_rational(&self) -> Option<&Rational> {
        self.is_constant().then_some(&self.constant)
    }
}

/// Renders as e.g. `1/2*c1 - 1/2*c2`, `c1 - 2*c5`, `3/2`.
impl fmt::Display for CoeffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, v: &Rational, var: Option<usize>| -> fmt::Result {
            let mag = v.abs();
            if first {
                if v.is_negative() {
                    write!(f, "-")?;
                }
            } else if v.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match var {
                None => write!(f, "{mag}"),
                Some(k) if mag.is_one() => write!(f, "c{k}"),
                Some(k) => write!(f, "{mag}*c{k}"),
            }
        };
        if !self.constant.is_zero() {
            put(f, &self.constant, None)?;
        }
        for (k, v) in &self.terms {
            put(f, v, Some(*k))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;
    use alloc::string::ToString;

    #[test]
    fn arithmetic_and_display() {
        let mut f = CoeffForm::term(1, q(1, 2));
        f.add_assign(&CoeffForm::term(2, q(-1, 2)));
        assert_eq!(f.to_string(), "1/2*c1 - 1/2*c2");
        let mut g = f.clone();
        g.add_assign(&Coefficient::neg(&f));
        assert!(g.is_zero());
        assert_eq!(g.to_string(), "0");
        let h = CoeffForm::param(1).scale(&q(1, 1));
        let mut h2 = h.clone();
        h2.add_assign(&CoeffForm::term(5, q(-2, 1)));
        assert_eq!(h2.to_string(), "c1 - 2*c5");
        assert_eq!(CoeffForm::constant(q(3, 2)).to_string(), "3/2");
    }

    #[test]
    fn nonlinear_product_is_rejected() {
        let a = CoeffForm::param(1);
        assert_eq!(a.try_mul(&CoeffForm::param(2)), Err(Error::NonlinearCoefficient));
        let b = a.try_mul(&CoeffForm::constant(q(3, 1))).unwrap();
        assert_eq!(b.coefficient(1), q(3, 1));
    }

    #[test]
    fn orthant_sign() {
        let mut f = CoeffForm::term(1, q(1, 2));
        assert!(f.is_positive_on_orthant());
        f.add_assign(&CoeffForm::term(3, q(1, 3)));
        assert!(f.nonvanishing_on_orthant());
        f.add_assign(&CoeffForm::term(2, q(-1, 1)));
        assert!(!f.nonvanishing_on_orthant());
        assert!(!CoeffForm::default().nonvanishing_on_orthant());
        assert!(Coefficient::neg(&CoeffForm::param(4)).nonvanishing_on_orthant());
    }
}
