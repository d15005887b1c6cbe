//! Exact sparse polynomials in the coordinates `z_α` and their conjugates.
//!
//! Coefficients are either plain rationals or [`CoeffForm`]s, rational linear
//! forms in the Kähler parameters. Every polynomial may carry a total-degree
//! truncation bound, in which case it lives in the quotient ring that forgets
//! all monomials of higher degree.

mod coeff;
mod matrix;
mod monomial;
mod polynomial;
mod series;

pub use coeff::{CoeffForm, Coefficient};
pub use matrix::{minor_det, SymbolicMatrix};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use series::{exp_expand, log1p_expand};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub type RatPoly = Polynomial<Rational>;
pub type FormPoly = Polynomial<CoeffForm>;

/// Shorthand for `n / d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
