use super::{Coefficient, Polynomial, Rational};
use crate::error::Error;

fn check_no_constant<C: Coefficient>(p: &Polynomial<C>) -> Result<(), Error> {
    match p.constant_term() {
        Some(_) => Err(Error::NonzeroConstant),
        None => Ok(()),
    }
}

/// `ln(1 + p)` through total degree `degree`, for `p` without constant term.
///
/// Since every term of `p` has degree ≥ 1, `pⁿ` starts in degree `n` and the
/// series is exact after `degree` terms.
pub fn log1p_expand<C: Coefficient>(p: &Polynomial<C>, degree: u32) -> Result<Polynomial<C>, Error> {
    check_no_constant(p)?;
    let p = p.with_truncation(Some(degree));
    let mut out = Polynomial::zero(Some(degree));
    let mut power = p.clone();
    for n in 1..=degree {
        if power.is_zero() {
            break;
        }
        let sign = if n % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rational::new(sign.into(), (n as i64).into())))?;
        power = power.mul(&p)?;
    }
    Ok(out)
}

/// `exp(p)` through total degree `degree`, for `p` without constant term.
pub fn exp_expand<C: Coefficient>(p: &Polynomial<C>, degree: u32) -> Result<Polynomial<C>, Error> {
    check_no_constant(p)?;
    let p = p.with_truncation(Some(degree));
    let mut out = Polynomial::one(Some(degree));
    let mut power = Polynomial::one(Some(degree));
    let mut factorial = Rational::from_integer(1.into());
    for n in 1..=degree {
        power = power.mul(&p)?;
        if power.is_zero() {
            break;
        }
        factorial *= Rational::from_integer((n as i64).into());
        out = out.add(&power.scale(&(Rational::from_integer(1.into()) / &factorial)))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, Monomial, RatPoly};

    #[test]
    fn scalar_log_series() {
        let zz = RatPoly::holo_var(1, None).mul(&RatPoly::anti_var(1, None)).unwrap();
        let got = log1p_expand(&zz, 4).unwrap();
        let m2 = Monomial::from_exponents(&[(1, 2)], &[(1, 2)]);
        let expect =
            RatPoly::from_terms([(Monomial::from_exponents(&[(1, 1)], &[(1, 1)]), q(1, 1)), (m2, q(-1, 2))], Some(4));
        assert_eq!(got, expect);
    }

    #[test]
    fn zero_and_constant() {
        assert!(log1p_expand(&RatPoly::zero(None), 3).unwrap().is_zero());
        assert_eq!(log1p_expand(&RatPoly::one(None), 3), Err(Error::NonzeroConstant));
    }

    #[test]
    fn exp_of_single_variable() {
        let z = RatPoly::holo_var(0, None);
        let e = exp_expand(&z, 3).unwrap();
        assert_eq!(e.coeff(&Monomial::from_exponents(&[(0, 3)], &[])), Some(&q(1, 6)));
        assert_eq!(e.len(), 4);
    }
}
