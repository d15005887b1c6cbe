mod common;

use common::*;
use flag_bochner_core::poly::{exp_expand, log1p_expand, minor_det, q, Monomial, RatPoly, SymbolicMatrix};
use proptest::prelude::*;

const NV: usize = 3;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn product_matches_dense_schoolbook(a in arb_poly(NV, 6, None), b in arb_poly(NV, 6, None)) {
        let sparse = a.mul(&b).unwrap();
        let dense = dense_mul(&to_dense(&a, NV), &to_dense(&b, NV), None);
        prop_assert_eq!(sparse, from_dense(&dense, None));
    }

    #[test]
    fn truncated_product_matches_dense(a in arb_poly(NV, 6, Some(5)), b in arb_poly(NV, 6, Some(5))) {
        let sparse = a.mul(&b).unwrap();
        let dense = dense_mul(&to_dense(&a, NV), &to_dense(&b, NV), Some(5));
        prop_assert_eq!(sparse, from_dense(&dense, Some(5)));
    }

    #[test]
    fn ring_axioms(
        a in arb_poly(NV, 4, Some(5)),
        b in arb_poly(NV, 4, Some(5)),
        c in arb_poly(NV, 4, Some(5)),
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&RatPoly::one(Some(5))).unwrap(), a.clone());
    }

    #[test]
    fn truncation_bound_holds(a in arb_poly(NV, 6, Some(4)), b in arb_poly(NV, 6, Some(4))) {
        let p = a.mul(&b).unwrap();
        prop_assert!(p.terms().all(|(m, _)| m.degree() <= 4));
    }

    #[test]
    fn conj_is_an_involutive_homomorphism(a in arb_poly(NV, 5, None), b in arb_poly(NV, 5, None)) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().conj(), a.conj().mul(&b.conj()).unwrap());
    }

    #[test]
    fn minor_matches_leibniz(m in arb_matrix(5, 2, Some(4)), l in 0usize..=5) {
        prop_assert_eq!(minor_det(&m, l).unwrap(), leibniz_det(&m, l));
    }

    #[test]
    fn minor_of_six_matches_leibniz(m in arb_matrix(6, 2, Some(3))) {
        prop_assert_eq!(minor_det(&m, 6).unwrap(), leibniz_det(&m, 6));
    }

    #[test]
    fn block_diagonal_minor_factorizes(a in arb_matrix(2, 2, Some(4)), b in arb_matrix(3, 2, Some(4))) {
        let mut m = SymbolicMatrix::zero(5, Some(4));
        for ((i, j), p) in a.entries() {
            m.set(i, j, p.clone());
        }
        for ((i, j), p) in b.entries() {
            m.set(i + 2, j + 2, p.clone());
        }
        let whole = minor_det(&m, 5).unwrap();
        let split = minor_det(&a, 2).unwrap().mul(&minor_det(&b, 3).unwrap()).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn log_inverts_exp(a in arb_poly(NV, 5, Some(5))) {
        // Drop the constant so both series apply.
        let p = a.filter(|m| m.degree() >= 1);
        let e = exp_expand(&p, 5).unwrap();
        let back = log1p_expand(&e.sub(&RatPoly::one(Some(5))).unwrap(), 5).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn log_of_norm_squared() {
    let zz = RatPoly::holo_var(0, Some(4)).mul(&RatPoly::anti_var(0, Some(4))).unwrap();
    let got = log1p_expand(&zz, 4).unwrap();
    let expect = RatPoly::from_terms(
        [
            (Monomial::from_exponents(&[(0, 1)], &[(0, 1)]), q(1, 1)),
            (Monomial::from_exponents(&[(0, 2)], &[(0, 2)]), q(-1, 2)),
        ],
        Some(4),
    );
    assert_eq!(got, expect);
}
