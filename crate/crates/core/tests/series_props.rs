use num_bigint::BigInt;
use proptest::prelude::*;
use twoline::series::{
    bivariate_inverse_coeffs, inv_sqrt_trunc, inverse_trunc, mul_trunc, mul_trunc2, TruncatedSeries,
    TruncatedSeries2,
};
use twoline::Error;

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-20i64..=20, order).prop_map(move |tail| {
        let mut c = vec![1i64];
        c.extend(tail);
        TruncatedSeries::from_i64(&c, order)
    })
}

fn is_one(s: &TruncatedSeries) -> bool {
    s.coeffs().iter().enumerate().all(|(d, c)| *c == BigInt::from((d == 0) as i64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_roundtrip((order, p) in (0usize..=64).prop_flat_map(|o| (Just(o), unit_series(o)))) {
        let inv = inverse_trunc(&p, order).unwrap();
        prop_assert!(is_one(&mul_trunc(&p, &inv, order)));
    }

    #[test]
    fn inv_sqrt_of_square((order, q) in (0usize..=40).prop_flat_map(|o| (Just(o), unit_series(o)))) {
        // 1/sqrt(q^2) = 1/q, so the recurrence must divide exactly
        let p = mul_trunc(&q, &q, order);
        let s = inv_sqrt_trunc(&p, order).unwrap();
        prop_assert_eq!(&s, &inverse_trunc(&q, order).unwrap());
        let s2p = mul_trunc(&mul_trunc(&s, &s, order), &p, order);
        prop_assert!(is_one(&s2p));
    }

    #[test]
    fn truncation_stability((order, p) in (1usize..=48).prop_flat_map(|o| (Just(o), unit_series(o))), cut in 0usize..48) {
        let m = cut % order;
        let high = inverse_trunc(&p, order).unwrap();
        let low = inverse_trunc(&p.truncate(m), m).unwrap();
        let cut_high = high.truncate(m);
        prop_assert_eq!(cut_high.coeffs(), low.coeffs());
    }

    #[test]
    fn bivariate_truncation_stability(
        terms in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
        (kx, ky) in (0usize..10, 0usize..10),
    ) {
        let terms: Vec<(usize, usize, i64)> = terms.into_iter().filter(|t| (t.0, t.1) != (0, 0)).chain([(0, 0, 1)]).collect();
        let d = TruncatedSeries2::from_terms(&terms, 12, 12);
        let high = bivariate_inverse_coeffs(&d, 12, 12).unwrap();
        let low = bivariate_inverse_coeffs(&d, kx, ky).unwrap();
        prop_assert_eq!(high.truncate(kx, ky), low.clone());
        let prod = mul_trunc2(&d, &low, kx, ky);
        for i in 0..=kx {
            for j in 0..=ky {
                prop_assert_eq!(prod.coeff(i, j), &BigInt::from(((i, j) == (0, 0)) as i64));
            }
        }
    }
}

#[test]
fn non_unit_constant_term_is_rejected() {
    let p = TruncatedSeries::from_i64(&[2, 1], 4);
    assert_eq!(inverse_trunc(&p, 4).unwrap_err(), Error::NonUnitConstantTerm);
    assert_eq!(inv_sqrt_trunc(&p, 4).unwrap_err(), Error::NonUnitConstantTerm);
    let d = TruncatedSeries2::from_terms(&[(0, 0, 3)], 2, 2);
    assert_eq!(bivariate_inverse_coeffs(&d, 2, 2).unwrap_err(), Error::NonUnitConstantTerm);
}
