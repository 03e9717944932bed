#![allow(clippy::eq_op)]

use fixloc::algebra::{AlgebraError, BigRational, LaurentPolynomial, RationalFunction};
use num_bigint::BigInt;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-3i64..=3, prop::collection::vec(-50i64..=50, 1..=6)).prop_map(|(low, cs)| {
        LaurentPolynomial::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(k, c)| (low + k as i64, BigRational::from_integer(c.into()))),
        )
    })
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPolynomial> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = BigRational> {
    (1i64..=40, 41i64..=97).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_commutes_and_associates(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverses(a in ratfun()) {
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &RationalFunction::zero(), a.clone());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!((&a / &a).unwrap(), RationalFunction::one());
            prop_assert_eq!(a.recip().unwrap().recip().unwrap(), a.clone());
        } else {
            prop_assert_eq!(a.recip(), Err(AlgebraError::ZeroDenominator));
        }
    }

    #[test]
    fn canonical_form_is_unique(n in laurent(), d in nonzero_laurent(), h in nonzero_laurent()) {
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(f.reduce(), f.clone());
        prop_assert_eq!(RationalFunction::new(&n * &h, &d * &h).unwrap(), f.clone());
        // the denominator is an ordinary polynomial with positive constant term
        if !f.is_zero() {
            prop_assert_eq!(f.denom().min_exponent(), Some(0));
            prop_assert!(f.denom().coeff(0) > BigRational::from_integer(0.into()));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfun(), b in ratfun(), x in point()) {
        let (Ok(ax), Ok(bx)) = (a.eval(&x), b.eval(&x)) else {
            return Ok(());
        };
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ax + &bx);
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ax * &bx);
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), x in point()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
        let shifted = a.shift(3);
        prop_assert_eq!(shifted.shift(-3), a.clone());
    }
}
