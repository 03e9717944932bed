#![allow(dead_code)]

use fixloc::algebra::{BigRational, LaurentPolynomial, RationalFunction};
use fixloc::FixedPointDataset;
use num_bigint::BigInt;
use rand::Rng;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Laurent polynomial with span at most `max_deg`, lowest exponent in
/// `-3..=3`, integer coefficients in `[-c, c]`.
pub fn laurent<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> LaurentPolynomial {
    let low = rng.gen_range(-3..=3i64);
    let len = rng.gen_range(0..=max_deg) as i64 + 1;
    LaurentPolynomial::from_terms((0..len).map(|k| (low + k, q(rng.gen_range(-c..=c)))))
}

pub fn nonzero_laurent<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> LaurentPolynomial {
    loop {
        let p = laurent(rng, max_deg, c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn ratfun<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> RationalFunction {
    RationalFunction::new(laurent(rng, max_deg, c), nonzero_laurent(rng, max_deg, c)).unwrap()
}

pub fn dataset<R: Rng>(rng: &mut R, max_n: usize, max_points: usize, bound: i64) -> FixedPointDataset {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=max_points);
    let weights = (0..k)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let w = rng.gen_range(1..=bound);
                    if rng.gen_bool(0.5) {
                        w
                    } else {
                        -w
                    }
                })
                .collect()
        })
        .collect();
    FixedPointDataset::new(n, weights, None).unwrap()
}

pub fn scaled(d: &FixedPointDataset, c: i64) -> FixedPointDataset {
    let w = d
        .weight_vectors()
        .into_iter()
        .map(|v| v.into_iter().map(|x| x * c).collect())
        .collect();
    FixedPointDataset::new(d.n(), w, None).unwrap()
}

/// A point of `(0, 1]` avoiding poles and zero.
pub fn eval_point<R: Rng>(rng: &mut R) -> BigRational {
    let d = rng.gen_range(2..=97i64);
    qq(rng.gen_range(1..d), d)
}
