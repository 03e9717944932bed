//! Coefficients of the Hirzebruch `chi_y`-genus from fixed-point weights.
//!
//! For isolated fixed points,
//!
//! ```text
//! chi^i(M) = sum_p  sigma_i(g^{w_p1}, ..., g^{w_pn}) / prod_j (1 - g^{w_pj})
//! ```
//!
//! where `g` is an indeterminate. For genuine manifold data each sum reduces
//! to the integer `(-1)^i N_i`; anything else is a certification failure and
//! is reported as a value, never as an error.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{pow_signed, AlgebraError, LaurentPolynomial, RationalFunction};
use crate::model::{FixedPoint, FixedPointDataset};
use crate::subsets::for_each_subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("chi^{index} does not reduce to an integer: {value}")]
    NotInteger { index: usize, value: String },
}

/// The summand contributed by one fixed point to `chi^i`.
pub fn chi_term(p: &FixedPoint, i: usize) -> RationalFunction {
    let mut exps = Vec::new();
    for_each_subset(p.weights.len(), i, |s| {
        exps.push(s.iter().map(|&k| p.weights[k]).sum::<i64>());
    });
    let num = LaurentPolynomial::from_terms(exps.into_iter().map(|e| (e, BigRational::one())));
    let den = p.weights.iter().fold(LaurentPolynomial::one(), |acc, &w| {
        &acc * &(&LaurentPolynomial::one() - &LaurentPolynomial::g_pow(w))
    });
    RationalFunction::new(num, den).expect("nonzero weights give a nonzero denominator")
}

/// The reduced sum of [`chi_term`] over all fixed points.
pub fn chi_sum(d: &FixedPointDataset, i: usize) -> RationalFunction {
    d.points().iter().map(|p| chi_term(p, i)).sum()
}

/// Direct evaluation of the unreduced sum at `g = x`, term by term.
pub fn chi_sum_at(d: &FixedPointDataset, i: usize, x: &BigRational) -> Result<BigRational, AlgebraError> {
    if x.is_zero() {
        return Err(AlgebraError::ZeroEvaluationPoint);
    }
    let mut total = BigRational::zero();
    for p in d.points() {
        let powers: Vec<BigRational> = p.weights.iter().map(|&w| pow_signed(x, w)).collect();
        let mut den = BigRational::one();
        for xp in &powers {
            den *= BigRational::one() - xp;
        }
        if den.is_zero() {
            return Err(AlgebraError::Pole);
        }
        let mut num = BigRational::zero();
        for_each_subset(powers.len(), i, |s| {
            num += s.iter().fold(BigRational::one(), |acc, &k| acc * &powers[k]);
        });
        total += num / den;
    }
    Ok(total)
}

/// Outcome of reducing one `chi^i` sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiValue {
    Integer(BigInt),
    NonInteger(BigRational),
    NonConstant(RationalFunction),
}

impl ChiValue {
    fn classify(f: RationalFunction) -> Self {
        match f.constant_value() {
            Some(c) if c.is_integer() => ChiValue::Integer(c.to_integer()),
            Some(c) => ChiValue::NonInteger(c),
            None => ChiValue::NonConstant(f),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            ChiValue::Integer(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Integer(v) => write!(f, "{v}"),
            ChiValue::NonInteger(v) => write!(f, "{v} (not an integer)"),
            ChiValue::NonConstant(r) => write!(f, "{r} (not constant)"),
        }
    }
}

pub fn chi_number(d: &FixedPointDataset, i: usize) -> ChiValue {
    ChiValue::classify(chi_sum(d, i))
}

/// `(chi^0, ..., chi^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiVector {
    values: Vec<ChiValue>,
}

impl ChiVector {
    pub fn values(&self) -> &[ChiValue] {
        &self.values
    }

    pub fn constancy_ok(&self, i: usize) -> bool {
        matches!(self.values[i], ChiValue::Integer(_))
    }

    /// All coefficients, if every one reduced to an integer.
    pub fn integers(&self) -> Result<Vec<BigInt>, GenusError> {
        self.values
            .iter()
            .enumerate()
            .map(|(index, v)| {
                v.as_integer().cloned().ok_or_else(|| GenusError::NotInteger {
                    index,
                    value: v.to_string(),
                })
            })
            .collect()
    }

    pub fn todd_genus(&self) -> Result<BigInt, GenusError> {
        self.integers().map(|v| v[0].clone())
    }

    /// `chi_{-1}`, the Euler characteristic.
    pub fn euler_number(&self) -> Result<BigInt, GenusError> {
        let v = self.integers()?;
        Ok(v.iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum())
    }

    /// `chi_1`, the signature.
    pub fn signature(&self) -> Result<BigInt, GenusError> {
        Ok(self.integers()?.into_iter().sum())
    }
}

pub fn chi_vector(d: &FixedPointDataset) -> ChiVector {
    let values = (0..=d.n())
        .into_par_iter()
        .map(|i| chi_number(d, i))
        .collect();
    ChiVector { values }
}

pub fn todd_genus(d: &FixedPointDataset) -> Result<BigInt, GenusError> {
    match chi_number(d, 0) {
        ChiValue::Integer(v) => Ok(v),
        other => Err(GenusError::NotInteger {
            index: 0,
            value: other.to_string(),
        }),
    }
}

pub fn euler_number(d: &FixedPointDataset) -> Result<BigInt, GenusError> {
    chi_vector(d).euler_number()
}

pub fn signature(d: &FixedPointDataset) -> Result<BigInt, GenusError> {
    chi_vector(d).signature()
}

/// A failure of the relations tying `chi^i` to the negative-weight counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiViolation {
    /// `chi^i` is not a constant integer.
    NotInteger { index: usize, value: String },
    /// `chi^i != (-1)^i N_i`.
    Mismatch { index: usize, chi: BigInt, expected: BigInt },
    /// `(-1)^i chi^i < 0`.
    Negative { index: usize, value: BigInt },
    /// `(-1)^i chi^i != (-1)^{n-i} chi^{n-i}`, or `N_i != N_{n-i}`.
    Asymmetric { index: usize, left: BigInt, right: BigInt },
    /// `sum_i (-1)^i chi^i` differs from the number of fixed points.
    Total { sum: BigInt, points: usize },
}

impl fmt::Display for ChiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiViolation::NotInteger { index, value } => {
                write!(f, "chi^{index} = {value} is not a constant integer")
            }
            ChiViolation::Mismatch { index, chi, expected } => {
                write!(f, "chi^{index} = {chi} but (-1)^{index} N_{index} = {expected}")
            }
            ChiViolation::Negative { index, value } => {
                write!(f, "a_{index} = {value} is negative")
            }
            ChiViolation::Asymmetric { index, left, right } => {
                write!(f, "a_{index} = {left} differs from its mirror {right}")
            }
            ChiViolation::Total { sum, points } => {
                write!(f, "sum of a_i is {sum} but there are {points} fixed points")
            }
        }
    }
}

/// Checks `chi^i = (-1)^i N_i` and, with `a_i = (-1)^i chi^i`, that
/// `a_i >= 0`, `a_i = a_{n-i}` and `sum a_i` is the number of fixed points.
pub fn check_chi_structure(d: &FixedPointDataset) -> Vec<ChiViolation> {
    check_chi_structure_with(d, &chi_vector(d))
}

pub fn check_chi_structure_with(d: &FixedPointDataset, chi: &ChiVector) -> Vec<ChiViolation> {
    let n = d.n();
    let profile = d.n_profile();
    let mut out = Vec::new();
    let mut a: Vec<Option<BigInt>> = Vec::with_capacity(n + 1);
    for (i, v) in chi.values().iter().enumerate() {
        let sign = |x: BigInt| if i % 2 == 0 { x } else { -x };
        match v.as_integer() {
            Some(c) => {
                let expected = sign(BigInt::from(profile.counts()[i]));
                if *c != expected {
                    out.push(ChiViolation::Mismatch {
                        index: i,
                        chi: c.clone(),
                        expected,
                    });
                }
                let ai = sign(c.clone());
                if ai.is_negative() {
                    out.push(ChiViolation::Negative {
                        index: i,
                        value: ai.clone(),
                    });
                }
                a.push(Some(ai));
            }
            None => {
                out.push(ChiViolation::NotInteger {
                    index: i,
                    value: v.to_string(),
                });
                a.push(None);
            }
        }
    }
    for i in 0..=n / 2 {
        let j = n - i;
        if i == j {
            continue;
        }
        if let (Some(l), Some(r)) = (&a[i], &a[j]) {
            if l != r {
                out.push(ChiViolation::Asymmetric {
                    index: i,
                    left: l.clone(),
                    right: r.clone(),
                });
            }
        }
        let (ni, nj) = (profile.counts()[i], profile.counts()[j]);
        if ni != nj && a[i].is_none() {
            out.push(ChiViolation::Asymmetric {
                index: i,
                left: ni.into(),
                right: nj.into(),
            });
        }
    }
    if a.iter().all(Option::is_some) {
        let sum: BigInt = a.iter().flatten().sum();
        if sum != BigInt::from(d.len()) {
            out.push(ChiViolation::Total {
                sum,
                points: d.len(),
            });
        }
    }
    out
}
