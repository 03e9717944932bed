//! Chern numbers by localization at isolated fixed points.
//!
//! At a fixed point `p` the equivariant Chern class `c_k` restricts to
//! `sigma_k(w_p) t^k` and the equivariant Euler class of the normal bundle is
//! `prod_i w_{p,i} t^n`. The common power of `t` cancels, so integrating a
//! monomial `c_1^{j_1} ... c_n^{j_n}` reduces to the rational sum
//!
//! ```text
//! sum_p  prod_k sigma_k(w_p)^{j_k} / prod_i w_{p,i}.
//! ```
//!
//! For a monomial of degree `n` this is a Chern number; for lower degree the
//! push-forward lands in negative degree, so genuine data must give zero.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::model::{FixedPoint, FixedPointDataset, NProfile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalizationError {
    #[error("monomial {monomial} has {found} exponents, dataset has n = {n}")]
    Arity {
        monomial: String,
        found: usize,
        n: usize,
    },
    #[error("monomial {monomial} has degree {degree} > n = {n}")]
    DegreeTooHigh {
        monomial: String,
        degree: usize,
        n: usize,
    },
    #[error("check needs exactly 4 fixed points and n >= 4 (have {points} points, n = {n})")]
    FourPointRegime { points: usize, n: usize },
}

/// `c_1^{j_1} c_2^{j_2} ... c_n^{j_n}`, stored as the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernMonomial {
    exponents: Vec<u32>,
}

impl ChernMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        ChernMonomial { exponents }
    }

    /// The empty monomial `1` in `n` variables.
    pub fn unit(n: usize) -> Self {
        ChernMonomial {
            exponents: vec![0; n],
        }
    }

    /// `c_k` in `n` variables; `k = 0` gives the unit.
    pub fn class(n: usize, k: usize) -> Self {
        let mut m = Self::unit(n);
        if k > 0 {
            m.exponents[k - 1] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `sum_k k j_k`.
    pub fn degree(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(k, &j)| (k + 1) * j as usize)
            .sum()
    }

    pub fn times(&self, other: &ChernMonomial) -> ChernMonomial {
        ChernMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `m / c_1^2`, if `j_1 >= 2`.
    pub fn without_c1_squared(&self) -> Option<ChernMonomial> {
        let mut e = self.exponents.clone();
        e[0] = e.first()?.checked_sub(2)?;
        Some(ChernMonomial { exponents: e })
    }
}

impl fmt::Display for ChernMonomial {
    /// `c1^3c2`, or `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, &j) in self.exponents.iter().enumerate() {
            match j {
                0 => continue,
                1 => write!(f, "c{}", k + 1)?,
                _ => write!(f, "c{}^{j}", k + 1)?,
            }
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials in `n` Chern classes of the given degree, in decreasing
/// lexicographic order of exponent vectors (`c1^n` first, `cn` last).
pub fn monomials_of_degree(n: usize, degree: usize) -> Vec<ChernMonomial> {
    fn go(k: usize, n: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<ChernMonomial>) {
        if k == n {
            if left == 0 {
                out.push(ChernMonomial::new(cur.clone()));
            }
            return;
        }
        let weight = k + 1;
        for j in (0..=left / weight).rev() {
            cur.push(j as u32);
            go(k + 1, n, left - j * weight, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, degree, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Degree-`n` monomials: the Chern numbers of a `2n`-manifold.
pub fn chern_partitions(n: usize) -> Vec<ChernMonomial> {
    monomials_of_degree(n, n)
}

/// `(sigma_0, ..., sigma_n)` of the given integers.
pub fn elementary_symmetric(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (m, &v) in values.iter().enumerate() {
        let v = BigInt::from(v);
        for k in (1..=m + 1).rev() {
            let add = &e[k - 1] * &v;
            e[k] += add;
        }
    }
    e
}

/// `c_k|_p`, stripped of its power of `t`.
pub fn chern_class_at_point(p: &FixedPoint, k: usize) -> BigInt {
    elementary_symmetric(&p.weights)[k].clone()
}

/// Per-dataset cache of the restrictions `sigma_k(w_p)` and Euler classes.
pub(crate) struct Localizer<'a> {
    data: &'a FixedPointDataset,
    sigmas: Vec<Vec<BigInt>>,
}

impl<'a> Localizer<'a> {
    pub fn new(data: &'a FixedPointDataset) -> Self {
        let sigmas = data
            .points()
            .iter()
            .map(|p| elementary_symmetric(&p.weights))
            .collect();
        Localizer { data, sigmas }
    }

    fn validate(&self, m: &ChernMonomial) -> Result<(), LocalizationError> {
        let n = self.data.n();
        if m.exponents.len() != n {
            return Err(LocalizationError::Arity {
                monomial: m.to_string(),
                found: m.exponents.len(),
                n,
            });
        }
        if m.degree() > n {
            return Err(LocalizationError::DegreeTooHigh {
                monomial: m.to_string(),
                degree: m.degree(),
                n,
            });
        }
        Ok(())
    }

    pub fn integrate(&self, m: &ChernMonomial) -> Result<BigRational, LocalizationError> {
        self.validate(m)?;
        let n = self.data.n();
        let mut total = BigRational::zero();
        for s in &self.sigmas {
            let mut num = BigInt::one();
            for (k, &j) in m.exponents.iter().enumerate() {
                if j > 0 {
                    num *= num_traits::pow(s[k + 1].clone(), j as usize);
                }
            }
            if !num.is_zero() {
                total += BigRational::new(num, s[n].clone());
            }
        }
        Ok(total)
    }
}

/// Localization sum for `m` over the fixed points of `d`.
pub fn abbv_integrate(d: &FixedPointDataset, m: &ChernMonomial) -> Result<BigRational, LocalizationError> {
    Localizer::new(d).integrate(m)
}

/// Chern numbers over all degree-`n` monomials, in [`chern_partitions`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernTable {
    entries: Vec<(ChernMonomial, BigRational)>,
}

impl ChernTable {
    pub fn from_entries(entries: Vec<(ChernMonomial, BigRational)>) -> Self {
        ChernTable { entries }
    }

    pub fn entries(&self) -> &[(ChernMonomial, BigRational)] {
        &self.entries
    }

    pub fn get(&self, exponents: &[u32]) -> Option<&BigRational> {
        self.entries
            .iter()
            .find(|(m, _)| m.exponents() == exponents)
            .map(|(_, v)| v)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn chern_table(d: &FixedPointDataset) -> ChernTable {
    let loc = Localizer::new(d);
    let entries = chern_partitions(d.n())
        .into_iter()
        .map(|m| {
            let v = loc.integrate(&m).expect("partitions of n are admissible");
            (m, v)
        })
        .collect();
    ChernTable { entries }
}

/// A monomial whose localization sum has the wrong value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialViolation {
    pub monomial: ChernMonomial,
    pub value: BigRational,
}

/// Entries of the table that are not integers.
pub fn integrality_check(t: &ChernTable) -> Vec<MonomialViolation> {
    t.entries
        .iter()
        .filter(|(_, v)| !v.is_integer())
        .map(|(m, v)| MonomialViolation {
            monomial: m.clone(),
            value: v.clone(),
        })
        .collect()
}

/// Monomials of degree `< n` whose localization sum is nonzero.
pub fn vanishing_check(d: &FixedPointDataset) -> Vec<MonomialViolation> {
    let loc = Localizer::new(d);
    (0..d.n())
        .flat_map(|deg| monomials_of_degree(d.n(), deg))
        .filter_map(|m| {
            let v = loc.integrate(&m).expect("degree below n");
            (!v.is_zero()).then_some(MonomialViolation { monomial: m, value: v })
        })
        .collect()
}

/// With four fixed points and `n >= 4`, every Chern number divisible by
/// `c_1^2` vanishes. Returns the degree-`n` monomials with `j_1 >= 2` whose
/// sums are nonzero.
pub fn c1sq_divisibility_check(d: &FixedPointDataset) -> Result<Vec<MonomialViolation>, LocalizationError> {
    if d.len() != 4 || d.n() < 4 {
        return Err(LocalizationError::FourPointRegime {
            points: d.len(),
            n: d.n(),
        });
    }
    let loc = Localizer::new(d);
    Ok(c1sq_monomials(d.n())
        .into_iter()
        .filter_map(|m| {
            let v = loc.integrate(&m).expect("partition of n");
            (!v.is_zero()).then_some(MonomialViolation { monomial: m, value: v })
        })
        .collect())
}

/// Degree-`n` monomials with `j_1 >= 2`.
pub fn c1sq_monomials(n: usize) -> Vec<ChernMonomial> {
    chern_partitions(n)
        .into_iter()
        .filter(|m| m.exponents()[0] >= 2)
        .collect()
}

/// `sum_i N_i [6 i (i - 1) + (5n - 3n^2)/2]`, the closed form of
/// `int c_1 c_{n-1}` in terms of the negative-weight counts.
pub fn gs_chern_number(profile: &NProfile, n: usize) -> BigInt {
    let n_q = BigRational::from_integer(BigInt::from(n));
    let offset = (BigRational::from_integer(5.into()) * &n_q
        - BigRational::from_integer(3.into()) * &n_q * &n_q)
        / BigRational::from_integer(2.into());
    let total: BigRational = profile
        .counts()
        .iter()
        .enumerate()
        .map(|(i, &count)| {
            let i = BigInt::from(i);
            let bracket = BigRational::from_integer(BigInt::from(6) * &i * (&i - 1)) + &offset;
            bracket * BigRational::from_integer(count.into())
        })
        .sum();
    assert!(total.is_integer(), "closed form produced non-integer {total}");
    total.to_integer()
}

/// `c_1 c_{n-1}` in `n` variables (`c_1` itself when `n = 1`).
pub fn c1_cn_minus_1(n: usize) -> ChernMonomial {
    ChernMonomial::class(n, 1).times(&ChernMonomial::class(n, n - 1))
}

/// Localization value of `c_1 c_{n-1}` against the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsComparison {
    pub localized: BigRational,
    pub closed_form: BigInt,
}

impl GsComparison {
    pub fn passes(&self) -> bool {
        self.localized == BigRational::from_integer(self.closed_form.clone())
    }
}

pub fn gs_cross_check(d: &FixedPointDataset) -> GsComparison {
    let m = c1_cn_minus_1(d.n());
    GsComparison {
        localized: abbv_integrate(d, &m).expect("degree-n monomial"),
        closed_form: gs_chern_number(&d.n_profile(), d.n()),
    }
}
