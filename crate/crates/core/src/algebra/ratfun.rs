use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::poly::Poly;
use super::AlgebraError;

/// A ratio of Laurent polynomials in `g`, always held in canonical form.
///
/// Canonical form: the denominator is an ordinary polynomial with a positive
/// constant term and coprime integer coefficients, it shares no factor with
/// the numerator, and any power of `g` or rational scalar is carried by the
/// numerator. Two equal functions therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (ns, np) = num.split();
        let (ds, dp) = den.split();
        Ok(Self::from_parts(np, dp, ns - ds))
    }

    /// `g^shift * num / den` with `num(0), den(0)` nonzero.
    fn from_parts(num: Poly, den: Poly, shift: i64) -> Self {
        let common = num.gcd(&den);
        let (num, den) = if common.is_one() {
            (num, den)
        } else {
            (num.exact_div(&common), den.exact_div(&common))
        };
        let s = den.primitive_scale();
        let (num, den) = if s.is_one() {
            (num, den)
        } else {
            (num.scale(&s), den.scale(&s))
        };
        RationalFunction {
            num: LaurentPolynomial::from_poly(num, shift),
            den: LaurentPolynomial::from_poly(den, 0),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPolynomial::zero(),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction {
            num: LaurentPolynomial::constant(c),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Re-runs canonicalization; a no-op on any value this type hands out.
    pub fn reduce(&self) -> Self {
        Self::new(self.num.clone(), self.den.clone()).expect("canonical denominator is nonzero")
    }

    /// The scalar value if the function is constant, `None` otherwise.
    ///
    /// In canonical form a constant has denominator exactly `1`, so this is a
    /// structural test rather than a sampling heuristic.
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.den.as_constant().is_some_and(|d| d.is_one()) {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational, AlgebraError> {
        if x.is_zero() {
            return Err(AlgebraError::ZeroEvaluationPoint);
        }
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(AlgebraError::Pole);
        }
        Ok(self.num.eval(x)? / d)
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    fn denom_poly(&self) -> Poly {
        self.den.split().1
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (d1, d2) = (self.denom_poly(), rhs.denom_poly());
        let common = d1.gcd(&d2);
        let (c1, c2) = (d2.exact_div(&common), d1.exact_div(&common));
        let num = &(&self.num * &LaurentPolynomial::from_poly(c1.clone(), 0))
            + &(&rhs.num * &LaurentPolynomial::from_poly(c2, 0));
        let den = LaurentPolynomial::from_poly(d1.mul(&c1), 0);
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let (s1, n1) = self.num.split();
        let (s2, n2) = rhs.num.split();
        let (d1, d2) = (self.denom_poly(), rhs.denom_poly());
        // cross-cancel before multiplying
        let g1 = n1.gcd(&d2);
        let g2 = n2.gcd(&d1);
        let num = n1.exact_div(&g1).mul(&n2.exact_div(&g2));
        let den = d1.exact_div(&g2).mul(&d2.exact_div(&g1));
        RationalFunction::from_parts(num, den, s1 + s2)
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction, AlgebraError>;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> Self::Output {
        Ok(self * &rhs.recip()?)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::zero(), |acc, x| &acc + &x)
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        RationalFunction::new(p, LaurentPolynomial::one()).expect("unit denominator")
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        RationalFunction::constant(BigRational::from_integer(c.into()))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|d| d.is_one()) {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPolynomial| {
            if p.terms().count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}
