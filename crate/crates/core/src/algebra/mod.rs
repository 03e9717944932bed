//! Exact univariate algebra in the indeterminate `g`: Laurent polynomials
//! and rational functions over arbitrary-precision rationals.

mod laurent;
mod poly;
mod ratfun;

pub use laurent::LaurentPolynomial;
pub use num_rational::BigRational;
pub use ratfun::RationalFunction;

pub(crate) use laurent::pow_signed;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("evaluation point is a pole")]
    Pole,
    #[error("evaluation at g = 0 with negative powers present")]
    ZeroEvaluationPoint,
}
