//! Exact rational and Laurent-polynomial arithmetic, plus the variable
//! conversions `q = A^4`, `d = -A^2 - A^-2`, `Q = q + 2 + q^-1 = d^2`.

mod laurent;
mod parse;

pub use laurent::{Laurent, Var};
pub use parse::{parse_laurent, parse_rational};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Coefficient field for every algebra in this crate.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),
    #[error("no conversion path from {0} to {1}")]
    NoConversion(Var, Var),
    #[error("substitution of a non-monomial image into negative exponents")]
    NegativeExponent,
    #[error("evaluation at 0 with negative exponents present")]
    EvalAtZero,
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
}
