//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type ExactScalar = BigRational;

pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> ExactScalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> ExactScalar {
    BigRational::zero()
}

pub fn one() -> ExactScalar {
    BigRational::one()
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn to_string(x: &ExactScalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
