//! Exact scalar and polynomial arithmetic shared by every other module.
//!
//! Two coefficient domains are supported: arbitrary-precision rationals
//! ([`BigRational`]) and sparse multivariate polynomials over them
//! ([`poly::MultiPoly`]). Both satisfy one commutative-ring contract
//! ([`Ring`]), so the composition and Bell strategies are written once,
//! generically, and run unchanged in numeric or symbolic mode.

pub mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// Commutative-ring contract satisfied by [`BigRational`] and
/// [`poly::MultiPoly`].
///
/// The one partial operation is [`Ring::div_rational`]: exact division by a
/// nonzero rational scalar, which is all the recurrences in this crate ever
/// divide by.
pub trait Ring: Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Embed a rational scalar into the ring.
    fn from_rational(q: BigRational) -> Self;
    /// Inverse of [`Ring::from_rational`] where defined: `Some` exactly when
    /// the value is a scalar.
    fn as_rational(&self) -> Option<BigRational>;
    /// Exact division by a nonzero rational scalar.
    fn div_rational(&self, q: &BigRational) -> Result<Self, Error>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// Multiply by a rational scalar.
    fn scale(&self, q: &BigRational) -> Self {
        self.mul(&Self::from_rational(q.clone()))
    }

    /// Nonnegative integer power; `pow(0)` is one.
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn div_rational(&self, q: &BigRational) -> Result<Self, Error> {
        if Zero::is_zero(q) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / q)
    }

    fn scale(&self, q: &BigRational) -> Self {
        self * q
    }
}

/// Rational with value `n`.
pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rational `n/d`. Panics if `d` is zero.
pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact integer-valued rational.
///
/// Out-of-range `k` (negative or above `n`) gives 0.
pub fn binomial(n: u32, k: i64) -> BigRational {
    if k < 0 || k > i64::from(n) {
        return Zero::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Each intermediate value is C(n, i+1) scaled, so the division is exact.
        acc = acc * (n - i) / (i + 1);
    }
    BigRational::from_integer(acc)
}

/// Multinomial coefficient `k! / (parts[0]! * parts[1]! * ...)`.
///
/// The parts must sum to `k`.
pub fn multinomial(k: u32, parts: &[u32]) -> Result<BigRational, Error> {
    let sum: u64 = parts.iter().map(|&p| u64::from(p)).sum();
    if sum != u64::from(k) {
        return Err(Error::MultinomialParts {
            expected: k,
            actual: sum.min(u64::from(u32::MAX)) as u32,
        });
    }
    let mut denom = BigInt::one();
    for &p in parts {
        denom *= factorial(p);
    }
    Ok(BigRational::new(factorial(k), denom))
}
