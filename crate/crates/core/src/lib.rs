//! Exact computation of partial Bell polynomials and weighted integer
//! compositions, by several independent strategies that cross-validate each
//! other symbolically and numerically.
//!
//! The building blocks:
//!
//! - [`ring`]: arbitrary-precision rationals and sparse multivariate
//!   polynomials under one commutative-ring contract.
//! - [`compositions`]: the total weight of `k`-part compositions of `n`
//!   under a finite-support weight function, by enumeration, the partition
//!   form, a convolution dynamic program, a compound-distribution
//!   recurrence, and a part-removal split.
//! - [`bell`]: partial Bell polynomials from the definition, through the
//!   composition bridge, and by six recurrence identities; plus the Stirling
//!   specialization.
//! - [`stochastic`]: exact distributions of sums of i.i.d. integer
//!   variables and their equivalence with composition weights.
//! - [`report`]: the identity-verification sweeps and the benchmark grid
//!   behind the `bellcomp` command-line tool.

pub mod bell;
pub mod compositions;
pub mod error;
pub mod report;
pub mod ring;
pub mod stochastic;

pub use error::Error;
pub use ring::poly::{Assignment, Monomial, MultiPoly};
pub use ring::Ring;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
