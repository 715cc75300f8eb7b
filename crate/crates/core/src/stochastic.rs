//! Exact distributions of sums of i.i.d. nonnegative integer-valued random
//! variables, and the bridge between those distributions and composition
//! weights: normalizing a positive weight function `f` by its total mass
//! turns the total composition weight into `total^k` times the probability
//! that `k` independent draws sum to `n`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{weight_by_convolution, WeightFunction};
use crate::error::Error;

/// Exact probability mass function on the nonnegative integers.
///
/// Stored masses are strictly positive and sum to exactly 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pmf {
    mass: BTreeMap<u32, BigRational>,
}

impl Pmf {
    /// Build from `(outcome, mass)` pairs. Zero masses are dropped; negative
    /// masses and totals other than 1 are rejected.
    pub fn from_masses<I: IntoIterator<Item = (u32, BigRational)>>(
        masses: I,
    ) -> Result<Self, Error> {
        let mut mass = BTreeMap::new();
        let mut total = BigRational::zero();
        for (s, m) in masses {
            if m.is_negative() {
                return Err(Error::NonPositiveWeight { part: s });
            }
            if m.is_zero() {
                continue;
            }
            total += &m;
            *mass.entry(s).or_insert_with(BigRational::zero) += m;
        }
        if !total.is_one() {
            return Err(Error::MassNotNormalized);
        }
        Ok(Pmf { mass })
    }

    /// The distribution concentrated on one outcome.
    pub fn point(s: u32) -> Self {
        let mut mass = BTreeMap::new();
        mass.insert(s, BigRational::one());
        Pmf { mass }
    }

    /// `P[X = s]`, zero off the support.
    pub fn mass(&self, s: u32) -> BigRational {
        self.mass.get(&s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.mass.iter().map(|(&s, m)| (s, m))
    }

    pub fn min_outcome(&self) -> Option<u32> {
        self.mass.keys().next().copied()
    }

    pub fn max_outcome(&self) -> Option<u32> {
        self.mass.keys().next_back().copied()
    }

    /// Sum of all masses; exactly 1 by construction, exposed for checks.
    pub fn total(&self) -> BigRational {
        self.mass.values().sum()
    }

    /// Distribution of `X + Y` for independent `X ~ self`, `Y ~ other`.
    pub fn convolve(&self, other: &Self) -> Self {
        let mut mass: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (sa, ma) in &self.mass {
            for (sb, mb) in &other.mass {
                *mass.entry(sa + sb).or_insert_with(BigRational::zero) += ma * mb;
            }
        }
        Pmf { mass }
    }
}

impl std::fmt::Display for Pmf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (idx, (s, m)) in self.mass.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}: {m}")?;
        }
        write!(f, "}}")
    }
}

/// A weight function rewritten as a probability distribution plus the scale
/// factor that undoes the normalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedWeight {
    pub pmf: Pmf,
    /// Sum of all weights; multiplied back in [`weight_from_pmf`].
    pub total: BigRational,
}

/// Normalize a finite positive rational weight function into a [`Pmf`] and
/// its total mass, so that `pmf(s) * total = f(s)` pointwise.
pub fn normalize(f: &WeightFunction<BigRational>) -> Result<NormalizedWeight, Error> {
    if f.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut total = BigRational::zero();
    for (s, v) in f.support() {
        if !v.is_positive() {
            return Err(Error::NonPositiveWeight { part: s });
        }
        total += v;
    }
    let mass = f.support().map(|(s, v)| (s, v / &total)).collect();
    Ok(NormalizedWeight { pmf: Pmf { mass }, total })
}

/// Distribution of the sum of `k` i.i.d. draws from `g`; `k = 0` is the
/// point mass at 0 (the empty sum).
pub fn sum_pmf(g: &Pmf, k: u32) -> Pmf {
    let mut acc = Pmf::point(0);
    for _ in 0..k {
        acc = acc.convolve(g);
    }
    acc
}

/// Recover the total composition weight from the normalized distribution:
/// `total^k * P[X_1 + ... + X_k = n]`.
///
/// The exponent is `k`, one factor of `total` per summand; see the crate's
/// verify suite, which confirms this against the enumeration oracle and
/// refutes the exponent `n`.
pub fn weight_from_pmf(g: &Pmf, total: &BigRational, k: u32, n: u32) -> BigRational {
    let scale = num_traits::pow::Pow::pow(total, u64::from(k));
    sum_pmf(g, k).mass(n) * scale
}

/// The converse reading: when `f` is itself a probability mass function, the
/// probability that `k` i.i.d. draws sum to `n` is the total composition
/// weight, computed here with the convolution dynamic program and asserted
/// against the direct k-fold self-convolution.
pub fn pmf_of_weighted_sum(
    f: &WeightFunction<BigRational>,
    k: u32,
    n: u32,
) -> Result<BigRational, Error> {
    let mut total = BigRational::zero();
    for (s, v) in f.support() {
        if !v.is_positive() {
            return Err(Error::NonPositiveWeight { part: s });
        }
        total += v;
    }
    if !total.is_one() {
        return Err(Error::MassNotNormalized);
    }
    let weight = weight_by_convolution(f, k, n);
    let pmf = Pmf {
        mass: f.support().map(|(s, v)| (s, v.clone())).collect(),
    };
    assert_eq!(
        weight,
        sum_pmf(&pmf, k).mass(n),
        "composition weight and k-fold convolution disagree"
    );
    Ok(weight)
}
