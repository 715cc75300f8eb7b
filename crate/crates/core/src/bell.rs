//! Partial Bell polynomials `B(n, k)` in the indeterminates
//! `x1 ... x_{n-k+1}`, computed symbolically by several independent
//! strategies.
//!
//! [`direct`] expands the defining sum over part multiplicities and serves as
//! the reference value. The other strategies reach the same polynomial
//! through the composition-weight bridge or through recurrences, which is
//! what the `verify` machinery and the test suites exploit: all of them must
//! agree term for term, with exact coefficients.
//!
//! Boundary conventions used throughout: `B(0, 0) = 1`, `B(n, 0) = 0` for
//! `n > 0`, and `B(n, k) = 0` for `k > n`.

use std::collections::HashMap;
use std::str::FromStr;

use num_rational::BigRational;

use crate::compositions::{weight_by_convolution, weight_by_enumeration, WeightFunction};
use crate::error::Error;
use crate::ring::poly::{Monomial, MultiPoly};
use crate::ring::{binomial, factorial, int, ratio};

/// The weight function whose total composition weight reproduces `B(n, k)`
/// up to the factor `n!/k!`: part size `s` weighs `x_s / s!` for
/// `1 <= s <= n - k + 1` and nothing weighs anything else.
///
/// At `n = k = 0` the support is taken empty; the weight of the single empty
/// composition is 1 regardless of `f`.
pub fn corollary1_weight(n: u32, k: u32) -> Result<WeightFunction<MultiPoly>, Error> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    if n == 0 {
        return Ok(WeightFunction::new());
    }
    Ok(WeightFunction::from_pairs((1..=n - k + 1).map(|s| {
        let weight = MultiPoly::indeterminate(s)
            .scale(&BigRational::new(1.into(), factorial(s)));
        (s, weight)
    })))
}

/// `B(n, k)` from the definition: a sum over all multisets of part sizes
/// `1..=n-k+1` with `k` parts totalling `n`, each contributing
/// `n! / prod(l_s! * (s!)^l_s)` times `prod x_s^l_s`.
pub fn direct(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    if k == 0 {
        return if n == 0 { MultiPoly::one() } else { MultiPoly::zero() };
    }
    let parts: Vec<u32> = (1..=n - k + 1).collect();
    let n_factorial = factorial(n);
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    crate::compositions::for_each_part_count(&parts, k, n, &mut |counts| {
        let mut denom = num_bigint::BigInt::from(1);
        for &(s, l) in counts {
            denom *= factorial(l) * factorial(s).pow(l);
        }
        let coeff = BigRational::new(n_factorial.clone(), denom);
        let monomial = Monomial::from_exponents(counts.iter().copied());
        terms.push((monomial, coeff));
    });
    MultiPoly::from_terms(terms)
}

/// `B(n, k)` through the composition bridge: `n!/k!` times the total weight
/// of the `k`-part compositions of `n` under [`corollary1_weight`], computed
/// with the convolution dynamic program.
pub fn from_compositions(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    let f = corollary1_weight(n, k).expect("k <= n");
    weight_by_convolution(&f, k, n).scale(&BigRational::new(factorial(n), factorial(k)))
}

/// `B(n, k)` by the recurrence that lowers `n` at fixed `k`:
///
/// `B(n,k) = 1/x1 * 1/(n-k) * sum_a C(n,a) [(k+1) - (n+1)/(a+1)] x_{a+1} B(n-a,k)`
///
/// The `1/x1` is performed as exact polynomial factor extraction after the
/// sum, never as rational-function arithmetic. Requires `n >= k >= 1`; the
/// recursion bottoms out at `B(k, k) = x1^k`.
pub fn identity1(n: u32, k: u32) -> Result<MultiPoly, Error> {
    if k < 1 || n < k {
        return Err(Error::PrefactorUndefined { n, k });
    }
    // values[m - k] = B(m, k), built upward from the base case.
    let mut values: Vec<MultiPoly> = vec![MultiPoly::indeterminate(1).pow(k)];
    for m in (k + 1)..=n {
        let mut sum = MultiPoly::zero();
        for alpha in 1..=(m - k) {
            let scalar =
                binomial(m, i64::from(alpha)) * (int(k + 1) - ratio(m + 1, alpha + 1));
            if num_traits::Zero::is_zero(&scalar) {
                continue;
            }
            let sub = &values[(m - alpha - k) as usize];
            sum = sum.add(
                &sub.mul_monomial(&Monomial::indeterminate(alpha + 1))
                    .scale(&scalar),
            );
        }
        let divided = sum.scale_div(&int(m - k))?;
        values.push(divided.extract_factor(1)?);
    }
    Ok(values.pop().expect("base case is always present"))
}

/// `B(n, k1 + k2)` by the two-way split
/// `k1! k2! / (k1+k2)! * sum_a C(n, a) B(a, k1) B(n-a, k2)`,
/// with both factors taken from [`direct`].
pub fn identity2(n: u32, k1: u32, k2: u32) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for alpha in 0..=n {
        let left = direct(alpha, k1);
        if left.is_zero() {
            continue;
        }
        let right = direct(n - alpha, k2);
        if right.is_zero() {
            continue;
        }
        sum = sum.add(&left.mul(&right).scale(&binomial(n, i64::from(alpha))));
    }
    sum.scale(&BigRational::new(
        factorial(k1) * factorial(k2),
        factorial(k1 + k2),
    ))
}

/// `B(n, k + 1)` as one closed `k`-fold nested sum over strictly decreasing
/// index chains `n > a_1 > a_2 > ... > a_k >= 1` with `a_1 >= k`:
/// each chain contributes the product of the chained binomials and the
/// indeterminates indexed by consecutive differences, all divided by `(k+1)!`.
///
/// For `k = 0` the empty chain leaves the single term `x_n`.
pub fn identity3(n: u32, k: u32) -> MultiPoly {
    if k + 1 > n {
        return MultiPoly::zero();
    }
    if k == 0 {
        return MultiPoly::indeterminate(n);
    }
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    fn chains(
        prev: u32,
        level: u32,
        k: u32,
        coeff: BigRational,
        mono: Monomial,
        terms: &mut Vec<(Monomial, BigRational)>,
    ) {
        // At `level` the chain value must leave room for the remaining
        // strictly decreasing picks, hence the lower bound k - level + 1.
        for alpha in (k - level + 1)..=(prev - 1) {
            let c = &coeff * binomial(prev, i64::from(alpha));
            let m = mono.mul(&Monomial::indeterminate(prev - alpha));
            if level == k {
                terms.push((m.mul(&Monomial::indeterminate(alpha)), c));
            } else {
                chains(alpha, level + 1, k, c, m, terms);
            }
        }
    }
    chains(n, 1, k, int(1), Monomial::unit(), &mut terms);
    MultiPoly::from_terms(terms)
        .scale(&BigRational::new(1.into(), factorial(k + 1)))
}

/// `B(n, k)` by the recurrence `B(n,k) = 1/k * sum_a C(n,a) x_a B(n-a, k-1)`,
/// recursed down to `B(m, 0) = [m = 0]`. Rejects `k = 0`, where the `1/k`
/// prefactor does not exist.
pub fn identity4(n: u32, k: u32) -> Result<MultiPoly, Error> {
    if k == 0 {
        return Err(Error::PrefactorUndefined { n, k });
    }
    fn go(n: u32, k: u32, memo: &mut HashMap<(u32, u32), MultiPoly>) -> MultiPoly {
        if k == 0 {
            return if n == 0 { MultiPoly::one() } else { MultiPoly::zero() };
        }
        if k > n {
            return MultiPoly::zero();
        }
        if let Some(hit) = memo.get(&(n, k)) {
            return hit.clone();
        }
        let mut sum = MultiPoly::zero();
        for alpha in 1..=(n - k + 1) {
            let sub = go(n - alpha, k - 1, memo);
            if sub.is_zero() {
                continue;
            }
            sum = sum.add(
                &sub.mul_monomial(&Monomial::indeterminate(alpha))
                    .scale(&binomial(n, i64::from(alpha))),
            );
        }
        let value = sum.scale(&ratio(1, k));
        memo.insert((n, k), value.clone());
        value
    }
    Ok(go(n, k, &mut HashMap::new()))
}

/// `B(n, k)` by the recurrence pinned to the part containing the first
/// element: `B(n,k) = sum_a C(n-1, a-1) x_a B(n-a, k-1)`. Rejects `k = 0`
/// and `n = 0`, where the recurrence does not apply.
pub fn identity5(n: u32, k: u32) -> Result<MultiPoly, Error> {
    if k == 0 || n == 0 {
        return Err(Error::PrefactorUndefined { n, k });
    }
    fn go(n: u32, k: u32, memo: &mut HashMap<(u32, u32), MultiPoly>) -> MultiPoly {
        if k == 0 {
            return if n == 0 { MultiPoly::one() } else { MultiPoly::zero() };
        }
        if k > n {
            return MultiPoly::zero();
        }
        if let Some(hit) = memo.get(&(n, k)) {
            return hit.clone();
        }
        let mut sum = MultiPoly::zero();
        for alpha in 1..=(n - k + 1) {
            let sub = go(n - alpha, k - 1, memo);
            if sub.is_zero() {
                continue;
            }
            sum = sum.add(
                &sub.mul_monomial(&Monomial::indeterminate(alpha))
                    .scale(&binomial(n - 1, i64::from(alpha) - 1)),
            );
        }
        memo.insert((n, k), sum.clone());
        sum
    }
    Ok(go(n, k, &mut HashMap::new()))
}

/// `B(n, k)` split by the number of singleton parts:
/// `B(n,k) = sum_a C(n,a) x1^a B(n-a, k-a)|_{x1 = 0}`, where the inner value
/// with its first indeterminate zeroed comes from the composition bridge
/// over [`corollary1_weight`] with the weight of part size 1 removed.
pub fn identity6(n: u32, k: u32) -> MultiPoly {
    let mut sum = MultiPoly::zero();
    for alpha in 0..=k.min(n) {
        let inner = bell_without_singletons(n - alpha, k - alpha);
        if inner.is_zero() {
            continue;
        }
        sum = sum.add(
            &inner
                .mul_monomial(&Monomial::indeterminate(1).pow(alpha))
                .scale(&binomial(n, i64::from(alpha))),
        );
    }
    sum
}

/// `B(n, k)` evaluated at `x1 = 0`: the bridge weight with part size 1 zeroed.
fn bell_without_singletons(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    if k == 0 {
        return if n == 0 { MultiPoly::one() } else { MultiPoly::zero() };
    }
    let f = corollary1_weight(n, k).expect("k <= n").zero_at(1);
    weight_by_convolution(&f, k, n).scale(&BigRational::new(factorial(n), factorial(k)))
}

/// Stirling number of the second kind `S(n, k)`: the Bell polynomial with
/// every indeterminate set to 1. Exact and integer-valued.
pub fn stirling2(n: u32, k: u32) -> BigRational {
    let b = direct(n, k);
    let assignment = (1..=b.max_indeterminate().max(1))
        .map(|i| (i, int(1)))
        .collect();
    b.eval(&assignment).expect("the all-ones assignment covers every index")
}

/// The strategies exposed on the command line and the benchmark grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BellStrategy {
    Direct,
    Compositions,
    /// Naive baseline: the composition bridge run by brute-force enumeration
    /// instead of the dynamic program. Not selectable for `bell`, only for
    /// benchmarking.
    Enumeration,
    Id1,
    Id2,
    Id3,
    Id4,
    Id5,
    Id6,
}

impl BellStrategy {
    pub const ALL: [BellStrategy; 9] = [
        BellStrategy::Direct,
        BellStrategy::Compositions,
        BellStrategy::Enumeration,
        BellStrategy::Id1,
        BellStrategy::Id2,
        BellStrategy::Id3,
        BellStrategy::Id4,
        BellStrategy::Id5,
        BellStrategy::Id6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BellStrategy::Direct => "direct",
            BellStrategy::Compositions => "compositions",
            BellStrategy::Enumeration => "enumeration",
            BellStrategy::Id1 => "id1",
            BellStrategy::Id2 => "id2",
            BellStrategy::Id3 => "id3",
            BellStrategy::Id4 => "id4",
            BellStrategy::Id5 => "id5",
            BellStrategy::Id6 => "id6",
        }
    }

    /// Whether `B(n, k)` is inside this strategy's domain.
    pub fn applies(self, n: u32, k: u32) -> bool {
        match self {
            BellStrategy::Direct
            | BellStrategy::Compositions
            | BellStrategy::Enumeration
            | BellStrategy::Id2
            | BellStrategy::Id6 => true,
            BellStrategy::Id1 => k >= 1 && n >= k,
            BellStrategy::Id3 | BellStrategy::Id4 => k >= 1,
            BellStrategy::Id5 => k >= 1 && n >= 1,
        }
    }

    /// Compute `B(n, k)` by this strategy. `Id2` uses the even split
    /// `k1 = k/2`; `Id3` computes through the nested-sum form of
    /// `B(n, (k-1) + 1)`.
    pub fn compute(self, n: u32, k: u32) -> Result<MultiPoly, Error> {
        match self {
            BellStrategy::Direct => Ok(direct(n, k)),
            BellStrategy::Compositions => Ok(from_compositions(n, k)),
            BellStrategy::Enumeration => {
                if k > n {
                    return Ok(MultiPoly::zero());
                }
                let f = corollary1_weight(n, k)?;
                Ok(weight_by_enumeration(&f, k, n)
                    .scale(&BigRational::new(factorial(n), factorial(k))))
            }
            BellStrategy::Id1 => identity1(n, k),
            BellStrategy::Id2 => Ok(identity2(n, k / 2, k - k / 2)),
            BellStrategy::Id3 => {
                if k == 0 {
                    return Err(Error::PrefactorUndefined { n, k });
                }
                Ok(identity3(n, k - 1))
            }
            BellStrategy::Id4 => identity4(n, k),
            BellStrategy::Id5 => identity5(n, k),
            BellStrategy::Id6 => Ok(identity6(n, k)),
        }
    }
}

impl FromStr for BellStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        BellStrategy::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown bell strategy `{s}`"))
    }
}

impl std::fmt::Display for BellStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::Assignment;

    fn x(i: u32) -> MultiPoly {
        MultiPoly::indeterminate(i)
    }

    /// 3*x1*x2
    fn b32() -> MultiPoly {
        x(1).mul(&x(2)).scale(&int(3))
    }

    /// 3*x2^2 + 4*x1*x3
    fn b42() -> MultiPoly {
        x(2).pow(2).scale(&int(3)).add(&x(1).mul(&x(3)).scale(&int(4)))
    }

    #[test]
    fn corollary1_weight_examples() {
        let f = corollary1_weight(4, 2).unwrap();
        assert_eq!(f.get(1), x(1));
        assert_eq!(f.get(2), x(2).scale(&ratio(1, 2)));
        assert_eq!(f.get(3), x(3).scale(&ratio(1, 6)));
        assert_eq!(f.max_part(), 3);

        let f = corollary1_weight(3, 3).unwrap();
        assert_eq!(f.parts(), vec![1]);
        assert_eq!(f.get(1), x(1));

        assert!(corollary1_weight(0, 0).unwrap().is_empty());
        assert_eq!(corollary1_weight(2, 3), Err(Error::KExceedsN { n: 2, k: 3 }));

        // Zeroing the singleton weight keeps the rest of the bridge weights.
        let g = corollary1_weight(4, 2).unwrap().zero_at(1);
        assert_eq!(g.parts(), vec![2, 3]);
        assert_eq!(g.get(2), x(2).scale(&ratio(1, 2)));
        assert_eq!(g.get(3), x(3).scale(&ratio(1, 6)));
    }

    #[test]
    fn direct_reference_values() {
        assert_eq!(direct(3, 2), b32());
        assert_eq!(direct(4, 2), b42());
        assert_eq!(direct(5, 5), x(1).pow(5));
        assert_eq!(direct(0, 0), MultiPoly::one());
        assert_eq!(direct(3, 0), MultiPoly::zero());
        assert_eq!(direct(2, 3), MultiPoly::zero());
        assert_eq!(direct(6, 1), x(6));
    }

    #[test]
    fn composition_bridge_matches_direct() {
        assert_eq!(from_compositions(4, 2), b42());
        assert_eq!(from_compositions(3, 2), b32());
        assert_eq!(from_compositions(2, 3), MultiPoly::zero());
        assert_eq!(from_compositions(0, 0), MultiPoly::one());
    }

    #[test]
    fn identity1_examples() {
        assert_eq!(identity1(4, 2).unwrap(), b42());
        assert_eq!(identity1(3, 2).unwrap(), b32());
        assert_eq!(identity1(4, 4).unwrap(), x(1).pow(4));
        assert_eq!(identity1(3, 0), Err(Error::PrefactorUndefined { n: 3, k: 0 }));
        assert_eq!(identity1(2, 3), Err(Error::PrefactorUndefined { n: 2, k: 3 }));
    }

    #[test]
    fn identity2_examples() {
        assert_eq!(identity2(3, 1, 1), b32());
        assert_eq!(identity2(4, 1, 1), b42());
        // A zero split defers entirely to the other factor.
        assert_eq!(identity2(5, 0, 2), direct(5, 2));
        assert_eq!(identity2(4, 2, 3), MultiPoly::zero());
    }

    #[test]
    fn identity3_examples() {
        assert_eq!(identity3(3, 1), b32());
        assert_eq!(identity3(5, 0), x(5));
        assert_eq!(identity3(4, 1), b42());
        assert_eq!(identity3(4, 4), MultiPoly::zero());
        assert_eq!(identity3(6, 5), x(1).pow(6));
    }

    #[test]
    fn identity4_examples() {
        assert_eq!(identity4(3, 2).unwrap(), b32());
        assert_eq!(identity4(6, 1).unwrap(), x(6));
        assert_eq!(identity4(4, 2).unwrap(), b42());
        assert_eq!(identity4(4, 0), Err(Error::PrefactorUndefined { n: 4, k: 0 }));
    }

    #[test]
    fn identity5_examples() {
        assert_eq!(identity5(3, 2).unwrap(), b32());
        assert_eq!(identity5(6, 1).unwrap(), x(6));
        assert_eq!(identity5(4, 2).unwrap(), b42());
        assert_eq!(identity5(0, 0), Err(Error::PrefactorUndefined { n: 0, k: 0 }));
        assert_eq!(identity5(4, 0), Err(Error::PrefactorUndefined { n: 4, k: 0 }));
    }

    #[test]
    fn identity6_examples() {
        assert_eq!(identity6(4, 2), b42());
        assert_eq!(identity6(5, 5), x(1).pow(5));
        assert_eq!(identity6(3, 2), b32());
        assert_eq!(identity6(0, 0), MultiPoly::one());
        assert_eq!(identity6(2, 3), MultiPoly::zero());
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(9, 9), int(1));
        assert_eq!(stirling2(9, 1), int(1));
        assert_eq!(stirling2(5, 3), int(25));
        assert_eq!(stirling2(3, 5), int(0));
        assert_eq!(stirling2(0, 0), int(1));
    }

    #[test]
    fn evaluation_at_factorials_counts_restricted_compositions() {
        // B(n, k) at x_s = s! for s <= q, 0 beyond, counts the k-part
        // compositions of n with parts in 1..=q, scaled by n!/k!.
        let b = direct(5, 2);
        let mut a: Assignment = Assignment::new();
        for s in 1..=4 {
            a.insert(s, if s <= 3 { int(factorial(s)) } else { int(0) });
        }
        let f = WeightFunction::<BigRational>::indicator(1..=3);
        let lhs = b.eval(&a).unwrap();
        let rhs = weight_by_enumeration(&f, 2, 5)
            * BigRational::new(factorial(5), factorial(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn strategy_vocabulary_round_trips() {
        for s in BellStrategy::ALL {
            assert_eq!(s.name().parse::<BellStrategy>().unwrap(), s);
        }
        assert!("id7".parse::<BellStrategy>().is_err());
    }
}
