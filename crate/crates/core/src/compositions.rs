//! Weighted integer compositions: the total weight of all `k`-part
//! compositions of `n` where each part of size `s` contributes a
//! multiplicative weight `f(s)`.
//!
//! Every strategy here computes the same quantity by a different route, and
//! all of them are generic over the coefficient ring, so they run over
//! numeric rational weights and over symbolic polynomial weights alike.
//! [`weight_by_enumeration`] is the brute-force reference the others are
//! tested against.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::ring::{binomial, int, multinomial, ratio, Ring};

/// Finite-support weight function: part size -> nonzero ring element.
///
/// Absent part sizes weigh zero. Zero values are dropped on construction so
/// that presence in the support always means a nonzero weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightFunction<R: Ring> {
    support: BTreeMap<u32, R>,
}

impl<R: Ring> Default for WeightFunction<R> {
    fn default() -> Self {
        WeightFunction { support: BTreeMap::new() }
    }
}

impl<R: Ring> WeightFunction<R> {
    /// The identically-zero weight function.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (u32, R)>>(pairs: I) -> Self {
        let support = pairs
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        WeightFunction { support }
    }

    /// Indicator function of a set of part sizes (weight 1 on each).
    pub fn indicator<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        Self::from_pairs(parts.into_iter().map(|s| (s, R::one())))
    }

    /// `f(s)`, cloned; zero when `s` is outside the support.
    pub fn get(&self, s: u32) -> R {
        self.support.get(&s).cloned().unwrap_or_else(R::zero)
    }

    /// `f(s)` by reference when nonzero.
    pub fn value(&self, s: u32) -> Option<&R> {
        self.support.get(&s)
    }

    pub fn support(&self) -> impl Iterator<Item = (u32, &R)> {
        self.support.iter().map(|(&s, v)| (s, v))
    }

    /// Part sizes with nonzero weight, ascending.
    pub fn parts(&self) -> Vec<u32> {
        self.support.keys().copied().collect()
    }

    /// Largest part size with nonzero weight, 0 for the empty function.
    pub fn max_part(&self) -> u32 {
        self.support.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Copy of `f` with the weight at `r` forced to zero.
    pub fn zero_at(&self, r: u32) -> Self {
        let mut support = self.support.clone();
        support.remove(&r);
        WeightFunction { support }
    }

    /// Copy of `f` that vanishes above `n`.
    pub fn truncate(&self, n: u32) -> Self {
        let support = self
            .support
            .iter()
            .filter(|(&s, _)| s <= n)
            .map(|(&s, v)| (s, v.clone()))
            .collect();
        WeightFunction { support }
    }
}

/// Lexicographic stream of the compositions of `n` into `k` ordered parts
/// drawn from a fixed set of allowed part sizes.
///
/// The stream is single-consumer; cloning restarts enumeration from the
/// beginning.
#[derive(Debug)]
pub struct Compositions {
    parts: Vec<u32>,
    k: u32,
    n: u32,
    /// reachable[t][r]: t slots of allowed parts can sum to exactly r.
    /// Allowed part sets can have gaps, so interval bounds are not enough.
    reachable: Vec<Vec<bool>>,
    next: Option<Vec<u32>>,
}

impl Clone for Compositions {
    fn clone(&self) -> Self {
        Compositions::over_parts(self.parts.clone(), self.k, self.n)
    }
}

/// All `(pi_1, ..., pi_k)` with every part in `[0, max_part]` and sum `n`,
/// each exactly once, in lexicographic order. For `k = 0` there is one empty
/// composition exactly when `n = 0`.
pub fn enumerate_compositions(n: u32, k: u32, max_part: u32) -> Compositions {
    Compositions::over_parts((0..=max_part).collect(), k, n)
}

impl Compositions {
    pub(crate) fn over_parts(mut parts: Vec<u32>, k: u32, n: u32) -> Self {
        parts.sort_unstable();
        parts.dedup();
        let reachable = reachability(&parts, k, n);
        let mut stream = Compositions { parts, k, n, reachable, next: None };
        stream.next = stream.first();
        stream
    }

    fn first(&self) -> Option<Vec<u32>> {
        if self.k == 0 {
            return (self.n == 0).then(Vec::new);
        }
        if !self.reachable[self.k as usize][self.n as usize] {
            return None;
        }
        let mut slots = vec![0u32; self.k as usize];
        self.fill_smallest(&mut slots, 0, self.n);
        Some(slots)
    }

    /// Fill `slots[from..]` with the lexicographically smallest feasible
    /// parts summing to `rem`. The state must be reachable.
    fn fill_smallest(&self, slots: &mut [u32], from: usize, mut rem: u32) {
        for idx in from..slots.len() {
            let tail = slots.len() - idx - 1;
            let part = self
                .parts
                .iter()
                .copied()
                .find(|&p| p <= rem && self.reachable[tail][(rem - p) as usize])
                .expect("reachable states always extend to a full composition");
            slots[idx] = part;
            rem -= part;
        }
        debug_assert_eq!(rem, 0);
    }

    fn successor(&self, current: &[u32]) -> Option<Vec<u32>> {
        let k = current.len();
        let mut next = current.to_vec();
        let mut suffix: u32 = 0;
        // Rightmost position whose part can be raised with the tail still
        // reaching the remainder.
        for j in (0..k).rev() {
            suffix += current[j];
            let tail = k - j - 1;
            let raised = self
                .parts
                .iter()
                .copied()
                .find(|&p| p > current[j] && p <= suffix && self.reachable[tail][(suffix - p) as usize]);
            if let Some(part) = raised {
                next[j] = part;
                self.fill_smallest(&mut next, j + 1, suffix - part);
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for Compositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.next.take()?;
        self.next = self.successor(&current);
        Some(current)
    }
}

/// Exact feasibility table: `t` parts from `parts` summing to `r`.
fn reachability(parts: &[u32], k: u32, n: u32) -> Vec<Vec<bool>> {
    let width = n as usize + 1;
    let mut table = vec![vec![false; width]; k as usize + 1];
    table[0][0] = true;
    for t in 1..=k as usize {
        for r in 0..=n {
            table[t][r as usize] = parts
                .iter()
                .take_while(|&&p| p <= r)
                .any(|&p| table[t - 1][(r - p) as usize]);
        }
    }
    table
}

/// Total weight by brute force: sum of `f(pi_1) * ... * f(pi_k)` over every
/// composition of `n` into `k` parts.
///
/// Compositions containing a part of zero weight contribute nothing, so the
/// walk is restricted to parts in the support. This is the reference oracle
/// for every other strategy in this module.
pub fn weight_by_enumeration<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> R {
    let mut total = R::zero();
    for composition in Compositions::over_parts(f.parts(), k, n) {
        let mut weight = R::one();
        for &part in &composition {
            weight = weight.mul(f.value(part).expect("parts come from the support"));
        }
        total = total.add(&weight);
    }
    total
}

/// Visit every multiplicity vector over `parts` with `sum(l) = k` and
/// `sum(s * l_s) = n`. Only strictly positive multiplicities are passed on.
pub(crate) fn for_each_part_count<F: FnMut(&[(u32, u32)])>(
    parts: &[u32],
    k: u32,
    n: u32,
    visit: &mut F,
) {
    fn rec<F: FnMut(&[(u32, u32)])>(
        parts: &[u32],
        idx: usize,
        k_rem: u32,
        n_rem: u32,
        acc: &mut Vec<(u32, u32)>,
        visit: &mut F,
    ) {
        if idx == parts.len() {
            if k_rem == 0 && n_rem == 0 {
                visit(acc);
            }
            return;
        }
        // Even using the largest remaining part everywhere cannot reach n_rem.
        let max_rest = u64::from(*parts.last().unwrap());
        if u64::from(n_rem) > u64::from(k_rem) * max_rest {
            return;
        }
        let s = parts[idx];
        let l_max = if s == 0 { k_rem } else { k_rem.min(n_rem / s) };
        for l in 0..=l_max {
            if l > 0 {
                acc.push((s, l));
            }
            rec(parts, idx + 1, k_rem - l, n_rem - s * l, acc, visit);
            if l > 0 {
                acc.pop();
            }
        }
    }
    if parts.is_empty() {
        if k == 0 && n == 0 {
            visit(&[]);
        }
        return;
    }
    rec(parts, 0, k, n, &mut Vec::new(), visit);
}

/// Total weight via the partition form: group compositions by their part
/// multiplicities and weigh each group with a multinomial coefficient.
pub fn weight_by_partitions<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> R {
    let parts = f.parts();
    let mut total = R::zero();
    for_each_part_count(&parts, k, n, &mut |counts| {
        let multiplicities: Vec<u32> = counts.iter().map(|&(_, l)| l).collect();
        let coeff = multinomial(k, &multiplicities)
            .expect("multiplicities sum to k by construction");
        let mut term = R::from_rational(coeff);
        for &(s, l) in counts {
            term = term.mul(&f.value(s).expect("support part").pow(l));
        }
        total = total.add(&term);
    });
    total
}

/// Row `j = k` of the convolution table, i.e. the weights `W(k, m)` for all
/// `m` in `0..=n`, computed with two rolling rows.
pub(crate) fn convolution_row<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> Vec<R> {
    let width = n as usize + 1;
    let mut row: Vec<R> = (0..width)
        .map(|m| if m == 0 { R::one() } else { R::zero() })
        .collect();
    for _ in 1..=k {
        let mut next = vec![R::zero(); width];
        for m in 0..=n {
            for (s, fs) in f.support() {
                if s > m {
                    break;
                }
                let prev = &row[(m - s) as usize];
                if !prev.is_zero() {
                    next[m as usize] = next[m as usize].add(&fs.mul(prev));
                }
            }
        }
        row = next;
    }
    row
}

/// Total weight via the one-part-at-a-time convolution recurrence
/// `W(k, n) = sum_s f(s) * W(k-1, n-s)`, run as a dynamic program.
pub fn weight_by_convolution<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> R {
    convolution_row(f, k, n).swap_remove(n as usize)
}

/// The full convolution table `T[j][m]` for `j in 0..=k`, `m in 0..=n`, for
/// callers that want every intermediate weight rather than one cell.
pub fn convolution_table<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> Vec<Vec<R>> {
    let width = n as usize + 1;
    let mut table = Vec::with_capacity(k as usize + 1);
    table.push(
        (0..width)
            .map(|m| if m == 0 { R::one() } else { R::zero() })
            .collect::<Vec<R>>(),
    );
    for j in 1..=k as usize {
        let mut next = vec![R::zero(); width];
        for m in 0..=n {
            for (s, fs) in f.support() {
                if s > m {
                    break;
                }
                let prev = &table[j - 1][(m - s) as usize];
                if !prev.is_zero() {
                    next[m as usize] = next[m as usize].add(&fs.mul(prev));
                }
            }
        }
        table.push(next);
    }
    table
}

/// Total weight via the split `W(k1 + k2, n) = sum_{x+y=n} W(k1, x) * W(k2, y)`,
/// with both factors computed by the convolution dynamic program.
pub fn weight_convolve_split<R: Ring>(f: &WeightFunction<R>, k1: u32, k2: u32, n: u32) -> R {
    let left = convolution_row(f, k1, n);
    let right = convolution_row(f, k2, n);
    let mut total = R::zero();
    for x in 0..=n as usize {
        let (a, b) = (&left[x], &right[n as usize - x]);
        if !a.is_zero() && !b.is_zero() {
            total = total.add(&a.mul(b));
        }
    }
    total
}

/// Total weight via the compound-distribution style recurrence that walks a
/// single row of the table in `n` instead of building all `k` rows:
///
/// `W(k, n) = 1/(f(1)(n-k)) * sum_{s>=1} (k+1 - (n+1)/(s+1)) (s+1) f(s+1) W(k, n-s)`
///
/// Requires `f(0) = 0` and `f(1)` a nonzero rational constant; the base case
/// is `W(k, k) = f(1)^k` and `W(k, m) = 0` below it.
pub fn weight_by_depril<R: Ring>(f: &WeightFunction<R>, k: u32, n: u32) -> Result<R, Error> {
    if f.value(0).is_some() {
        return Err(Error::WeightAtZeroNotZero);
    }
    let unit = f
        .value(1)
        .and_then(Ring::as_rational)
        .filter(|q| !Zero::is_zero(q))
        .ok_or(Error::UnitWeightNotInvertible)?;
    if n < k {
        return Ok(R::zero());
    }
    // w[m - k] = W(k, m), built upward from the all-ones base case.
    let mut w: Vec<R> = Vec::with_capacity((n - k + 1) as usize);
    w.push(f.get(1).pow(k));
    for m in (k + 1)..=n {
        let mut acc = R::zero();
        let s_max = (m - k).min(f.max_part().saturating_sub(1));
        for s in 1..=s_max {
            let Some(fs) = f.value(s + 1) else { continue };
            let scalar = (int(k + 1) - ratio(m + 1, s + 1)) * int(s + 1);
            if Zero::is_zero(&scalar) {
                continue;
            }
            let prev = &w[(m - s - k) as usize];
            if !prev.is_zero() {
                acc = acc.add(&fs.mul(prev).scale(&scalar));
            }
        }
        w.push(acc.div_rational(&(&unit * int(m - k)))?);
    }
    Ok(w.pop().expect("base case is always present"))
}

/// Total weight via the size-weighted convolution
/// `W(k, n) = k/n * sum_{s>=1} s f(s) W(k-1, n-s)`, undefined at `n = 0` or
/// `k = 0` where the `k/n` prefactor degenerates.
pub fn weight_by_weighted_conv<R: Ring>(
    f: &WeightFunction<R>,
    k: u32,
    n: u32,
) -> Result<R, Error> {
    if k == 0 || n == 0 {
        return Err(Error::PrefactorUndefined { n, k });
    }
    let row = convolution_row(f, k - 1, n);
    let mut acc = R::zero();
    for (s, fs) in f.support() {
        if s < 1 {
            continue;
        }
        if s > n {
            break;
        }
        let prev = &row[(n - s) as usize];
        if !prev.is_zero() {
            acc = acc.add(&fs.mul(prev).scale(&int(s)));
        }
    }
    Ok(acc.scale(&ratio(k, n)))
}

/// Total weight by splitting off the occurrences of one part size `r`:
///
/// `W_f(k, n) = sum_i f(r)^i C(k, i) W_g(k-i, n-ri)` with `g = f` zeroed at `r`.
pub fn weight_by_part_removal<R: Ring>(f: &WeightFunction<R>, r: u32, k: u32, n: u32) -> R {
    let reduced = f.zero_at(r);
    let fr = f.get(r);
    let i_max = if r == 0 { k } else { k.min(n / r) };
    let mut total = R::zero();
    for i in 0..=i_max {
        if i >= 1 && fr.is_zero() {
            break;
        }
        let inner = weight_by_convolution(&reduced, k - i, n - r * i);
        if inner.is_zero() {
            continue;
        }
        total = total.add(&fr.pow(i).mul(&inner).scale(&binomial(k, i64::from(i))));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly::MultiPoly;
    use crate::ring::{int, ratio};
    use num_rational::BigRational;

    /// The running example: two colors of part 0, one color each of 1 and 2.
    fn colored() -> WeightFunction<BigRational> {
        WeightFunction::from_pairs([(0, int(2)), (1, int(1)), (2, int(1))])
    }

    fn ones_on_1_2() -> WeightFunction<BigRational> {
        WeightFunction::indicator([1, 2])
    }

    #[test]
    fn zero_at_examples() {
        let f = ones_on_1_2();
        assert_eq!(f.zero_at(2), WeightFunction::indicator([1]));
        assert_eq!(f.zero_at(5), f);
    }

    #[test]
    fn truncate_examples() {
        let f = WeightFunction::<BigRational>::indicator(1..=9);
        assert_eq!(f.truncate(3), WeightFunction::indicator([1, 2, 3]));
        assert_eq!(f.truncate(9), f);
        let empty = WeightFunction::<BigRational>::new();
        assert_eq!(empty.truncate(4), empty);
    }

    #[test]
    fn zero_values_are_dropped() {
        let f = WeightFunction::from_pairs([(0, int(0)), (3, int(5))]);
        assert!(f.value(0).is_none());
        assert_eq!(f.max_part(), 3);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let got: Vec<Vec<u32>> = enumerate_compositions(4, 3, 2).collect();
        let want: Vec<Vec<u32>> = vec![
            vec![0, 2, 2],
            vec![1, 1, 2],
            vec![1, 2, 1],
            vec![2, 0, 2],
            vec![2, 1, 1],
            vec![2, 2, 0],
        ];
        assert_eq!(got, want);

        let empty_case: Vec<Vec<u32>> = enumerate_compositions(0, 0, 0).collect();
        assert_eq!(empty_case, vec![Vec::<u32>::new()]);

        let got: Vec<Vec<u32>> = enumerate_compositions(3, 2, 3).collect();
        assert_eq!(got, vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);

        // No compositions of a positive n into zero parts.
        assert_eq!(enumerate_compositions(2, 0, 4).count(), 0);
    }

    #[test]
    fn cloning_the_stream_restarts_it() {
        let mut stream = enumerate_compositions(3, 2, 3);
        stream.next();
        stream.next();
        let restarted: Vec<Vec<u32>> = stream.clone().collect();
        assert_eq!(restarted.len(), 4);
        assert_eq!(restarted[0], vec![0, 3]);
    }

    #[test]
    fn enumeration_weight_examples() {
        assert_eq!(weight_by_enumeration(&colored(), 3, 4), int(9));
        assert_eq!(weight_by_enumeration(&colored(), 0, 0), int(1));
        assert_eq!(weight_by_enumeration(&WeightFunction::<BigRational>::new(), 0, 0), int(1));
        assert_eq!(weight_by_enumeration(&ones_on_1_2(), 2, 3), int(2));
    }

    #[test]
    fn partition_form_examples() {
        assert_eq!(weight_by_partitions(&colored(), 3, 4), int(9));
        assert_eq!(weight_by_partitions(&ones_on_1_2(), 2, 3), int(2));
        assert_eq!(weight_by_partitions(&colored(), 0, 3), int(0));
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(weight_by_convolution(&colored(), 3, 4), int(9));
        assert_eq!(weight_by_convolution(&ones_on_1_2(), 2, 3), int(2));
        // k parts of nothing but zeros: W(k, 0) = f(0)^k.
        assert_eq!(weight_by_convolution(&colored(), 3, 0), int(8));
    }

    #[test]
    fn symbolic_convolution_matches_hand_value() {
        // f(1) = x1, f(2) = x2/2, f(3) = x3/6; W(2, 4) = x2^2/4 + x1*x3/3.
        let f: WeightFunction<MultiPoly> = WeightFunction::from_pairs([
            (1, MultiPoly::indeterminate(1)),
            (2, MultiPoly::indeterminate(2).scale(&ratio(1, 2))),
            (3, MultiPoly::indeterminate(3).scale(&ratio(1, 6))),
        ]);
        let got = weight_by_convolution(&f, 2, 4);
        assert_eq!(got.to_string(), "1/4*x2^2 + 1/3*x1*x3");
        assert_eq!(got, weight_by_enumeration(&f, 2, 4));
    }

    #[test]
    fn convolve_split_examples() {
        assert_eq!(weight_convolve_split(&ones_on_1_2(), 1, 1, 3), int(2));
        assert_eq!(
            weight_convolve_split(&colored(), 0, 3, 4),
            weight_by_convolution(&colored(), 3, 4)
        );
        assert_eq!(weight_convolve_split(&colored(), 1, 2, 4), int(9));
    }

    #[test]
    fn depril_examples() {
        assert_eq!(weight_by_depril(&ones_on_1_2(), 2, 3).unwrap(), int(2));
        assert_eq!(weight_by_depril(&ones_on_1_2(), 3, 3).unwrap(), int(1));
        assert_eq!(weight_by_depril(&ones_on_1_2(), 3, 2).unwrap(), int(0));
        assert_eq!(
            weight_by_depril(&colored(), 2, 3),
            Err(Error::WeightAtZeroNotZero)
        );
        // f(1) = 0 has no inverse.
        let no_unit = WeightFunction::from_pairs([(2, int(1))]);
        assert_eq!(
            weight_by_depril(&no_unit, 2, 4),
            Err(Error::UnitWeightNotInvertible)
        );
        // Symbolic f(1) = x1 is not a rational constant.
        let symbolic: WeightFunction<MultiPoly> =
            WeightFunction::from_pairs([(1, MultiPoly::indeterminate(1))]);
        assert_eq!(
            weight_by_depril(&symbolic, 2, 2),
            Err(Error::UnitWeightNotInvertible)
        );
    }

    #[test]
    fn depril_agrees_with_enumeration_on_rationals() {
        let f = WeightFunction::from_pairs([(1, ratio(1, 2)), (2, int(3)), (5, ratio(5, 7))]);
        for k in 0..=6 {
            for n in 0..=8 {
                assert_eq!(
                    weight_by_depril(&f, k, n).unwrap(),
                    weight_by_enumeration(&f, k, n),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn weighted_conv_examples() {
        assert_eq!(weight_by_weighted_conv(&ones_on_1_2(), 2, 3).unwrap(), int(2));
        assert_eq!(weight_by_weighted_conv(&colored(), 3, 4).unwrap(), int(9));
        let zero_above = WeightFunction::from_pairs([(0, int(7))]);
        assert_eq!(weight_by_weighted_conv(&zero_above, 2, 3).unwrap(), int(0));
        assert_eq!(
            weight_by_weighted_conv(&colored(), 0, 4),
            Err(Error::PrefactorUndefined { n: 4, k: 0 })
        );
        assert_eq!(
            weight_by_weighted_conv(&colored(), 3, 0),
            Err(Error::PrefactorUndefined { n: 0, k: 3 })
        );
    }

    #[test]
    fn part_removal_examples() {
        assert_eq!(weight_by_part_removal(&ones_on_1_2(), 2, 2, 3), int(2));
        // r outside the support leaves everything to the reduced function.
        assert_eq!(
            weight_by_part_removal(&ones_on_1_2(), 7, 2, 3),
            weight_by_convolution(&ones_on_1_2(), 2, 3)
        );
        assert_eq!(weight_by_part_removal(&colored(), 0, 3, 4), int(9));
    }

    #[test]
    fn convolution_table_last_row_matches() {
        let table = convolution_table(&colored(), 3, 4);
        assert_eq!(table.len(), 4);
        assert_eq!(table[3][4], int(9));
        assert_eq!(table[0][0], int(1));
        assert_eq!(table[0][2], int(0));
    }
}
