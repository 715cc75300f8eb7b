//! Property checks for the algebraic invariants: ring axioms on both
//! coefficient domains, exact-division round trips, and the agreements
//! between composition strategies on randomized weight functions.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use bellcomp::compositions::{
    enumerate_compositions, weight_by_convolution, weight_by_depril, weight_by_enumeration,
    weight_by_part_removal, weight_by_partitions, weight_by_weighted_conv, weight_convolve_split,
    WeightFunction,
};
use bellcomp::ring::poly::Monomial;
use bellcomp::ring::{int, ratio};
use bellcomp::stochastic::{normalize, sum_pmf, weight_from_pmf};
use bellcomp::{MultiPoly, Ring};

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-200i64..=200, 1i64..=40).prop_map(|(n, d)| ratio(n, d))
}

fn arb_nonzero_rational() -> impl Strategy<Value = BigRational> {
    arb_rational().prop_filter("nonzero", |q| !Zero::is_zero(q))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::btree_map(1u32..=5, 1u32..=3, 0..=3)
        .prop_map(Monomial::from_exponents)
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((arb_monomial(), arb_rational()), 0..=4)
        .prop_map(MultiPoly::from_terms)
}

fn arb_weight_fn() -> impl Strategy<Value = WeightFunction<BigRational>> {
    prop::collection::btree_map(0u32..=6, arb_nonzero_rational(), 0..=4)
        .prop_map(WeightFunction::from_pairs)
}

fn reduced(q: &BigRational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

macro_rules! ring_axioms {
    ($name:ident, $strategy:expr) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn $name((a, b, c) in ($strategy, $strategy, $strategy)) {
                // Additive group.
                prop_assert_eq!(a.add(&b), b.add(&a));
                prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                prop_assert_eq!(a.add(&Ring::zero()), a.clone());
                prop_assert!(Ring::is_zero(&a.add(&a.neg())));
                // Multiplicative monoid, commutative.
                prop_assert_eq!(a.mul(&b), b.mul(&a));
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                prop_assert_eq!(a.mul(&Ring::one()), a.clone());
                // Distributivity.
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }
        }
    };
}

ring_axioms!(rational_ring_axioms, arb_rational());
ring_axioms!(poly_ring_axioms, arb_poly());

proptest! {
    #[test]
    fn rational_results_stay_reduced(a in arb_rational(), b in arb_nonzero_rational()) {
        prop_assert!(reduced(&(&a + &b)));
        prop_assert!(reduced(&(&a * &b)));
        prop_assert!(reduced(&(&a / &b)));
        prop_assert!(reduced(&(-&a)));
    }

    #[test]
    fn scale_div_round_trips(p in arb_poly(), c in arb_nonzero_rational()) {
        prop_assert_eq!(p.scale_div(&c).unwrap().scale(&c), p);
    }

    #[test]
    fn extract_factor_round_trips(q in arb_poly(), i in 1u32..=5) {
        let p = q.mul_monomial(&Monomial::indeterminate(i));
        let extracted = p.extract_factor(i).unwrap();
        prop_assert_eq!(&extracted, &q);
        prop_assert_eq!(extracted.mul(&MultiPoly::indeterminate(i)), p);
    }

    #[test]
    fn poly_equality_is_term_map_equality(terms in prop::collection::vec((arb_monomial(), arb_rational()), 0..=4)) {
        // Assembling the same terms in reversed order gives the same value.
        let forward = MultiPoly::from_terms(terms.clone());
        let backward = MultiPoly::from_terms(terms.into_iter().rev());
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn composition_strategies_agree(f in arb_weight_fn(), k in 0u32..=6, n in 0u32..=6) {
        let oracle = weight_by_enumeration(&f, k, n);
        prop_assert_eq!(weight_by_partitions(&f, k, n), oracle.clone());
        prop_assert_eq!(weight_by_convolution(&f, k, n), oracle.clone());
        if k >= 1 && n >= 1 {
            prop_assert_eq!(weight_by_weighted_conv(&f, k, n).unwrap(), oracle.clone());
        }
        for r in 0..=6 {
            prop_assert_eq!(weight_by_part_removal(&f, r, k, n), oracle.clone());
        }
        if f.value(0).is_none() && f.value(1).is_some() {
            prop_assert_eq!(weight_by_depril(&f, k, n).unwrap(), oracle);
        }
    }

    #[test]
    fn split_is_invariant_in_the_split_point(f in arb_weight_fn(), k in 0u32..=6, n in 0u32..=6) {
        let whole = weight_by_convolution(&f, k, n);
        for k1 in 0..=k {
            prop_assert_eq!(weight_convolve_split(&f, k1, k - k1, n), whole.clone());
        }
    }

    #[test]
    fn truncation_does_not_change_the_weight(f in arb_weight_fn(), k in 0u32..=6, n in 0u32..=6) {
        prop_assert_eq!(
            weight_by_convolution(&f.truncate(n), k, n),
            weight_by_convolution(&f, k, n)
        );
    }

    #[test]
    fn enumeration_is_sorted_unique_and_counted_by_convolution(
        n in 0u32..=7, k in 0u32..=5, q in 0u32..=4
    ) {
        let all: Vec<Vec<u32>> = enumerate_compositions(n, k, q).collect();
        // Each composition is a k-tuple of parts in [0, q] summing to n.
        for c in &all {
            prop_assert_eq!(c.len(), k as usize);
            prop_assert_eq!(c.iter().sum::<u32>(), n);
            prop_assert!(c.iter().all(|&p| p <= q));
        }
        // Strictly increasing lexicographic order implies uniqueness.
        for pair in all.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
        // The count is the all-ones weight.
        let counting = WeightFunction::<BigRational>::indicator(0..=q);
        prop_assert_eq!(int(all.len() as i64), weight_by_convolution(&counting, k, n));
    }

    #[test]
    fn zero_one_weights_count_their_support_compositions(
        support in prop::collection::btree_set(0u32..=5, 0..=4),
        k in 0u32..=5,
        n in 0u32..=7,
    ) {
        let f = WeightFunction::<BigRational>::indicator(support.iter().copied());
        let max_part = support.iter().max().copied().unwrap_or(0);
        let matching = enumerate_compositions(n, k, max_part)
            .filter(|c| c.iter().all(|p| support.contains(p)))
            .count();
        prop_assert_eq!(weight_by_enumeration(&f, k, n), int(matching as i64));
    }
}

fn arb_positive_weight_fn() -> impl Strategy<Value = WeightFunction<BigRational>> {
    prop::collection::btree_map(0u32..=5, (1i64..=30, 1i64..=9), 1..=4).prop_map(|m| {
        WeightFunction::from_pairs(m.into_iter().map(|(s, (p, q))| (s, ratio(p, q))))
    })
}

proptest! {
    #[test]
    fn normalization_round_trips(f in arb_positive_weight_fn(), k in 0u32..=5, n in 0u32..=6) {
        let nw = normalize(&f).unwrap();
        // pmf * total recovers f pointwise.
        for (s, v) in f.support() {
            prop_assert_eq!(&nw.pmf.mass(s) * &nw.total, v.clone());
        }
        prop_assert_eq!(
            weight_from_pmf(&nw.pmf, &nw.total, k, n),
            weight_by_enumeration(&f, k, n)
        );
    }

    #[test]
    fn sums_of_iid_draws_stay_distributions(f in arb_positive_weight_fn(), k in 0u32..=5) {
        let nw = normalize(&f).unwrap();
        let s = sum_pmf(&nw.pmf, k);
        prop_assert_eq!(s.total(), int(1));
        // Support bounds scale with the number of draws.
        let min = nw.pmf.min_outcome().unwrap() * k;
        let max = nw.pmf.max_outcome().unwrap() * k;
        prop_assert!(s.support().all(|(outcome, _)| outcome >= min && outcome <= max));
        // Splitting the draws and convolving the halves changes nothing.
        let split = sum_pmf(&nw.pmf, k / 2).convolve(&sum_pmf(&nw.pmf, k - k / 2));
        prop_assert_eq!(split, s);
    }
}
