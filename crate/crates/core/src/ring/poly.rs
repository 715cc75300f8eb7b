//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Indeterminates are indexed from 1 (`x1, x2, ...`); index 0 is reserved and
//! rejected. Values are kept canonical at all times: no stored exponent is
//! zero, no stored coefficient is zero, and terms iterate in graded
//! lexicographic order (total degree first, then the exponent vector read
//! from `x1` upward). Equality is therefore plain term-map equality, which is
//! what every symbolic identity check in this crate relies on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Ring;
use crate::error::Error;

/// Values for indeterminates, keyed by index.
pub type Assignment = BTreeMap<u32, BigRational>;

/// Product of powers of indeterminates; the empty map is the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<u32, u32>,
}

impl Monomial {
    /// The unit monomial (the empty product).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// The single indeterminate `x_i`. Panics if `i` is 0.
    pub fn indeterminate(i: u32) -> Self {
        assert!(i >= 1, "indeterminate indices start at 1");
        let mut exps = BTreeMap::new();
        exps.insert(i, 1);
        Monomial { exps }
    }

    /// Build from `(index, exponent)` pairs; zero exponents are dropped.
    /// Panics on index 0.
    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut exps = BTreeMap::new();
        for (i, e) in pairs {
            assert!(i >= 1, "indeterminate indices start at 1");
            if e > 0 {
                *exps.entry(i).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn exponent(&self, i: u32) -> u32 {
        self.exps.get(&i).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().map(|(&i, &e)| (i, e))
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Sum of `index * exponent` over all factors.
    pub fn weighted_degree(&self) -> u64 {
        self.exps
            .iter()
            .map(|(&i, &e)| u64::from(i) * u64::from(e))
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest indeterminate index appearing, 0 for the unit monomial.
    pub fn max_indeterminate(&self) -> u32 {
        self.exps.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps.clone();
        for (&i, &e) in &other.exps {
            *exps.entry(i).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Monomial::unit();
        }
        let exps = self.exps.iter().map(|(&i, &x)| (i, x * e)).collect();
        Monomial { exps }
    }

    /// Remove one power of `x_i`, or `None` if `x_i` does not divide this
    /// monomial.
    fn strip(&self, i: u32) -> Option<Self> {
        let e = self.exponent(i);
        if e == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(&i);
        } else {
            exps.insert(i, e - 1);
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: lower total degree first, ties broken by the
    /// exponent vector compared componentwise from `x1` upward (smaller
    /// exponent first).
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.total_degree().cmp(&other.total_degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                // The side that still has factors carries a positive exponent
                // at an index where the other side has zero.
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(&ia, &ea)), Some(&(&ib, &eb))) => {
                    if ia < ib {
                        // `other` has exponent 0 at index ia.
                        return Ordering::Greater;
                    }
                    if ib < ia {
                        return Ordering::Less;
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&i, &e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over [`BigRational`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn insert_term(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if Zero::is_zero(&c) {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get() + c;
            if Zero::is_zero(&sum) {
                slot.remove();
            } else {
                slot.insert(sum);
            }
        }
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(One::one())
    }

    /// The constant polynomial `q` (the zero polynomial when `q` is 0).
    pub fn constant(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        insert_term(&mut terms, Monomial::unit(), q);
        MultiPoly { terms }
    }

    /// The polynomial `x_i`. Panics if `i` is 0.
    pub fn indeterminate(i: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::indeterminate(i), One::one());
        MultiPoly { terms }
    }

    /// Accumulate `(monomial, coefficient)` pairs; zero coefficients and
    /// cancelling pairs drop out.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(pairs: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in pairs {
            insert_term(&mut terms, m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// `Some(q)` when the polynomial is the constant `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(Zero::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest indeterminate index appearing, 0 for constants.
    pub fn max_indeterminate(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::max_indeterminate)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            insert_term(&mut terms, m.clone(), c.clone());
        }
        MultiPoly { terms }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                insert_term(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { terms }
    }

    /// Multiply every term by one monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.mul(m), c.clone()))
            .collect();
        MultiPoly { terms }
    }

    /// Multiply every coefficient by the rational `q`.
    pub fn scale(&self, q: &BigRational) -> Self {
        if Zero::is_zero(q) {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect();
        MultiPoly { terms }
    }

    /// Divide every coefficient exactly by the nonzero rational `q`.
    pub fn scale_div(&self, q: &BigRational) -> Result<Self, Error> {
        if Zero::is_zero(q) {
            return Err(Error::DivisionByZero);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / q)).collect();
        Ok(MultiPoly { terms })
    }

    /// Factor out `x_i` exactly, returning `q` with `self = x_i * q`.
    ///
    /// Fails if any term lacks `x_i`; a failure signals that a divisibility
    /// premise was violated upstream.
    pub fn extract_factor(&self, i: u32) -> Result<Self, Error> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let stripped = m
                .strip(i)
                .ok_or(Error::NotDivisible { indeterminate: i })?;
            terms.insert(stripped, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute rationals for indeterminates and evaluate exactly.
    ///
    /// The assignment must cover every indeterminate that occurs.
    pub fn eval(&self, assignment: &Assignment) -> Result<BigRational, Error> {
        let mut total: BigRational = Zero::zero();
        for (m, c) in &self.terms {
            let mut product = c.clone();
            for (i, e) in m.exponents() {
                let value = assignment
                    .get(&i)
                    .ok_or(Error::MissingIndeterminate { indeterminate: i })?;
                product *= num_traits::pow::Pow::pow(value, u64::from(e));
            }
            total += product;
        }
        Ok(total)
    }

    /// JSON form: an array of `{"coeff": "p/q", "monomial": {"i": e, ...}}`
    /// objects in graded lexicographic term order, rationals rendered as
    /// decimal strings with the denominator omitted when it is 1.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, serde_json::Value> = m
                    .exponents()
                    .map(|(i, e)| (i.to_string(), serde_json::Value::from(e)))
                    .collect();
                serde_json::json!({
                    "coeff": c.to_string(),
                    "monomial": serde_json::Value::Object(mono),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl fmt::Display for MultiPoly {
    /// Deterministic text form: `c*x<i>^<e>` factors joined by `*`, terms
    /// joined by ` + ` in graded lexicographic order, `^1` omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::one()
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }

    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }

    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }

    fn from_rational(q: BigRational) -> Self {
        MultiPoly::constant(q)
    }

    fn as_rational(&self) -> Option<BigRational> {
        self.as_constant()
    }

    fn div_rational(&self, q: &BigRational) -> Result<Self, Error> {
        self.scale_div(q)
    }

    fn scale(&self, q: &BigRational) -> Self {
        MultiPoly::scale(self, q)
    }

    fn pow(&self, e: u32) -> Self {
        MultiPoly::pow(self, e)
    }
}
