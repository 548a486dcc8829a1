//! Finitely supported Laurent polynomials in one positive infinitesimal `eps`.
//!
//! A [`LaurentPoly`] is the truncated representative of a scalar: the terms
//! below some magnitude index. The order on scalars is the usual one on
//! `ℚ((eps))`, decided by the sign of the leading (lowest exponent)
//! coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::magnitude::MagIndex;

pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The `eps`-order of a scalar; `+∞` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

/// Finitely supported map exponent → nonzero rational coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `eps^exp`.
    pub fn eps_pow(exp: i64) -> Self {
        LaurentPoly::monomial(Rational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c);
        }
        LaurentPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_some_and(One::is_one)
    }

    pub fn coeff(&self, exp: i64) -> Option<&Rational> {
        self.terms.get(&exp)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match self.terms.keys().next() {
            Some(e) => Valuation::Finite(*e),
            None => Valuation::Infinite,
        }
    }

    /// Largest stored exponent, if any.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Result<&Rational, SeriesError> {
        self.terms
            .values()
            .next()
            .ok_or(SeriesError::NoLeadingCoefficient)
    }

    /// Sign in the order of `ℚ((eps))`.
    pub fn signum(&self) -> Ordering {
        match self.terms.values().next() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    /// Keeps exactly the terms with exponent `< k`.
    pub fn truncate_below(&self, k: MagIndex) -> LaurentPoly {
        match k {
            MagIndex::PosInf => self.clone(),
            MagIndex::NegInf => LaurentPoly::zero(),
            MagIndex::Finite(k) => LaurentPoly {
                terms: self
                    .terms
                    .range(..k)
                    .map(|(e, c)| (*e, c.clone()))
                    .collect(),
            },
        }
    }

    /// Multiplies by `eps^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Product truncated below `below`; only the needed pairs are formed.
    pub fn mul_below(&self, other: &LaurentPoly, below: i64) -> LaurentPoly {
        let (Some(va), Some(vb)) = (self.valuation().finite(), other.valuation().finite()) else {
            return LaurentPoly::zero();
        };
        let mut out = BTreeMap::new();
        for (ea, ca) in self.terms.range(..below - vb) {
            for (eb, cb) in other.terms.range(..below - ea) {
                accumulate(&mut out, ea + eb, ca * cb);
            }
        }
        debug_assert!(out.keys().all(|e| *e >= va + vb));
        LaurentPoly { terms: out }
    }

    /// The unique `b` supported on `[-val(a), below)` with
    /// `truncate_below(a * b, below + val(a)) == 1`.
    ///
    /// Coefficients come from the usual recurrence for the reciprocal of a
    /// power series with nonzero constant term.
    pub fn series_invert(&self, below: i64) -> Result<LaurentPoly, SeriesError> {
        let v = self
            .valuation()
            .finite()
            .ok_or(SeriesError::InverseOfZero)?;
        if below <= -v {
            return Err(SeriesError::EmptyInversionWindow { below, lowest: -v });
        }
        let n = usize::try_from(below + v).expect("window is positive");
        // a = eps^v * (c_0 + c_1 eps + ...)
        let c: Vec<Rational> = (0..n)
            .map(|i| {
                self.coeff(v + i as i64)
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect();
        let inv_c0 = c[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        q.push(inv_c0.clone());
        for i in 1..n {
            let mut acc = Rational::zero();
            for m in 1..=i {
                if !c[m].is_zero() && !q[i - m].is_zero() {
                    acc += &c[m] * &q[i - m];
                }
            }
            q.push(-acc * &inv_c0);
        }
        Ok(LaurentPoly::from_terms(
            q.into_iter().enumerate().map(|(i, qi)| (i as i64 - v, qi)),
        ))
    }
}

fn accumulate(terms: &mut BTreeMap<i64, Rational>, exp: i64, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(exp) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, *e, c.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, *e, -c);
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                accumulate(&mut terms, ea + eb, ca * cb);
            }
        }
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Writes the polynomial in the expression syntax, e.g. `1 - 3/2*eps^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            match (mag.is_one(), e) {
                (_, 0) => write!(f, "{mag}")?,
                (true, 1) => f.write_str("eps")?,
                (true, e) => write!(f, "eps^{e}")?,
                (false, 1) => write!(f, "{mag}*eps")?,
                (false, e) => write!(f, "{mag}*eps^{e}")?,
            }
        }
        Ok(())
    }
}
