//! External numbers `a + M_k`: the elements of the solid.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::SolidError;
use crate::magnitude::{MagIndex, Magnitude};
use crate::ratfun::RatFun;
use crate::series::{LaurentPoly, Rational, Valuation};

/// A scalar representative: either an exact rational function or a
/// truncated Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Exact(RatFun),
    Poly(LaurentPoly),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Poly(p) => p.is_zero(),
        }
    }

    pub fn valuation(&self) -> Valuation {
        match self {
            Scalar::Exact(r) => r.valuation(),
            Scalar::Poly(p) => p.valuation(),
        }
    }

    pub fn signum(&self) -> Ordering {
        match self {
            Scalar::Exact(r) => r.signum(),
            Scalar::Poly(p) => p.signum(),
        }
    }

    /// Terms below the finite index `k` (everything absorbed for `−∞`).
    ///
    /// # Panics
    /// When `k = +∞` and the scalar is a non-polynomial rational function.
    pub fn expand_below(&self, k: MagIndex) -> LaurentPoly {
        match self {
            Scalar::Exact(r) => r.expand_below(k).expect("finite truncation"),
            Scalar::Poly(p) => p.truncate_below(k),
        }
    }

    pub fn to_ratfun(&self) -> RatFun {
        match self {
            Scalar::Exact(r) => r.clone(),
            Scalar::Poly(p) => RatFun::from(p),
        }
    }

    fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Poly(p) => Scalar::Poly(-p),
        }
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::Poly(p)
    }
}

impl From<RatFun> for Scalar {
    fn from(r: RatFun) -> Self {
        Scalar::Exact(r)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::Poly(LaurentPoly::constant(c))
    }
}

/// Sign class of an element under the order of the solid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    Negative,
    MagnitudeZero,
    Positive,
}

/// An element `a + M_k` in canonical form.
///
/// If `k` is finite every exponent of `a` is below `k`; if `k = −∞` the
/// representative is zero; if `k = +∞` the representative is an exact
/// rational function. Two external numbers are equal iff their canonical
/// forms coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExternalNumber {
    repr: Scalar,
    mag: Magnitude,
}

impl ExternalNumber {
    /// Quotient map onto canonical forms: truncates `repr` below the index
    /// of `mag`.
    pub fn canonicalize(repr: impl Into<Scalar>, mag: Magnitude) -> Self {
        let repr = repr.into();
        let repr = match mag.index() {
            MagIndex::PosInf => Scalar::Exact(repr.to_ratfun()),
            k => Scalar::Poly(repr.expand_below(k)),
        };
        ExternalNumber { repr, mag }
    }

    pub fn precise(value: impl Into<Scalar>) -> Self {
        ExternalNumber::canonicalize(value, Magnitude::ZERO)
    }

    pub fn zero() -> Self {
        ExternalNumber::precise(RatFun::zero())
    }

    pub fn one() -> Self {
        ExternalNumber::precise(RatFun::one())
    }

    pub fn eps() -> Self {
        ExternalNumber::precise(LaurentPoly::eps_pow(1))
    }

    /// The magnitude `M_k` as an element.
    pub fn magnitude_element(mag: Magnitude) -> Self {
        ExternalNumber::canonicalize(LaurentPoly::zero(), mag)
    }

    pub fn max_magnitude() -> Self {
        ExternalNumber::magnitude_element(Magnitude::MAX)
    }

    pub fn representative(&self) -> &Scalar {
        &self.repr
    }

    /// The neutral magnitude `e(x)`.
    pub fn magnitude(&self) -> Magnitude {
        self.mag
    }

    /// `e(x)` as an element of the solid.
    pub fn neutral(&self) -> ExternalNumber {
        ExternalNumber::magnitude_element(self.mag)
    }

    pub fn is_precise(&self) -> bool {
        self.mag.is_zero()
    }

    /// `x = e(x)`.
    pub fn is_magnitude(&self) -> bool {
        self.repr.is_zero()
    }

    /// `x ≠ e(x)`.
    pub fn is_zeroless(&self) -> bool {
        !self.is_magnitude()
    }

    /// Precise part and magnitude, with `precise + e(x) = x`.
    pub fn decompose(&self) -> (ExternalNumber, Magnitude) {
        (ExternalNumber::precise(self.repr.to_ratfun()), self.mag)
    }

    /// Index `j − val(a)` of the relative uncertainty of a zeroless element.
    fn relative_index(&self) -> MagIndex {
        match (self.mag.index(), self.repr.valuation()) {
            (MagIndex::Finite(j), Valuation::Finite(v)) => MagIndex::Finite(j - v),
            (MagIndex::PosInf, Valuation::Finite(_)) => MagIndex::PosInf,
            _ => unreachable!("relative index of a magnitude"),
        }
    }

    /// The individualized unity `u(x) = 1 + M_{j − val(a)}`.
    pub fn unity(&self) -> Result<ExternalNumber, SolidError> {
        if self.is_magnitude() {
            return Err(SolidError::UnityOfMagnitude);
        }
        Ok(ExternalNumber::canonicalize(
            RatFun::one(),
            Magnitude::from_index(self.relative_index()),
        ))
    }

    /// The multiplicative inverse, satisfying `x * x⁻¹ = u(x)`.
    pub fn inverse(&self) -> Result<ExternalNumber, SolidError> {
        match (&self.repr, self.mag.index()) {
            _ if self.is_magnitude() => Err(SolidError::InverseOfMagnitude),
            (Scalar::Exact(r), _) => Ok(ExternalNumber::precise(r.inv().expect("nonzero"))),
            (Scalar::Poly(a), MagIndex::Finite(j)) => {
                let v = a.valuation().finite().expect("nonzero");
                let below = j - 2 * v;
                let repr = a.series_invert(below).expect("j > val(a)");
                Ok(ExternalNumber::canonicalize(repr, Magnitude::new(below)))
            }
            (Scalar::Poly(_), _) => unreachable!("non-canonical element"),
        }
    }

    /// Relative uncertainty `R(x)`: `e(u(x))` for zeroless `x`, the maximal
    /// magnitude for magnitudes.
    pub fn relative_uncertainty(&self) -> Magnitude {
        if self.is_magnitude() {
            Magnitude::MAX
        } else {
            Magnitude::from_index(self.relative_index())
        }
    }

    pub fn classify(&self) -> SignClass {
        match self.repr.signum() {
            Ordering::Equal => SignClass::MagnitudeZero,
            Ordering::Greater => SignClass::Positive,
            Ordering::Less => SignClass::Negative,
        }
    }

    /// `e(x) <= x`; magnitudes are positive.
    pub fn is_positive(&self) -> bool {
        self.classify() != SignClass::Negative
    }

    /// `x < e(x)`.
    pub fn is_negative(&self) -> bool {
        self.classify() == SignClass::Negative
    }

    pub fn abs(&self) -> ExternalNumber {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, n: i64) -> Result<ExternalNumber, SolidError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = ExternalNumber::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Order of the solid.
    ///
    /// When the difference of representatives is not absorbed by either
    /// magnitude its sign decides; otherwise one element contains the other
    /// and the narrower one is smaller.
    pub fn compare(&self, other: &ExternalNumber) -> Ordering {
        let m = self.mag.index().min(other.mag.index());
        let sign = match m {
            MagIndex::PosInf => (&other.repr.to_ratfun() - &self.repr.to_ratfun()).signum(),
            MagIndex::NegInf => Ordering::Equal,
            MagIndex::Finite(_) => {
                (&other.repr.expand_below(m) - &self.repr.expand_below(m)).signum()
            }
        };
        match sign {
            Ordering::Greater => Ordering::Less,
            Ordering::Less => Ordering::Greater,
            Ordering::Equal => other.mag.index().cmp(&self.mag.index()),
        }
    }
}

impl PartialOrd for ExternalNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExternalNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl From<Magnitude> for ExternalNumber {
    fn from(mag: Magnitude) -> Self {
        ExternalNumber::magnitude_element(mag)
    }
}

impl From<Rational> for ExternalNumber {
    fn from(c: Rational) -> Self {
        ExternalNumber::precise(c)
    }
}

impl From<i64> for ExternalNumber {
    fn from(n: i64) -> Self {
        ExternalNumber::precise(crate::series::integer(n))
    }
}

impl Add for &ExternalNumber {
    type Output = ExternalNumber;

    fn add(self, rhs: &ExternalNumber) -> ExternalNumber {
        let mag = self.mag + rhs.mag;
        match (&self.repr, &rhs.repr, mag.index()) {
            (Scalar::Exact(a), Scalar::Exact(b), MagIndex::PosInf) => {
                ExternalNumber::precise(a + b)
            }
            (a, b, k) => ExternalNumber::canonicalize(&a.expand_below(k) + &b.expand_below(k), mag),
        }
    }
}

impl Neg for &ExternalNumber {
    type Output = ExternalNumber;

    fn neg(self) -> ExternalNumber {
        ExternalNumber {
            repr: self.repr.neg(),
            mag: self.mag,
        }
    }
}

impl Sub for &ExternalNumber {
    type Output = ExternalNumber;

    fn sub(self, rhs: &ExternalNumber) -> ExternalNumber {
        self + &(-rhs)
    }
}

/// `(a + M_j)(b + M_k) = ab + M_{min(j + val b, k + val a, j + k)}`.
impl Mul for &ExternalNumber {
    type Output = ExternalNumber;

    fn mul(self, rhs: &ExternalNumber) -> ExternalNumber {
        let (a, j) = (&self.repr, self.mag.index());
        let (b, k) = (&rhs.repr, rhs.mag.index());
        let index = (j + b.valuation()).min(k + a.valuation()).min(j + k);
        let mag = Magnitude::from_index(index);
        match index {
            MagIndex::PosInf => ExternalNumber::precise(&a.to_ratfun() * &b.to_ratfun()),
            MagIndex::NegInf => ExternalNumber::magnitude_element(mag),
            MagIndex::Finite(below) => {
                let (Some(va), Some(vb)) = (a.valuation().finite(), b.valuation().finite()) else {
                    return ExternalNumber::magnitude_element(mag);
                };
                let a = a.expand_below(MagIndex::Finite(below - vb));
                let b = b.expand_below(MagIndex::Finite(below - va));
                ExternalNumber::canonicalize(a.mul_below(&b, below), mag)
            }
        }
    }
}

/// Division `x * inv(y)`.
///
/// # Panics
/// When `rhs` is a magnitude; use [`ExternalNumber::inverse`] to handle that
/// case.
impl Div for &ExternalNumber {
    type Output = ExternalNumber;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExternalNumber) -> ExternalNumber {
        self * &rhs.inverse().expect("division by a magnitude")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for ExternalNumber {
            type Output = ExternalNumber;
            fn $method(self, rhs: ExternalNumber) -> ExternalNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExternalNumber> for ExternalNumber {
            type Output = ExternalNumber;
            fn $method(self, rhs: &ExternalNumber) -> ExternalNumber {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExternalNumber> for &ExternalNumber {
            type Output = ExternalNumber;
            fn $method(self, rhs: ExternalNumber) -> ExternalNumber {
                self.$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for ExternalNumber {
    type Output = ExternalNumber;

    fn neg(self) -> ExternalNumber {
        -&self
    }
}

/// Canonical expression syntax, re-parseable by [`crate::syntax::parse_expr`].
impl fmt::Display for ExternalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.repr, self.mag.index()) {
            (Scalar::Exact(r), _) => write!(f, "{r}"),
            (repr, _) if repr.is_zero() => write!(f, "{}", self.mag),
            (Scalar::Poly(p), _) => write!(f, "{p} + {}", self.mag),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{integer, rational};

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, integer(c))))
    }

    fn en(terms: &[(i64, i64)], k: i64) -> ExternalNumber {
        ExternalNumber::canonicalize(lp(terms), Magnitude::new(k))
    }

    fn m(k: i64) -> ExternalNumber {
        ExternalNumber::magnitude_element(Magnitude::new(k))
    }

    fn precise(terms: &[(i64, i64)]) -> ExternalNumber {
        ExternalNumber::precise(lp(terms))
    }

    #[test]
    fn canonicalize_examples() {
        let x = en(&[(0, 1), (1, 1), (2, 1)], 2);
        assert_eq!(x.representative(), &Scalar::Poly(lp(&[(0, 1), (1, 1)])));
        assert_eq!(x.magnitude(), Magnitude::new(2));
        assert_eq!(en(&[(3, 1)], 1), m(1));
        let g = RatFun::from(lp(&[(0, 1), (1, -1)])).inv().unwrap();
        assert_eq!(
            ExternalNumber::canonicalize(g, Magnitude::new(2)),
            en(&[(0, 1), (1, 1)], 2)
        );
    }

    #[test]
    fn addition_examples() {
        let x = ExternalNumber::canonicalize(rational(3, 2), Magnitude::new(0));
        assert_eq!(&x + &ExternalNumber::zero(), x);
        assert_eq!(&en(&[(0, 1)], 2) + &en(&[(1, 1)], 1), en(&[(0, 1)], 1));
        assert_eq!(&m(1) + &m(3), m(1));
    }

    #[test]
    fn negation_examples() {
        assert_eq!(-&en(&[(0, 1)], 1), en(&[(0, -1)], 1));
        assert_eq!(-&m(2), m(2));
        let x = en(&[(1, 1)], 3);
        assert_eq!(-&(-&x), x);
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&en(&[(0, 2)], 1) * &en(&[(0, 3)], 2), en(&[(0, 6)], 1));
        assert_eq!(&m(1) * &m(2), m(3));
        assert_eq!(
            &en(&[(0, 1)], 1) * &ExternalNumber::zero(),
            ExternalNumber::zero()
        );
        assert_eq!(
            &ExternalNumber::max_magnitude() * &ExternalNumber::zero(),
            ExternalNumber::zero()
        );
        assert_eq!(
            &ExternalNumber::max_magnitude() * &ExternalNumber::max_magnitude(),
            ExternalNumber::max_magnitude()
        );
    }

    #[test]
    fn precise_times_imprecise_expands_the_quotient() {
        let g = ExternalNumber::precise(RatFun::from(lp(&[(0, 1), (1, -1)])).inv().unwrap());
        // 1/(1-eps) * (eps + M_3) = eps + eps^2 + M_3
        assert_eq!(&g * &en(&[(1, 1)], 3), en(&[(1, 1), (2, 1)], 3));
    }

    #[test]
    fn magnitude_examples() {
        assert_eq!(en(&[(0, 1)], 1).magnitude(), Magnitude::new(1));
        assert_eq!(ExternalNumber::zero().magnitude(), Magnitude::ZERO);
        assert_eq!(ExternalNumber::max_magnitude().magnitude(), Magnitude::MAX);
    }

    #[test]
    fn unity_examples() {
        let x = en(&[(1, 1)], 3);
        assert_eq!(x.unity(), Ok(en(&[(0, 1)], 2)));
        assert_eq!(&x * &x.unity().unwrap(), x);
        assert_eq!(precise(&[(0, 5)]).unity(), Ok(ExternalNumber::one()));
        assert_eq!(m(2).unity(), Err(SolidError::UnityOfMagnitude));
    }

    #[test]
    fn inverse_examples() {
        let x = en(&[(1, 1)], 3);
        let inv = x.inverse().unwrap();
        assert_eq!(inv, en(&[(-1, 1)], 1));
        assert_eq!(&x * &inv, x.unity().unwrap());
        // (1+eps)(1-eps) = 1 - eps^2, absorbed below index 2
        assert_eq!(
            en(&[(0, 1), (1, 1)], 2).inverse(),
            Ok(en(&[(0, 1), (1, -1)], 2))
        );
        assert_eq!(m(1).inverse(), Err(SolidError::InverseOfMagnitude));
    }

    #[test]
    fn relative_uncertainty_examples() {
        let x = en(&[(1, 1)], 3);
        assert_eq!(x.relative_uncertainty(), Magnitude::new(2));
        assert_eq!(
            (&x.neutral() * &x.inverse().unwrap()).magnitude(),
            Magnitude::new(2)
        );
        assert_eq!(precise(&[(0, 5)]).relative_uncertainty(), Magnitude::ZERO);
        assert_eq!(m(7).relative_uncertainty(), Magnitude::MAX);
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(
            ExternalNumber::zero().compare(&ExternalNumber::one()),
            Ordering::Less
        );
        assert_eq!(m(2).compare(&m(1)), Ordering::Less);
        assert_eq!(en(&[(0, 1)], 1).compare(&en(&[(0, 1)], 0)), Ordering::Less);
        assert_eq!(m(1).compare(&m(1)), Ordering::Equal);
        assert_eq!(precise(&[(2, -1)]).compare(&m(1)), Ordering::Less);
        assert_eq!(
            precise(&[(0, 1)]).compare(&en(&[(0, 1)], 4)),
            Ordering::Less
        );
    }

    #[test]
    fn absolute_value_examples() {
        assert_eq!(en(&[(1, -1)], 2).abs(), en(&[(1, 1)], 2));
        assert_eq!(m(3).abs(), m(3));
        assert_eq!(precise(&[(0, 3)]).abs(), precise(&[(0, 3)]));
        assert_eq!(precise(&[(0, -3)]).abs(), precise(&[(0, 3)]));
    }

    #[test]
    fn decompose_examples() {
        let (p, mag) = en(&[(0, 1), (1, 1)], 2).decompose();
        assert_eq!((p, mag), (precise(&[(0, 1), (1, 1)]), Magnitude::new(2)));
        assert_eq!(
            m(1).decompose(),
            (ExternalNumber::zero(), Magnitude::new(1))
        );
        let half = ExternalNumber::precise(rational(7, 2));
        assert_eq!(half.decompose(), (half.clone(), Magnitude::ZERO));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(en(&[(1, 1)], 2).classify(), SignClass::Positive);
        assert_eq!(en(&[(0, -1)], 1).classify(), SignClass::Negative);
        assert_eq!(m(5).classify(), SignClass::MagnitudeZero);
        assert_eq!(
            en(&[(0, -1)], 1).compare(&m(1)),
            Ordering::Less,
            "classification agrees with comparison against e(x)"
        );
    }

    #[test]
    fn display() {
        assert_eq!(en(&[(0, 1), (1, 1)], 2).to_string(), "1 + eps + M(2)");
        assert_eq!(ExternalNumber::zero().to_string(), "0");
        assert_eq!(ExternalNumber::max_magnitude().to_string(), "Mmax");
        let g = RatFun::from(lp(&[(0, 1), (1, -1)])).inv().unwrap();
        assert_eq!(ExternalNumber::precise(g).to_string(), "1/(1 - eps)");
        assert_eq!(m(-2).to_string(), "M(-2)");
    }
}
