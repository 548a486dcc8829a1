//! Exact rational functions in `eps`: the scalar field of precise elements.
//!
//! A nonzero value is stored as `eps^shift * num / den` where `num` and `den`
//! are ordinary polynomials with nonzero constant terms, coprime, and `den`
//! has constant term 1. The representation is unique, so equality is
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;
use crate::magnitude::MagIndex;
use crate::series::{LaurentPoly, Rational, Valuation};

/// Dense polynomial, coefficient `i` of `eps^i`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Poly(Vec<Rational>);

impl Poly {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    fn one() -> Self {
        Poly(vec![Rational::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    /// Exponent of the lowest nonzero term.
    fn order(&self) -> usize {
        self.0
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial")
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly(self.0[k..].to_vec())
    }

    fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Rational::zero(); k];
        c.extend(self.0.iter().cloned());
        Poly(c)
    }

    fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|c| c * s).collect())
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new(
            (0..n)
                .map(|i| match (self.0.get(i), other.0.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly(Vec::new());
        }
        let mut c = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (Poly(Vec::new()), self.clone());
        }
        let dl = d.lead();
        let mut quot = vec![Rational::zero(); self.0.len() - d.0.len() + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d.degree()];
            if top.is_zero() {
                continue;
            }
            let q = top / dl;
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(d.0.len() - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        let l = a.lead().recip();
        a.scale(&l)
    }

    fn eval_zero(&self) -> &Rational {
        &self.0[0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Zero,
    Quotient { shift: i64, num: Poly, den: Poly },
}

/// An exact element of `ℚ(eps)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun(Repr);

impl RatFun {
    pub fn zero() -> Self {
        RatFun(Repr::Zero)
    }

    pub fn one() -> Self {
        RatFun::from(&LaurentPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from(&LaurentPoly::constant(c))
    }

    /// `num / den`, both given as Laurent polynomials.
    ///
    /// Returns `None` when `den` is zero.
    pub fn quotient(num: &LaurentPoly, den: &LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(&RatFun::from(num) * &RatFun::from(den).inv().ok()?)
    }

    fn build(shift: i64, num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        let (on, od) = (num.order(), den.order());
        let shift = shift + on as i64 - od as i64;
        let (num, den) = (num.shift_down(on), den.shift_down(od));
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let norm = den.eval_zero().recip();
        RatFun(Repr::Quotient {
            shift,
            num: num.scale(&norm),
            den: den.scale(&norm),
        })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Zero)
    }

    pub fn valuation(&self) -> Valuation {
        match &self.0 {
            Repr::Zero => Valuation::Infinite,
            Repr::Quotient { shift, .. } => Valuation::Finite(*shift),
        }
    }

    /// `true` when the value is a Laurent polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        match &self.0 {
            Repr::Zero => true,
            Repr::Quotient { den, .. } => den.is_one(),
        }
    }

    /// Numerator and denominator as Laurent polynomials, with the `eps`
    /// shift folded into the numerator.
    pub fn parts(&self) -> (LaurentPoly, LaurentPoly) {
        match &self.0 {
            Repr::Zero => (LaurentPoly::zero(), LaurentPoly::one()),
            Repr::Quotient { shift, num, den } => (to_laurent(num, *shift), to_laurent(den, 0)),
        }
    }

    /// Sign of the leading series coefficient.
    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Zero => Ordering::Equal,
            Repr::Quotient { num, .. } => {
                // den(0) = 1, so the leading coefficient is num(0).
                if num.eval_zero().is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    pub fn inv(&self) -> Result<RatFun, SeriesError> {
        match &self.0 {
            Repr::Zero => Err(SeriesError::InverseOfZero),
            Repr::Quotient { shift, num, den } => {
                Ok(RatFun::build(-shift, den.clone(), num.clone()))
            }
        }
    }

    /// Series expansion truncated below `k`.
    pub fn expand_below(&self, k: MagIndex) -> Result<LaurentPoly, SeriesError> {
        let (shift, num, den) = match &self.0 {
            Repr::Zero => return Ok(LaurentPoly::zero()),
            Repr::Quotient { shift, num, den } => (*shift, num, den),
        };
        let k = match k {
            MagIndex::NegInf => return Ok(LaurentPoly::zero()),
            MagIndex::PosInf if den.is_one() => return Ok(to_laurent(num, shift)),
            MagIndex::PosInf => return Err(SeriesError::InfiniteExpansion),
            MagIndex::Finite(k) => k,
        };
        if k <= shift {
            return Ok(LaurentPoly::zero());
        }
        // q = num / den with den(0) = 1: q_n = num_n - sum_{i>=1} den_i q_{n-i}
        let n = (k - shift) as usize;
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = num.0.get(i).cloned().unwrap_or_else(Rational::zero);
            for (j, d) in den.0.iter().enumerate().skip(1).take(i) {
                if !d.is_zero() && !q[i - j].is_zero() {
                    acc -= d * &q[i - j];
                }
            }
            q.push(acc);
        }
        Ok(LaurentPoly::from_terms(
            q.into_iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c)),
        ))
    }
}

fn to_laurent(p: &Poly, shift: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        p.0.iter()
            .enumerate()
            .map(|(i, c)| (shift + i as i64, c.clone())),
    )
}

impl From<&LaurentPoly> for RatFun {
    fn from(p: &LaurentPoly) -> Self {
        let Some(v) = p.valuation().finite() else {
            return RatFun::zero();
        };
        let top = p.degree().expect("nonzero") - v;
        let mut c = vec![Rational::zero(); top as usize + 1];
        for (e, x) in p.terms() {
            c[(e - v) as usize] = x.clone();
        }
        RatFun(Repr::Quotient {
            shift: v,
            num: Poly(c),
            den: Poly::one(),
        })
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from(&p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;

    fn add(self, rhs: &RatFun) -> RatFun {
        match (&self.0, &rhs.0) {
            (Repr::Zero, _) => rhs.clone(),
            (_, Repr::Zero) => self.clone(),
            (
                Repr::Quotient {
                    shift: sa,
                    num: na,
                    den: da,
                },
                Repr::Quotient {
                    shift: sb,
                    num: nb,
                    den: db,
                },
            ) => {
                let s = (*sa).min(*sb);
                let left = na.shift_up((sa - s) as usize).mul(db);
                let right = nb.shift_up((sb - s) as usize).mul(da);
                RatFun::build(s, left.add(&right), da.mul(db))
            }
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        match &self.0 {
            Repr::Zero => RatFun::zero(),
            Repr::Quotient { shift, num, den } => RatFun(Repr::Quotient {
                shift: *shift,
                num: num.scale(&-Rational::one()),
                den: den.clone(),
            }),
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;

    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &RatFun) -> RatFun {
        match (&self.0, &rhs.0) {
            (Repr::Zero, _) | (_, Repr::Zero) => RatFun::zero(),
            (
                Repr::Quotient {
                    shift: sa,
                    num: na,
                    den: da,
                },
                Repr::Quotient {
                    shift: sb,
                    num: nb,
                    den: db,
                },
            ) => RatFun::build(sa + sb, na.mul(nb), da.mul(db)),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.parts();
        if den.is_one() {
            return write!(f, "{num}");
        }
        if num.len() == 1 {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::integer;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, integer(c))))
    }

    fn rf(terms: &[(i64, i64)]) -> RatFun {
        RatFun::from(lp(terms))
    }

    #[test]
    fn inverse_is_canonical_quotient() {
        let x = rf(&[(0, 1), (1, 1)]).inv().unwrap();
        let (num, den) = x.parts();
        assert_eq!(num, LaurentPoly::one());
        assert_eq!(den, lp(&[(0, 1), (1, 1)]));
        assert_eq!(x.valuation(), Valuation::Finite(0));
        assert_eq!(x.to_string(), "1/(1 + eps)");
    }

    #[test]
    fn field_examples() {
        assert!((&rf(&[(0, 1)]) + &rf(&[(0, -1)])).is_zero());
        let eps = rf(&[(1, 1)]);
        assert_eq!(&eps * &eps.inv().unwrap(), RatFun::one());
        assert_eq!(RatFun::zero().inv(), Err(SeriesError::InverseOfZero));
    }

    #[test]
    fn common_factors_cancel() {
        // (1 - eps^2) / (1 - eps) = 1 + eps
        let q = RatFun::quotient(&lp(&[(0, 1), (2, -1)]), &lp(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(q, rf(&[(0, 1), (1, 1)]));
        assert!(q.is_polynomial());
        // eps^3 / (2 eps + 2 eps^2) = eps^2 / (2 (1 + eps)), denominator normalized
        let q = RatFun::quotient(&lp(&[(3, 1)]), &lp(&[(1, 2), (2, 2)])).unwrap();
        assert_eq!(q.valuation(), Valuation::Finite(2));
        let (num, den) = q.parts();
        assert_eq!(num, LaurentPoly::monomial(crate::series::rational(1, 2), 2));
        assert_eq!(den, lp(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn expansion_examples() {
        let geometric = rf(&[(0, 1), (1, -1)]).inv().unwrap();
        // (1 - eps)(1 + eps + eps^2) = 1 - eps^3
        assert_eq!(
            geometric.expand_below(MagIndex::Finite(3)),
            Ok(lp(&[(0, 1), (1, 1), (2, 1)]))
        );
        assert_eq!(
            rf(&[(0, 1), (1, 1)]).expand_below(MagIndex::Finite(1)),
            Ok(lp(&[(0, 1)]))
        );
        assert_eq!(
            RatFun::zero().expand_below(MagIndex::Finite(5)),
            Ok(LaurentPoly::zero())
        );
        assert_eq!(
            geometric.expand_below(MagIndex::PosInf),
            Err(SeriesError::InfiniteExpansion)
        );
        assert_eq!(
            geometric.expand_below(MagIndex::NegInf),
            Ok(LaurentPoly::zero())
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(RatFun::one().signum(), Ordering::Greater);
        assert_eq!(rf(&[(1, -1)]).signum(), Ordering::Less);
        assert_eq!(RatFun::zero().signum(), Ordering::Equal);
        // 1/(1 - eps) - 1 = eps/(1 - eps) > 0
        let g = rf(&[(0, 1), (1, -1)]).inv().unwrap();
        assert_eq!((&g - &RatFun::one()).signum(), Ordering::Greater);
    }
}
