//! Reference model of `a + M_k` as a set of representatives.
//!
//! Each operand is replaced by a handful of its members, the operation is
//! applied elementwise with plain polynomial arithmetic, and the result is
//! the smallest magnitude containing every difference from the image of the
//! representatives. Only polynomial representatives are supported.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use solid::{ExternalNumber, LaurentPoly, MagIndex, Magnitude, Scalar};

/// Exponent stand-in for an unbounded magnitude.
const FAR: i64 = -64;
/// Differences at or below this valuation are read as unbounded.
const UNBOUNDED: i64 = -32;

pub type Poly = BTreeMap<i64, BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn norm(mut p: Poly) -> Poly {
    p.retain(|_, c| !c.is_zero());
    p
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert_with(BigRational::zero) += c;
    }
    norm(out)
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert_with(BigRational::zero) += x * y;
        }
    }
    norm(out)
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let neg: Poly = b.iter().map(|(e, c)| (*e, -c)).collect();
    add(a, &neg)
}

fn mono(c: i64, e: i64) -> Poly {
    norm(Poly::from([(e, q(c))]))
}

/// Members of `M_k` used as perturbations.
fn perturbations(k: MagIndex) -> Vec<Poly> {
    match k {
        MagIndex::PosInf => vec![Poly::new()],
        MagIndex::Finite(k) => vec![
            Poly::new(),
            mono(1, k),
            mono(-1, k),
            add(&mono(1, k), &mono(1, k + 1)),
            mono(-2, k + 1),
        ],
        MagIndex::NegInf => vec![Poly::new(), mono(1, FAR), mono(-1, FAR)],
    }
}

/// Polynomial representative and magnitude index of a value.
pub fn split(x: &ExternalNumber) -> (Poly, MagIndex) {
    let repr = match x.representative() {
        Scalar::Poly(p) => p.clone(),
        Scalar::Exact(r) => {
            let (num, den) = r.parts();
            assert!(den.is_one(), "oracle needs polynomial operands, got {x}");
            num
        }
    };
    let poly = repr.terms().map(|(e, c)| (e, c.clone())).collect();
    (poly, x.magnitude().index())
}

fn to_external(p: &Poly, k: MagIndex) -> ExternalNumber {
    let lp = LaurentPoly::from_terms(p.iter().map(|(e, c)| (*e, c.clone())));
    ExternalNumber::canonicalize(lp, Magnitude::from_index(k))
}

fn apply(x: &ExternalNumber, y: &ExternalNumber, op: fn(&Poly, &Poly) -> Poly) -> ExternalNumber {
    let (a, j) = split(x);
    let (b, k) = split(y);
    let centre = op(&a, &b);
    let mut index = MagIndex::PosInf;
    for s in perturbations(j) {
        for t in perturbations(k) {
            let image = op(&add(&a, &s), &add(&b, &t));
            if let Some((&v, _)) = sub(&image, &centre).iter().next() {
                let v = if v <= UNBOUNDED {
                    MagIndex::NegInf
                } else {
                    MagIndex::Finite(v)
                };
                index = index.min(v);
            }
        }
    }
    to_external(&centre, index)
}

pub fn oracle_add(x: &ExternalNumber, y: &ExternalNumber) -> ExternalNumber {
    apply(x, y, add)
}

pub fn oracle_mul(x: &ExternalNumber, y: &ExternalNumber) -> ExternalNumber {
    apply(x, y, mul)
}

/// Every canonical value with at most two terms from `exponents` and
/// `coeffs`, combined with each magnitude index in `indices`.
pub fn grid(exponents: &[i64], coeffs: &[i64], indices: &[MagIndex]) -> Vec<ExternalNumber> {
    let mut reprs = vec![Poly::new()];
    for (n, &e1) in exponents.iter().enumerate() {
        for &c1 in coeffs.iter().filter(|c| **c != 0) {
            reprs.push(mono(c1, e1));
            for &e2 in &exponents[n + 1..] {
                for &c2 in coeffs.iter().filter(|c| **c != 0) {
                    reprs.push(add(&mono(c1, e1), &mono(c2, e2)));
                }
            }
        }
    }
    let mut out: Vec<ExternalNumber> = reprs
        .iter()
        .flat_map(|p| indices.iter().map(move |&k| to_external(p, k)))
        .collect();
    out.sort_by_key(|x| x.to_string());
    out.dedup();
    out
}
