//! The expression language: `1 + eps^2 + M(3)`, `inv(1+eps+M(2))`, ...
//!
//! Printing is [`ExternalNumber`]'s `Display`; every canonical value prints
//! to an expression that evaluates back to itself.

mod parse;

use std::fmt;

use crate::error::SolidError;
use crate::magnitude::Magnitude;
use crate::number::ExternalNumber;
use crate::series::{LaurentPoly, Rational};

pub use parse::{parse_expr, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    /// `e`
    Neutral,
    /// `u`
    Unity,
    /// `inv`
    Inverse,
    /// `abs`
    Abs,
    /// `R`
    RelativeUncertainty,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Neutral => "e",
            Func::Unity => "u",
            Func::Inverse => "inv",
            Func::Abs => "abs",
            Func::RelativeUncertainty => "R",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Eps,
    Magnitude(i64),
    MaxMagnitude,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Func, Box<Expr>),
}

/// Prefix form of the tree, e.g. `add(1, pow(eps, 2))`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(r) => write!(f, "{r}"),
            Expr::Eps => f.write_str("eps"),
            Expr::Magnitude(k) => write!(f, "mag({k})"),
            Expr::MaxMagnitude => f.write_str("Mmax"),
            Expr::Neg(e) => write!(f, "neg({e})"),
            Expr::Add(a, b) => write!(f, "add({a}, {b})"),
            Expr::Sub(a, b) => write!(f, "sub({a}, {b})"),
            Expr::Mul(a, b) => write!(f, "mul({a}, {b})"),
            Expr::Div(a, b) => write!(f, "div({a}, {b})"),
            Expr::Pow(e, n) => write!(f, "pow({e}, {n})"),
            Expr::Call(func, e) => write!(f, "{}({e})", func.name()),
        }
    }
}

pub fn eval_expr(expr: &Expr) -> Result<ExternalNumber, SolidError> {
    Ok(match expr {
        Expr::Rational(r) => ExternalNumber::precise(r.clone()),
        Expr::Eps => ExternalNumber::precise(LaurentPoly::eps_pow(1)),
        Expr::Magnitude(k) => ExternalNumber::from(Magnitude::new(*k)),
        Expr::MaxMagnitude => ExternalNumber::max_magnitude(),
        Expr::Neg(e) => -eval_expr(e)?,
        Expr::Add(a, b) => eval_expr(a)? + eval_expr(b)?,
        Expr::Sub(a, b) => eval_expr(a)? - eval_expr(b)?,
        Expr::Mul(a, b) => eval_expr(a)? * eval_expr(b)?,
        Expr::Div(a, b) => eval_expr(a)? * eval_expr(b)?.inverse()?,
        Expr::Pow(e, n) => eval_expr(e)?.pow(*n)?,
        Expr::Call(func, e) => {
            let x = eval_expr(e)?;
            match func {
                Func::Neutral => x.neutral(),
                Func::Unity => x.unity()?,
                Func::Inverse => x.inverse()?,
                Func::Abs => x.abs(),
                Func::RelativeUncertainty => ExternalNumber::from(x.relative_uncertainty()),
            }
        }
    })
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("error: {0}")]
    Solid(#[from] SolidError),
}

/// Parses and evaluates in one step.
pub fn evaluate(input: &str) -> Result<ExternalNumber, EvalError> {
    Ok(eval_expr(&parse_expr(input)?)?)
}
