use thiserror::Error;

use crate::number::ExternalNumber;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("no leading coefficient: the scalar is zero")]
    NoLeadingCoefficient,
    #[error("cannot invert the zero scalar")]
    InverseOfZero,
    #[error(
        "inversion window ends at {below}, which does not exceed the lowest exponent {lowest}"
    )]
    EmptyInversionWindow { below: i64, lowest: i64 },
    #[error("infinite expansion: a non-polynomial quotient has no finite untruncated series")]
    InfiniteExpansion,
}

/// Errors raised by operations on external numbers whose axioms only
/// quantify over zeroless elements.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolidError {
    #[error("unity undefined for magnitudes")]
    UnityOfMagnitude,
    #[error("inverse undefined for magnitudes")]
    InverseOfMagnitude,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum LawError {
    #[error("hypothesis of the {case} case does not hold")]
    Hypothesis { case: &'static str },
    #[error("model violation: x*y + x*z = {lhs} but x*(y+z) + e(x)*y + e(x)*z = {rhs}")]
    ModelViolation {
        lhs: Box<ExternalNumber>,
        rhs: Box<ExternalNumber>,
    },
}
