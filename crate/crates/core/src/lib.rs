//! Exact arithmetic in a concrete *solid*: external numbers `a + M_k` over
//! the field `ℚ(eps)` of rational functions in a positive infinitesimal.
//!
//! * [`series`] and [`ratfun`] provide the scalars: truncated Laurent
//!   polynomials and exact rational functions.
//! * [`magnitude`] and [`number`] build the solid itself.
//! * [`laws`] decides when the ordinary distributive law holds.
//! * [`conformance`] checks every axiom and derived theorem on random
//!   elements.
//! * [`syntax`] parses and prints the expression language used by the CLI.

pub mod conformance;
pub mod error;
pub mod laws;
pub mod magnitude;
pub mod number;
pub mod ratfun;
pub mod series;
pub mod syntax;

pub use error::{LawError, SeriesError, SolidError};
pub use laws::{dist_decide, DistBranch, DistReport};
pub use magnitude::{MagIndex, Magnitude};
pub use number::{ExternalNumber, Scalar, SignClass};
pub use ratfun::RatFun;
pub use series::{LaurentPoly, Rational, Valuation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/external-numbers.md")]
    struct ExternalNumbers;
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    struct Arithmetic;
    #[doc = include_str!("../../../book/src/order.md")]
    struct Order;
    #[doc = include_str!("../../../book/src/distributivity.md")]
    struct Distributivity;
    #[doc = include_str!("../../../book/src/conformance.md")]
    struct Conformance;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
