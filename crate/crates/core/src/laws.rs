//! When does `x(y+z) = xy + xz` hold?
//!
//! In a solid the distributive law only holds up to the correction
//! magnitude `e(x)y + e(x)z`:
//!
//! ```text
//! xy + xz = x(y+z) + e(x)y + e(x)z
//! ```
//!
//! and ordinary distributivity holds exactly when either the magnitude of
//! `x` distributes over `y + z`, or `x` is relatively no less precise than
//! the sharper of `y` and `z`:
//!
//! ```text
//! xy + xz = x(y+z)  ⇔  e(x)(y+z) = e(x)y + e(x)z  ∨  R(x) ≤ R(y) + R(z)
//! ```

use std::fmt;

use crate::error::LawError;
use crate::number::ExternalNumber;

/// Which disjunct of the distributivity criterion applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DistBranch {
    /// `e(x)(y+z) = e(x)y + e(x)z`.
    MagnitudeDistributes,
    /// The first disjunct fails but `R(x) <= R(y) + R(z)`.
    RelativeUncertainty,
    /// Neither disjunct holds.
    Fails,
}

impl fmt::Display for DistBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistBranch::MagnitudeDistributes => "magnitude",
            DistBranch::RelativeUncertainty => "relative",
            DistBranch::Fails => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistReport {
    /// `lhs == rhs`, evaluated directly.
    pub holds: bool,
    pub branch: DistBranch,
    /// `x(y+z)`
    pub lhs: ExternalNumber,
    /// `xy + xz`
    pub rhs: ExternalNumber,
    /// `e(x)y + e(x)z`
    pub correction: ExternalNumber,
}

impl DistReport {
    /// Truth value of the criterion's disjunction.
    pub fn criterion_holds(&self) -> bool {
        self.branch != DistBranch::Fails
    }
}

/// `e(x)(y+z) = e(x)y + e(x)z`
pub fn magnitude_distributes(x: &ExternalNumber, y: &ExternalNumber, z: &ExternalNumber) -> bool {
    let e = x.neutral();
    &e * &(y + z) == &(&e * y) + &(&e * z)
}

/// `R(x) <= R(y) + R(z)`
pub fn relatively_sharp(x: &ExternalNumber, y: &ExternalNumber, z: &ExternalNumber) -> bool {
    x.relative_uncertainty() <= y.relative_uncertainty() + z.relative_uncertainty()
}

/// Evaluates both sides of the distributive law and both disjuncts of the
/// criterion. The magnitude branch takes priority when both disjuncts hold.
pub fn dist_decide(x: &ExternalNumber, y: &ExternalNumber, z: &ExternalNumber) -> DistReport {
    let lhs = x * &(y + z);
    let rhs = &(x * y) + &(x * z);
    let e = x.neutral();
    let correction = &(&e * y) + &(&e * z);
    let branch = if magnitude_distributes(x, y, z) {
        DistBranch::MagnitudeDistributes
    } else if relatively_sharp(x, y, z) {
        DistBranch::RelativeUncertainty
    } else {
        DistBranch::Fails
    };
    DistReport {
        holds: lhs == rhs,
        branch,
        lhs,
        rhs,
        correction,
    }
}

/// `x(y+z) <= xy + xz`
pub fn subdist_check(x: &ExternalNumber, y: &ExternalNumber, z: &ExternalNumber) -> bool {
    x * &(y + z) <= &(x * y) + &(x * z)
}

/// Common value of `xy + xz` and `x(y+z) + e(x)y + e(x)z`.
pub fn axiom22_residual(
    x: &ExternalNumber,
    y: &ExternalNumber,
    z: &ExternalNumber,
) -> Result<ExternalNumber, LawError> {
    let lhs = &(x * y) + &(x * z);
    let e = x.neutral();
    let rhs = &(&(x * &(y + z)) + &(&e * y)) + &(&e * z);
    if lhs == rhs {
        Ok(lhs)
    } else {
        Err(LawError::ModelViolation {
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        })
    }
}

/// Special situations in which distributivity holds unconditionally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialCase {
    /// `y` and `z` are magnitudes.
    BothMagnitudes,
    /// `z` is a magnitude with `e(z) <= e(y)`.
    AbsorbedMagnitude,
    /// `y` and `z` are both positive or both negative.
    SameSign,
    /// `z` is ignored; checks `xy = x(y + e(y)) = xy + x e(y)`.
    YPlusOwnMagnitude,
}

impl SpecialCase {
    fn name(self) -> &'static str {
        match self {
            SpecialCase::BothMagnitudes => "both-magnitudes",
            SpecialCase::AbsorbedMagnitude => "absorbed-magnitude",
            SpecialCase::SameSign => "same-sign",
            SpecialCase::YPlusOwnMagnitude => "y-plus-own-magnitude",
        }
    }

    pub fn hypothesis(self, y: &ExternalNumber, z: &ExternalNumber) -> bool {
        match self {
            SpecialCase::BothMagnitudes => y.is_magnitude() && z.is_magnitude(),
            SpecialCase::AbsorbedMagnitude => z.is_magnitude() && z.magnitude() <= y.magnitude(),
            SpecialCase::SameSign => {
                (y.is_positive() && z.is_positive()) || (y.is_negative() && z.is_negative())
            }
            SpecialCase::YPlusOwnMagnitude => true,
        }
    }
}

/// Whether the distributive identity of `case` holds for the operands.
pub fn dist_special_cases(
    x: &ExternalNumber,
    y: &ExternalNumber,
    z: &ExternalNumber,
    case: SpecialCase,
) -> Result<bool, LawError> {
    if !case.hypothesis(y, z) {
        return Err(LawError::Hypothesis { case: case.name() });
    }
    Ok(match case {
        SpecialCase::YPlusOwnMagnitude => {
            let xy = x * y;
            let e = y.neutral();
            x * &(y + &e) == xy && &xy + &(x * &e) == xy
        }
        _ => x * &(y + z) == &(x * y) + &(x * z),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnitude::Magnitude;
    use crate::series::{integer, LaurentPoly};

    fn en(c: i64, k: i64) -> ExternalNumber {
        ExternalNumber::canonicalize(integer(c), Magnitude::new(k))
    }

    fn m(k: i64) -> ExternalNumber {
        ExternalNumber::from(Magnitude::new(k))
    }

    fn n(c: i64) -> ExternalNumber {
        ExternalNumber::from(c)
    }

    #[test]
    fn opposite_precise_terms_break_distributivity() {
        let r = dist_decide(&en(1, 1), &n(1), &n(-1));
        assert!(!r.holds);
        assert_eq!(r.branch, DistBranch::Fails);
        assert_eq!(r.lhs, ExternalNumber::zero());
        assert_eq!(r.rhs, m(1));
        assert_eq!(r.correction, m(1));
    }

    #[test]
    fn same_sign_terms_distribute_through_the_magnitude() {
        let r = dist_decide(&en(1, 1), &n(1), &n(1));
        assert!(r.holds);
        assert_eq!(r.branch, DistBranch::MagnitudeDistributes);
        assert_eq!(r.lhs, en(2, 1));
        assert_eq!(r.rhs, en(2, 1));
    }

    #[test]
    fn sharp_factor_distributes_by_relative_uncertainty() {
        let r = dist_decide(&en(1, 2), &en(1, 1), &en(-1, 1));
        assert!(r.holds);
        assert_eq!(r.branch, DistBranch::RelativeUncertainty);
        assert_eq!(r.lhs, m(1));
        assert_eq!(r.rhs, m(1));
    }

    #[test]
    fn subdistributivity_examples() {
        assert!(subdist_check(&en(1, 1), &n(1), &n(-1)));
        assert!(subdist_check(&ExternalNumber::zero(), &en(3, 2), &m(-1)));
        assert!(subdist_check(&m(1), &n(1), &n(1)));
    }

    #[test]
    fn residual_examples() {
        assert_eq!(axiom22_residual(&en(1, 1), &n(1), &n(-1)), Ok(m(1)));
        let (x, y, z) = (n(2), n(3), n(-7));
        assert_eq!(axiom22_residual(&x, &y, &z), Ok(n(-8)));
        let eps = ExternalNumber::precise(LaurentPoly::eps_pow(1));
        assert_eq!(axiom22_residual(&m(2), &eps, &eps), Ok(m(3)));
    }

    #[test]
    fn special_case_examples() {
        let x = en(1, 0);
        assert_eq!(
            dist_special_cases(&x, &m(1), &m(2), SpecialCase::BothMagnitudes),
            Ok(true)
        );
        let x = &ExternalNumber::eps() + &m(2);
        assert_eq!(
            dist_special_cases(&x, &n(2), &n(3), SpecialCase::SameSign),
            Ok(true)
        );
        assert_eq!(
            dist_special_cases(&x, &en(5, 1), &n(0), SpecialCase::YPlusOwnMagnitude),
            Ok(true)
        );
        assert_eq!(
            dist_special_cases(&x, &en(5, 1), &m(0), SpecialCase::AbsorbedMagnitude),
            Err(LawError::Hypothesis {
                case: "absorbed-magnitude"
            })
        );
        assert_eq!(
            dist_special_cases(&x, &n(1), &n(-1), SpecialCase::SameSign),
            Err(LawError::Hypothesis { case: "same-sign" })
        );
    }
}
