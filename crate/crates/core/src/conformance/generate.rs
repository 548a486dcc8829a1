//! Seeded random generation of canonical external numbers.

use std::ops::RangeInclusive;

use num_traits::One;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::magnitude::{MagIndex, Magnitude};
use crate::number::ExternalNumber;
use crate::ratfun::RatFun;
use crate::series::{integer, rational, LaurentPoly, Rational};

/// Shape of the random elements.
///
/// `p_extreme`, `p_magnitude` and `p_precise` are the probabilities that
/// [`Gen::any`] emits an extreme magnitude (`0` or `Mmax`), a finite
/// magnitude, or a precise element; the remainder are imprecise zeroless
/// elements. `p_opposite` is the probability that the third operand of a
/// generated triple is chosen almost opposite to the second.
#[derive(Clone, Debug, PartialEq)]
pub struct GenProfile {
    pub exponent_window: RangeInclusive<i64>,
    pub coeff_pool: Vec<Rational>,
    pub p_magnitude: f64,
    pub p_precise: f64,
    pub p_extreme: f64,
    pub max_terms: usize,
    pub p_opposite: f64,
}

impl Default for GenProfile {
    fn default() -> Self {
        GenProfile {
            exponent_window: -2..=3,
            coeff_pool: [
                (-2, 1),
                (-1, 1),
                (-1, 2),
                (1, 3),
                (1, 2),
                (1, 1),
                (3, 2),
                (2, 1),
                (3, 1),
            ]
            .iter()
            .map(|&(n, d)| rational(n, d))
            .collect(),
            p_magnitude: 0.15,
            p_precise: 0.25,
            p_extreme: 0.05,
            max_terms: 3,
            p_opposite: 0.25,
        }
    }
}

impl GenProfile {
    /// Every generated element is a magnitude.
    pub fn magnitudes_only() -> Self {
        GenProfile {
            p_magnitude: 0.85,
            p_precise: 0.0,
            p_extreme: 0.15,
            ..Default::default()
        }
    }

    pub fn precise_only() -> Self {
        GenProfile {
            p_magnitude: 0.0,
            p_precise: 1.0,
            p_extreme: 0.0,
            ..Default::default()
        }
    }

    /// Frequent `0` and `Mmax` operands.
    pub fn extremes() -> Self {
        GenProfile {
            p_magnitude: 0.15,
            p_precise: 0.2,
            p_extreme: 0.35,
            ..Default::default()
        }
    }

    /// Triples whose last two operands nearly cancel, with imprecise factors.
    pub fn near_opposite() -> Self {
        GenProfile {
            p_magnitude: 0.1,
            p_precise: 0.3,
            p_extreme: 0.02,
            p_opposite: 0.8,
            ..Default::default()
        }
    }

    /// Looks up a named preset: `default`, `magnitudes`, `precise`,
    /// `extremes` or `near-opposite`.
    pub fn named(name: &str) -> Option<Self> {
        Some(match name {
            "default" => GenProfile::default(),
            "magnitudes" => GenProfile::magnitudes_only(),
            "precise" => GenProfile::precise_only(),
            "extremes" => GenProfile::extremes(),
            "near-opposite" => GenProfile::near_opposite(),
            _ => return None,
        })
    }

    pub fn validate(&self) -> Result<(), String> {
        let probs = [
            self.p_magnitude,
            self.p_precise,
            self.p_extreme,
            self.p_opposite,
        ];
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err("probabilities must lie in [0, 1]".into());
        }
        if self.p_magnitude + self.p_precise + self.p_extreme > 1.0 + 1e-12 {
            return Err("p_magnitude + p_precise + p_extreme exceeds 1".into());
        }
        if self.exponent_window.is_empty() {
            return Err("exponent window is empty".into());
        }
        if self.coeff_pool.is_empty() || self.coeff_pool.iter().any(|c| c == &integer(0)) {
            return Err("coefficient pool must be nonempty and free of zero".into());
        }
        if self.max_terms == 0 {
            return Err("max_terms must be positive".into());
        }
        Ok(())
    }
}

/// Deterministic element generator for one trial.
pub struct Gen<'p> {
    rng: ChaCha8Rng,
    profile: &'p GenProfile,
}

impl<'p> Gen<'p> {
    pub fn new(seed: u64, profile: &'p GenProfile) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            profile,
        }
    }

    pub fn profile(&self) -> &GenProfile {
        self.profile
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.random_bool(p.clamp(0.0, 1.0))
    }

    fn lo(&self) -> i64 {
        *self.profile.exponent_window.start()
    }

    fn hi(&self) -> i64 {
        *self.profile.exponent_window.end()
    }

    fn exponent(&mut self) -> i64 {
        self.rng.random_range(self.profile.exponent_window.clone())
    }

    fn coeff(&mut self) -> Rational {
        self.profile
            .coeff_pool
            .choose(&mut self.rng)
            .expect("nonempty pool")
            .clone()
    }

    /// Polynomial with a nonzero leading term at `lead` and up to
    /// `max_terms - 1` further terms in `(lead, top]`.
    fn poly_led_by(&mut self, lead: i64, top: i64) -> LaurentPoly {
        let mut terms = vec![(lead, self.coeff())];
        if top > lead {
            for _ in 1..self.rng.random_range(1..=self.profile.max_terms) {
                let e = self.rng.random_range(lead + 1..=top);
                terms.push((e, self.coeff()));
            }
        }
        LaurentPoly::from_terms(terms)
    }

    /// An element drawn according to the profile's class probabilities.
    pub fn any(&mut self) -> ExternalNumber {
        let p = self.profile;
        let u: f64 = self.rng.random();
        if u < p.p_extreme {
            self.extreme_magnitude()
        } else if u < p.p_extreme + p.p_magnitude {
            self.finite_magnitude()
        } else if u < p.p_extreme + p.p_magnitude + p.p_precise {
            self.precise()
        } else {
            self.imprecise_zeroless()
        }
    }

    /// `0` or `Mmax`.
    pub fn extreme_magnitude(&mut self) -> ExternalNumber {
        if self.coin(0.5) {
            ExternalNumber::zero()
        } else {
            ExternalNumber::max_magnitude()
        }
    }

    pub fn finite_magnitude(&mut self) -> ExternalNumber {
        let k = self.exponent();
        ExternalNumber::from(Magnitude::new(k))
    }

    /// Any magnitude, extremes included.
    pub fn magnitude(&mut self) -> ExternalNumber {
        if self.coin(self.profile.p_extreme.max(0.2)) {
            self.extreme_magnitude()
        } else {
            self.finite_magnitude()
        }
    }

    /// Precise element; occasionally zero, sometimes a genuine quotient.
    pub fn precise(&mut self) -> ExternalNumber {
        if self.coin(0.08) {
            return ExternalNumber::zero();
        }
        self.precise_nonzero()
    }

    pub fn precise_nonzero(&mut self) -> ExternalNumber {
        let lead = self.exponent();
        let top = self.hi().max(lead);
        self.precise_led_by(lead, top)
    }

    fn precise_led_by(&mut self, lead: i64, top: i64) -> ExternalNumber {
        let num = self.poly_led_by(lead, top);
        if self.coin(0.25) {
            let d = self.rng.random_range(1..=2);
            let den = LaurentPoly::from_terms([(0, Rational::one()), (d, self.coeff())]);
            ExternalNumber::precise(RatFun::quotient(&num, &den).expect("nonzero denominator"))
        } else {
            ExternalNumber::precise(num)
        }
    }

    /// Zeroless element with finite magnitude.
    pub fn imprecise_zeroless(&mut self) -> ExternalNumber {
        let k = self.rng.random_range(self.lo() + 1..=self.hi() + 1);
        let lead = self.rng.random_range(self.lo()..k);
        let repr = self.poly_led_by(lead, k - 1);
        ExternalNumber::canonicalize(repr, Magnitude::new(k))
    }

    /// Element with a finite, nonzero magnitude (a witness of non-trivial
    /// magnitudes).
    pub fn with_finite_magnitude(&mut self) -> ExternalNumber {
        if self.coin(0.3) {
            self.finite_magnitude()
        } else {
            self.imprecise_zeroless()
        }
    }

    /// Zeroless element, precise or not, regardless of `p_magnitude`.
    pub fn zeroless(&mut self) -> ExternalNumber {
        let p = self.profile;
        let imprecise = 1.0 - p.p_precise - p.p_magnitude - p.p_extreme;
        let share = if p.p_precise + imprecise > 0.0 {
            p.p_precise / (p.p_precise + imprecise)
        } else {
            0.5
        };
        if self.coin(share) {
            self.precise_nonzero()
        } else {
            self.imprecise_zeroless()
        }
    }

    /// Zeroless element with leading exponent `lead`.
    fn zeroless_led_by(&mut self, lead: i64) -> ExternalNumber {
        if self.coin(0.3) {
            let top = self.hi().max(lead);
            self.precise_led_by(lead, top)
        } else {
            let k = lead + self.rng.random_range(1..=3);
            let repr = self.poly_led_by(lead, k - 1);
            ExternalNumber::canonicalize(repr, Magnitude::new(k))
        }
    }

    /// `|w|` for arbitrary `w`; always positive (magnitudes included).
    pub fn positive(&mut self) -> ExternalNumber {
        self.any().abs()
    }

    pub fn positive_zeroless(&mut self) -> ExternalNumber {
        self.zeroless().abs()
    }

    pub fn negative_zeroless(&mut self) -> ExternalNumber {
        -self.positive_zeroless()
    }

    /// Positive zeroless element that is infinitely large (leading exponent
    /// below zero), hence above its own unity.
    pub fn large_positive(&mut self) -> ExternalNumber {
        let lead = self.rng.random_range(self.lo().min(-1)..=-1);
        self.zeroless_led_by(lead).abs()
    }

    /// Positive zeroless infinitesimal, hence below its own unity.
    pub fn small_positive(&mut self) -> ExternalNumber {
        let lead = self.rng.random_range(1..=self.hi().max(1));
        self.zeroless_led_by(lead).abs()
    }

    /// Element `w` contained in `mag`, so that `w + mag = mag`.
    pub fn inside(&mut self, mag: Magnitude) -> ExternalNumber {
        let k = match mag.index() {
            MagIndex::PosInf => return ExternalNumber::zero(),
            MagIndex::NegInf => return self.any(),
            MagIndex::Finite(k) => k,
        };
        let p = k + self.rng.random_range(0..=2);
        match self.rng.random_range(0..4) {
            0 => ExternalNumber::from(Magnitude::new(p)),
            1 => self.precise_inside(mag),
            2 => ExternalNumber::canonicalize(
                LaurentPoly::monomial(self.coeff(), p),
                Magnitude::new(p + self.rng.random_range(1..=2)),
            ),
            _ => ExternalNumber::zero(),
        }
    }

    /// Precise element contained in `mag`.
    pub fn precise_inside(&mut self, mag: Magnitude) -> ExternalNumber {
        match mag.index() {
            MagIndex::PosInf => ExternalNumber::zero(),
            MagIndex::NegInf => self.precise(),
            MagIndex::Finite(k) => {
                let p = k + self.rng.random_range(0..=2);
                if self.coin(0.2) {
                    ExternalNumber::zero()
                } else {
                    ExternalNumber::precise(LaurentPoly::monomial(self.coeff(), p))
                }
            }
        }
    }

    /// `-y + δ` with `δ` small compared to `y`.
    pub fn near_opposite(&mut self, y: &ExternalNumber) -> ExternalNumber {
        let base = match y.representative().valuation().finite() {
            Some(v) => v,
            None => return &(-y) + &self.inside(y.magnitude()),
        };
        let p = base + self.rng.random_range(1..=3);
        let delta = match self.rng.random_range(0..4) {
            0 => ExternalNumber::zero(),
            1 => ExternalNumber::from(Magnitude::new(p)),
            2 => ExternalNumber::precise(LaurentPoly::monomial(self.coeff(), p)),
            _ => ExternalNumber::canonicalize(
                LaurentPoly::monomial(self.coeff(), p),
                Magnitude::new(p + self.rng.random_range(1..=2)),
            ),
        };
        &(-y) + &delta
    }

    /// Three operands; the third is almost opposite to the second with
    /// probability `p_opposite`.
    pub fn triple(&mut self) -> (ExternalNumber, ExternalNumber, ExternalNumber) {
        let x = self.any();
        let y = self.any();
        let z = if self.coin(self.profile.p_opposite) {
            self.near_opposite(&y)
        } else {
            self.any()
        };
        if self.coin(0.5) {
            (x, y, z)
        } else {
            (x, z, y)
        }
    }
}

/// A single element, determined by `(seed, profile)`.
pub fn gen_external(seed: u64, profile: &GenProfile) -> ExternalNumber {
    Gen::new(seed, profile).any()
}

/// Whether `x` is a positive element with leading coefficient sign agreeing
/// with the order. Used by the generator tests.
#[cfg(test)]
fn leading_positive(x: &ExternalNumber) -> bool {
    match x.representative() {
        crate::number::Scalar::Poly(p) => p
            .leading_coeff()
            .map(num_traits::Signed::is_positive)
            .unwrap_or(true),
        crate::number::Scalar::Exact(r) => r.signum() != std::cmp::Ordering::Less,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let p = GenProfile::default();
        for seed in 0..50 {
            assert_eq!(gen_external(seed, &p), gen_external(seed, &p));
        }
    }

    #[test]
    fn forced_classes() {
        let mags = GenProfile {
            p_magnitude: 1.0,
            p_precise: 0.0,
            p_extreme: 0.0,
            ..Default::default()
        };
        let precise = GenProfile::precise_only();
        for seed in 0..200 {
            assert!(gen_external(seed, &mags).is_magnitude());
            assert!(gen_external(seed, &precise).is_precise());
            assert!(gen_external(seed, &GenProfile::magnitudes_only()).is_magnitude());
        }
    }

    #[test]
    fn outputs_are_canonical() {
        let p = GenProfile::default();
        for seed in 0..500 {
            let x = gen_external(seed, &p);
            let again = ExternalNumber::canonicalize(x.representative().clone(), x.magnitude());
            assert_eq!(again, x);
        }
    }

    #[test]
    fn finite_magnitudes_occur() {
        let p = GenProfile::default();
        let finite = (0..200)
            .map(|s| gen_external(s, &p))
            .filter(|x| x.magnitude().index().is_finite())
            .count();
        assert!(finite > 20, "{finite}");
    }

    #[test]
    fn constrained_generators() {
        let p = GenProfile::magnitudes_only();
        for seed in 0..300 {
            let mut g = Gen::new(seed, &p);
            assert!(g.zeroless().is_zeroless());
            let x = g.positive_zeroless();
            assert!(x.is_zeroless() && x.is_positive() && leading_positive(&x));
            assert!(g.negative_zeroless().is_negative());
            let big = g.large_positive();
            assert!(big.unity().unwrap() < big, "{big}");
            let small = g.small_positive();
            assert!(small < small.unity().unwrap(), "{small}");
            let m = g.finite_magnitude().magnitude();
            let w = g.inside(m);
            assert_eq!(
                &w + &ExternalNumber::from(m),
                ExternalNumber::from(m),
                "{w} in {m}"
            );
        }
    }

    #[test]
    fn profiles_validate() {
        for name in [
            "default",
            "magnitudes",
            "precise",
            "extremes",
            "near-opposite",
        ] {
            assert_eq!(
                GenProfile::named(name).unwrap().validate(),
                Ok(()),
                "{name}"
            );
        }
        let bad = GenProfile {
            p_magnitude: 0.9,
            p_precise: 0.9,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let empty = GenProfile {
            exponent_window: 3..=2,
            ..Default::default()
        };
        assert!(empty.validate().is_err());
    }
}
