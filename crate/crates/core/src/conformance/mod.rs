//! Randomized conformance checking.
//!
//! Every axiom of a solid (`A1`..`A29`) and every derived theorem
//! (`T1`..`T56`) is registered as a [`Property`]: a check that draws its
//! operands from a [`Gen`] and reports whether the statement held, was
//! vacuous (hypothesis not met), or was violated.
//!
//! Trial `i` of property `id` under seed `s` uses its own generator seeded
//! from `(s, id, i)`, so reports do not depend on scheduling.

mod axioms;
mod generate;
mod theorems;

use std::cmp::Ordering;
use std::fmt;
use std::sync::LazyLock;

use rayon::prelude::*;

use crate::number::ExternalNumber;

pub use generate::{gen_external, Gen, GenProfile};

/// Result of a single trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The hypothesis of an implication was not met.
    Vacuous,
    /// Named operands of a counterexample.
    Violated(Vec<(&'static str, ExternalNumber)>),
}

impl Outcome {
    pub fn check(ok: bool, operands: &[(&'static str, &ExternalNumber)]) -> Outcome {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Violated(operands.iter().map(|&(n, x)| (n, x.clone())).collect())
        }
    }

    /// `hypothesis ⇒ conclusion`; the conclusion is evaluated only when needed.
    pub fn implies(
        hypothesis: bool,
        conclusion: impl FnOnce() -> bool,
        operands: &[(&'static str, &ExternalNumber)],
    ) -> Outcome {
        if hypothesis {
            Outcome::check(conclusion(), operands)
        } else {
            Outcome::Vacuous
        }
    }

    /// Conjunction of several items: the first violation wins, and the
    /// trial counts as effective if any item was.
    pub fn all(items: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut acc = Outcome::Vacuous;
        for o in items {
            match o {
                Outcome::Violated(_) => return o,
                Outcome::Holds => acc = Outcome::Holds,
                Outcome::Vacuous => {}
            }
        }
        acc
    }
}

/// One registered statement.
pub struct Property {
    pub id: &'static str,
    pub alias: Option<&'static str>,
    /// Number of generated operands.
    pub arity: usize,
    pub statement: &'static str,
    check: fn(&mut Gen) -> Outcome,
}

impl Property {
    pub(crate) const fn new(
        id: &'static str,
        arity: usize,
        statement: &'static str,
        check: fn(&mut Gen) -> Outcome,
    ) -> Self {
        Property {
            id,
            alias: None,
            arity,
            statement,
            check,
        }
    }

    pub(crate) const fn alias(mut self, alias: &'static str) -> Self {
        self.alias = Some(alias);
        self
    }

    pub fn matches(&self, name: &str) -> bool {
        self.id == name || self.alias == Some(name)
    }

    /// Runs one trial with the given generator.
    pub fn run_trial(&self, gen: &mut Gen) -> Outcome {
        (self.check)(gen)
    }
}

static REGISTRY: LazyLock<Vec<Property>> = LazyLock::new(|| {
    let mut all = axioms::properties();
    all.extend(theorems::properties());
    all
});

/// Every registered property, axioms first.
pub fn registry() -> &'static [Property] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Option<&'static Property> {
    registry().iter().find(|p| p.matches(name))
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown property `{0}`")]
pub struct UnknownProperty(pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformanceReport {
    pub property: &'static str,
    pub trials: u64,
    /// Trials in which the hypothesis held.
    pub effective: u64,
    pub failures: u64,
    /// Printed operands of the lowest-numbered failing trial.
    pub first_counterexample: Option<String>,
    pub seed: u64,
}

impl ConformanceReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Fewer than a quarter of the trials met the hypothesis.
    pub fn low_coverage(&self) -> bool {
        self.effective * 4 < self.trials
    }
}

/// `<id> trials=<n> failures=<m>[ counterexample: x=<expr>; ...]`
impl fmt::Display for ConformanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} trials={} failures={}",
            self.property, self.trials, self.failures
        )?;
        if let Some(c) = &self.first_counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` of property `id`.
pub fn trial_seed(seed: u64, id: &str, trial: u64) -> u64 {
    splitmix64(splitmix64(seed ^ fnv1a(id)) ^ trial)
}

fn render(operands: &[(&'static str, ExternalNumber)]) -> String {
    operands
        .iter()
        .map(|(n, x)| format!("{n}={x}"))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Default)]
struct Tally {
    effective: u64,
    failures: u64,
    first: Option<(u64, Vec<(&'static str, ExternalNumber)>)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.effective += other.effective;
        self.failures += other.failures;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Runs `trials` independent trials of one property.
pub fn run(
    property: &'static Property,
    trials: u64,
    seed: u64,
    profile: &GenProfile,
) -> ConformanceReport {
    let tally = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut gen = Gen::new(trial_seed(seed, property.id, i), profile);
            match property.run_trial(&mut gen) {
                Outcome::Holds => Tally {
                    effective: 1,
                    ..Tally::default()
                },
                Outcome::Vacuous => Tally::default(),
                Outcome::Violated(ops) => Tally {
                    effective: 1,
                    failures: 1,
                    first: Some((i, ops)),
                },
            }
        })
        .reduce(Tally::default, Tally::merge);
    ConformanceReport {
        property: property.id,
        trials,
        effective: tally.effective,
        failures: tally.failures,
        first_counterexample: tally.first.map(|(_, ops)| render(&ops)),
        seed,
    }
}

/// Runs the property registered under `id` (or its alias).
pub fn run_property(
    id: &str,
    trials: u64,
    seed: u64,
    profile: &GenProfile,
) -> Result<ConformanceReport, UnknownProperty> {
    let p = lookup(id).ok_or_else(|| UnknownProperty(id.to_string()))?;
    Ok(run(p, trials, seed, profile))
}

/// Runs every registered property, in registry order.
pub fn run_all(trials: u64, seed: u64, profile: &GenProfile) -> Vec<ConformanceReport> {
    registry()
        .iter()
        .map(|p| run(p, trials, seed, profile))
        .collect()
}

/// Sorts two elements, returning them as `(smaller, larger)`.
pub(crate) fn sorted2(a: ExternalNumber, b: ExternalNumber) -> (ExternalNumber, ExternalNumber) {
    if a.compare(&b) == Ordering::Greater {
        (b, a)
    } else {
        (a, b)
    }
}
