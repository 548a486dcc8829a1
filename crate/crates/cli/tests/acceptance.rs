//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails.

#[path = "../../core/tests/support/set_oracle.rs"]
mod set_oracle;

use std::process::{Command, Output};
use std::time::Instant;

use solid::conformance::{registry, trial_seed, Gen, GenProfile};
use solid::laws::axiom22_residual;
use solid::{dist_decide, DistBranch, MagIndex};

/// Trials per property and per sampled criterion.
const TRIALS: u64 = 10_000;
/// Minimum share of trials each distributivity branch must reach.
const BRANCH_FLOOR: f64 = 0.01;
/// Wall-clock budget for one full axiom run, in seconds.
const AXIOM_BUDGET_SECS: f64 = 60.0;

fn solid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solid"))
        .args(args)
        .output()
        .expect("run solid binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

/// `(id, trials, failures)` of every report line.
fn parse_reports(text: &str) -> Vec<(String, u64, u64)> {
    text.lines()
        .filter_map(|line| {
            let mut words = line.split_whitespace();
            let id = words.next()?.to_string();
            let trials = words.next()?.strip_prefix("trials=")?.parse().ok()?;
            let failures = words.next()?.strip_prefix("failures=")?.parse().ok()?;
            Some((id, trials, failures))
        })
        .collect()
}

fn axiom_ids() -> Vec<&'static str> {
    registry()
        .iter()
        .map(|p| p.id)
        .filter(|id| id.starts_with('A'))
        .collect()
}

fn theorem_ids() -> Vec<&'static str> {
    registry()
        .iter()
        .map(|p| p.id)
        .filter(|id| id.starts_with('T'))
        .collect()
}

/// Checks that every id in `ids` was reported with `TRIALS` trials and no
/// failures.
fn all_clean(reports: &[(String, u64, u64)], ids: &[&str]) -> Result<(), String> {
    for id in ids {
        match reports.iter().find(|r| r.0 == *id) {
            None => return Err(format!("{id} missing")),
            Some((_, t, f)) if *t != TRIALS || *f != 0 => {
                return Err(format!("{id} trials={t} failures={f}"))
            }
            Some(_) => {}
        }
    }
    Ok(())
}

struct Suite {
    /// CLI output and wall-clock seconds per profile, default first.
    runs: Vec<(&'static str, Output, f64)>,
}

impl Suite {
    fn new() -> Self {
        let runs = ["default", "magnitudes", "precise", "extremes"]
            .into_iter()
            .map(|profile| {
                let t = Instant::now();
                let out = solid(&[
                    "axioms",
                    "--trials",
                    &TRIALS.to_string(),
                    "--seed",
                    "0",
                    "--profile",
                    profile,
                ]);
                (profile, out, t.elapsed().as_secs_f64())
            })
            .collect();
        Suite { runs }
    }

    fn axioms(&self) -> Result<String, String> {
        let ids = axiom_ids();
        let mut notes = Vec::new();
        for (profile, out, secs) in &self.runs {
            if out.status.code() != Some(0) {
                return Err(format!(
                    "{profile} profile: cli exit status {:?}",
                    out.status.code()
                ));
            }
            all_clean(&parse_reports(&stdout(out)), &ids)
                .map_err(|e| format!("{profile} profile: {e}"))?;
            if *secs > AXIOM_BUDGET_SECS {
                return Err(format!("{profile} profile took {secs:.1}s"));
            }
            notes.push(format!("{profile} {secs:.1}s"));
        }
        Ok(format!(
            "{} axioms x {} profiles clean ({})",
            ids.len(),
            self.runs.len(),
            notes.join(", ")
        ))
    }

    fn theorems(&self) -> Result<String, String> {
        let ids = theorem_ids();
        if ids.len() < 40 {
            return Err(format!("only {} theorems registered", ids.len()));
        }
        all_clean(&parse_reports(&stdout(&self.runs[0].1)), &ids)?;
        Ok(format!("{} theorems clean", ids.len()))
    }
}

fn criterion() -> Result<String, String> {
    let profile = GenProfile::near_opposite();
    let mut counts = [0u64; 3];
    for i in 0..TRIALS {
        let (x, y, z) = Gen::new(trial_seed(0, "acceptance-criterion", i), &profile).triple();
        let r = dist_decide(&x, &y, &z);
        let direct = &x * &(&y + &z) == &(&x * &y) + &(&x * &z);
        if r.holds != direct || r.holds != r.criterion_holds() {
            return Err(format!("disagreement at x={x}; y={y}; z={z}"));
        }
        counts[match r.branch {
            DistBranch::MagnitudeDistributes => 0,
            DistBranch::RelativeUncertainty => 1,
            DistBranch::Fails => 2,
        }] += 1;
    }
    let floor = (BRANCH_FLOOR * TRIALS as f64).ceil() as u64;
    let summary = format!(
        "magnitude={} relative={} none={}",
        counts[0], counts[1], counts[2]
    );
    if counts.iter().any(|&c| c < floor) {
        return Err(format!("branch below {floor}: {summary}"));
    }
    Ok(format!("{TRIALS} triples agree; {summary}"))
}

fn equivalence() -> Result<String, String> {
    for (name, profile) in [
        ("default", GenProfile::default()),
        ("near-opposite", GenProfile::near_opposite()),
    ] {
        for i in 0..TRIALS {
            let (x, y, z) = Gen::new(trial_seed(0, "acceptance-equivalence", i), &profile).triple();
            if let Err(e) = axiom22_residual(&x, &y, &z) {
                return Err(format!(
                    "{name}: identity fails at x={x}; y={y}; z={z}: {e}"
                ));
            }
            let e = x.neutral();
            if &e * &(&y + &z) > &(&e * &y) + &(&e * &z) {
                return Err(format!("{name}: inequality fails at x={x}; y={y}; z={z}"));
            }
        }
    }
    Ok(format!("{TRIALS} triples x 2 profiles"))
}

fn goldens() -> Result<String, String> {
    let cases: [(&[&str], &str); 5] = [
        (&["dist", "1+M(1)", "1", "-1"], "distributive: no"),
        (&["eval", "(1+M(1))*1 + (1+M(1))*(-1)"], "M(1)"),
        (&["eval", "inv(1+eps+M(2))"], "1 - eps + M(2)"),
        (&["eval", "u(eps+M(3))"], "1 + M(2)"),
        (&["cmp", "0", "1"], "<"),
    ];
    for (args, want) in cases {
        let out = solid(args);
        let got = stdout(&out);
        let first = got.lines().next().unwrap_or("");
        if out.status.code() != Some(0) || first != want {
            return Err(format!("solid {args:?} printed {got:?}, expected {want:?}"));
        }
    }
    Ok(format!("{} goldens", cases.len()))
}

fn oracle_grid() -> Result<String, String> {
    let indices = [
        MagIndex::Finite(0),
        MagIndex::Finite(1),
        MagIndex::Finite(2),
        MagIndex::PosInf,
        MagIndex::NegInf,
    ];
    let xs = set_oracle::grid(&[-1, 0, 1, 2], &[-2, -1, 0, 1, 2], &indices);
    for x in &xs {
        for y in &xs {
            if x + y != set_oracle::oracle_add(x, y) {
                return Err(format!("add differs at {x} ; {y}"));
            }
            if x * y != set_oracle::oracle_mul(x, y) {
                return Err(format!("mul differs at {x} ; {y}"));
            }
        }
    }
    Ok(format!(
        "{} values, {} pairs",
        xs.len(),
        xs.len() * xs.len()
    ))
}

fn determinism() -> Result<String, String> {
    let args = ["axioms", "--trials", "1000", "--seed", "7"];
    let (a, b) = (solid(&args), solid(&args));
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(format!(
        "{} report lines identical",
        stdout(&a).lines().count()
    ))
}

type Check<'a> = dyn Fn() -> Result<String, String> + 'a;

fn main() {
    let suite = Suite::new();
    let criteria: [(&str, Box<Check>); 7] = [
        ("1 axiom conformance", Box::new(|| suite.axioms())),
        ("2 theorem conformance", Box::new(|| suite.theorems())),
        ("3 criterion equivalence", Box::new(criterion)),
        ("4 adapted distributivity", Box::new(equivalence)),
        ("5 cli goldens", Box::new(goldens)),
        ("6 oracle grid", Box::new(oracle_grid)),
        ("7 determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
