//! `solid`: evaluate, compare and explain external-number expressions, and
//! run the conformance suite.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use solid::conformance::{self, GenProfile};
use solid::syntax::{evaluate, EvalError};
use solid::{dist_decide, ExternalNumber};

const EXIT_EVAL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_FAILURES: u8 = 3;

#[derive(Parser)]
#[command(
    name = "solid",
    version,
    about = "Exact arithmetic on external numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two expressions; prints `<`, `=` or `>`.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Decide whether x(y+z) = xy + xz and explain why.
    Dist {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Run the randomized conformance suite.
    Axioms {
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a single property, e.g. `A22` or `T-criterion`.
        #[arg(long)]
        property: Option<String>,
        /// Generator preset: default, magnitudes, precise, extremes, near-opposite.
        #[arg(long, default_value = "default")]
        profile: String,
    },
    /// Interactive loop; `:cmp a ; b`, `:dist x ; y ; z`, `:quit`.
    Repl,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<EvalError> for Failure {
    fn from(err: EvalError) -> Self {
        let code = match err {
            EvalError::Parse(_) => EXIT_PARSE,
            EvalError::Solid(_) => EXIT_EVAL,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn compare(lhs: &str, rhs: &str) -> Result<String, Failure> {
    let (a, b) = (evaluate(lhs)?, evaluate(rhs)?);
    Ok(match a.cmp(&b) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    }
    .to_string())
}

fn explain(x: &str, y: &str, z: &str) -> Result<String, Failure> {
    let (x, y, z) = (evaluate(x)?, evaluate(y)?, evaluate(z)?);
    let r = dist_decide(&x, &y, &z);
    Ok(format!(
        "distributive: {}\nbranch: {}\nx*(y+z) = {}\nx*y + x*z = {}\ncorrection = {}",
        if r.holds { "yes" } else { "no" },
        r.branch,
        r.lhs,
        r.rhs,
        r.correction
    ))
}

fn axioms(trials: u64, seed: u64, property: Option<&str>, profile: &str) -> Result<bool, Failure> {
    let profile = GenProfile::named(profile).ok_or_else(|| Failure {
        code: EXIT_EVAL,
        message: format!("error: unknown profile `{profile}`"),
    })?;
    let reports = match property {
        Some(id) => vec![
            conformance::run_property(id, trials, seed, &profile).map_err(|e| Failure {
                code: EXIT_EVAL,
                message: format!("error: {e}"),
            })?,
        ],
        None => conformance::run_all(trials, seed, &profile),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        let _ = writeln!(out, "{r}");
        if r.low_coverage() {
            eprintln!(
                "warning: {} low coverage ({} of {} trials effective)",
                r.property, r.effective, r.trials
            );
        }
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn split3(rest: &str) -> Option<(&str, &str, &str)> {
    let mut parts = rest.splitn(3, ';');
    Some((parts.next()?, parts.next()?, parts.next()?))
}

fn repl_line(line: &str) -> Result<String, Failure> {
    let usage = |m: &str| Failure {
        code: EXIT_PARSE,
        message: format!("usage: {m}"),
    };
    if let Some(rest) = line.strip_prefix(":cmp") {
        let (a, b) = rest
            .split_once(';')
            .ok_or_else(|| usage(":cmp <expr> ; <expr>"))?;
        compare(a, b)
    } else if let Some(rest) = line.strip_prefix(":dist") {
        let (x, y, z) = split3(rest).ok_or_else(|| usage(":dist <x> ; <y> ; <z>"))?;
        explain(x, y, z)
    } else {
        Ok(evaluate(line)?.to_string())
    }
}

fn repl() -> ExitCode {
    let stdin = io::stdin();
    let mut out = io::stdout();
    loop {
        let _ = write!(out, "> ");
        let _ = out.flush();
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == ":quit" || line == ":q" {
            break;
        }
        match repl_line(line) {
            Ok(s) => {
                let _ = writeln!(out, "{s}");
            }
            Err(f) => eprintln!("{}", f.message),
        }
    }
    ExitCode::SUCCESS
}

fn print(result: Result<String, Failure>) -> ExitCode {
    match result {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval { expr } => print(
            evaluate(&expr)
                .map(|v: ExternalNumber| v.to_string())
                .map_err(Failure::from),
        ),
        Command::Cmp { lhs, rhs } => print(compare(&lhs, &rhs)),
        Command::Dist { x, y, z } => print(explain(&x, &y, &z)),
        Command::Axioms {
            trials,
            seed,
            property,
            profile,
        } => match axioms(trials, seed, property.as_deref(), &profile) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(EXIT_FAILURES),
            Err(f) => {
                eprintln!("{}", f.message);
                ExitCode::from(f.code)
            }
        },
        Command::Repl => repl(),
    }
}
