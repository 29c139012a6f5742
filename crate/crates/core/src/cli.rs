//! Command-line front end. Exit codes: 0 success, 1 failed verification,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::characters::character_table;
use crate::convolution::Family;
use crate::determinant::{alpha_q_case, alpha_q_report, hciz_determinant};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{self, Rational};
use crate::tau::{build_tau, hurwitz_table, table_to_csv, table_to_json, tau_eval, TableKind};
use crate::twist::connection_coeffs;
use crate::verify::{run_suite, Suite, VerifyConfig};
use crate::walks::{count_walks, Constraint, WalkQuery};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz-type counts in the symmetric group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity checks against independent oracles.
    Verify(VerifyArgs),
    /// Tabulate walk counts from a twist.
    Table(TableArgs),
    /// Count constrained walks by brute force.
    Walks(WalksArgs),
    /// Evaluate a tau function at two sets of values.
    Tau(TauArgs),
    /// Print the connection coefficients of a twist.
    Gmatrix(GmatrixArgs),
    /// Print the character table of S_n.
    Chartable(ChartableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Characters,
    Center,
    Walks,
    Tau,
    All,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    /// Size cap; each suite has its own default.
    #[arg(long)]
    nmax: Option<usize>,
    /// Number of variables for determinant checks.
    #[arg(long = "N", default_value_t = 3)]
    n_vars: usize,
    /// Degree cap for formal parameters.
    #[arg(long, default_value_t = 6)]
    cap: u32,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// plain (or okounkov), monotone, strict, mixed, weak_strict, multi, multi<m>.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    /// Largest total number of steps.
    #[arg(long = "steps-max", visible_aliases = ["bmax", "kmax", "wmax", "dmax"], default_value_t = 4)]
    steps_max: u32,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum WalkKind {
    Plain,
    Monotone,
    Strict,
    Mixed,
    Multi,
}

#[derive(Args, Debug)]
struct WalksArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long, value_enum)]
    kind: WalkKind,
    #[arg(long, default_value_t = 0)]
    steps: usize,
    /// Weakly monotone steps at the start of a mixed walk.
    #[arg(long)]
    p: Option<usize>,
    /// Segment lengths of a multimonotone walk.
    #[arg(long)]
    segments: Option<String>,
    #[arg(long)]
    transitive: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TauFamily {
    Vacuum,
    Hciz,
    AlphaQ,
}

#[derive(Args, Debug)]
struct TauArgs {
    #[arg(long, value_enum)]
    family: TauFamily,
    #[arg(long = "N")]
    n_vars: Option<usize>,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Degree cap for the family's parameter.
    #[arg(long, visible_aliases = ["zcap", "qcap"], default_value_t = 6)]
    cap: u32,
    #[arg(long, default_value = "1/2")]
    alpha: String,
    /// Largest Schur degree summed; defaults to the parameter cap, at most 8.
    #[arg(long)]
    nmax: Option<usize>,
    /// Compare against the determinant formula.
    #[arg(long)]
    check_determinant: bool,
}

#[derive(Args, Debug)]
struct GmatrixArgs {
    #[arg(long)]
    n: usize,
    /// Twist kind, as for `table`.
    #[arg(long, default_value = "plain")]
    twist: String,
    #[arg(long, default_value_t = 4)]
    cap: u32,
}

#[derive(Args, Debug)]
struct ChartableArgs {
    #[arg(long)]
    n: usize,
}

/// Parses `args` (including the program name) and runs the command,
/// writing to `out` and `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Walks(a) => cmd_walks(&a, out),
        Command::Tau(a) => cmd_tau(&a, out),
        Command::Gmatrix(a) => cmd_gmatrix(&a, out),
        Command::Chartable(a) => cmd_chartable(&a, out),
    };
    match result {
        Ok(code) => code,
        // A closed reader (e.g. `| head`) is not an error worth reporting.
        Err(Error::Output(m)) if m == BROKEN_PIPE => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Error::Output(BROKEN_PIPE.into())
    } else {
        Error::Output(e.to_string())
    }
}

const BROKEN_PIPE: &str = "broken pipe";

fn partition_arg(s: &str, n: Option<usize>) -> Result<Partition> {
    let p: Partition = s.parse()?;
    if let Some(n) = n {
        if p.size() != n {
            return Err(Error::SizeMismatch(format!("partition {p} is not a partition of {n}")));
        }
    }
    Ok(p)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::Characters => vec![Suite::Characters],
        SuiteArg::Center => vec![Suite::Center],
        SuiteArg::Walks => vec![Suite::Walks],
        SuiteArg::Tau => vec![Suite::Tau],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    if let Some(n) = a.nmax {
        let cap = crate::walks::max_n();
        if n > cap {
            return Err(Error::SizeLimit { what: "verify size", n, cap });
        }
    }
    let cfg = VerifyConfig { n_max: a.nmax, n_vars: a.n_vars, series_cap: a.cap, seed: a.seed };
    let mut first_failure = None;
    let (mut passed, mut total) = (0, 0);
    for suite in suites {
        for r in run_suite(suite, &cfg) {
            writeln!(out, "{}", r.line()).map_err(io)?;
            total += 1;
            match &r.outcome {
                Ok(()) => passed += 1,
                Err(ce) if first_failure.is_none() => first_failure = Some((r.name.clone(), ce.clone())),
                Err(_) => {}
            }
        }
    }
    writeln!(out, "{passed}/{total} checks passed").map_err(io)?;
    match first_failure {
        None => Ok(EXIT_OK),
        Some((name, ce)) => {
            let doc = json!({ "check": name, "counterexample": ce });
            writeln!(out, "first counterexample: {doc}").map_err(io)?;
            Ok(EXIT_FAILED)
        }
    }
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let kind: TableKind = a.family.parse()?;
    let rows = hurwitz_table(kind, a.nmax, a.steps_max, a.connected)?;
    let text = match a.format {
        Format::Json => table_to_json(&rows) + "\n",
        Format::Csv => table_to_csv(kind, &rows)?,
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_walks(a: &WalksArgs, out: &mut dyn Write) -> Result<i32> {
    let from = partition_arg(&a.from, Some(a.n))?;
    let to = partition_arg(&a.to, Some(a.n))?;
    let constraint = match a.kind {
        WalkKind::Plain => Constraint::Plain(a.steps),
        WalkKind::Monotone => Constraint::WeaklyMonotone(a.steps),
        WalkKind::Strict => Constraint::StrictlyMonotone(a.steps),
        WalkKind::Mixed => {
            let p = a.p.ok_or_else(|| Error::Parse("mixed walks need --p".into()))?;
            Constraint::Mixed { p, k: a.steps }
        }
        WalkKind::Multi => {
            let seg = a.segments.as_deref().ok_or_else(|| Error::Parse("multimonotone walks need --segments".into()))?;
            let d = seg
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("segment `{x}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            Constraint::MultiMonotone(d)
        }
    };
    let q = WalkQuery::new(from, to, constraint).transitive(a.transitive);
    let count = count_walks(&q)?;
    writeln!(out, "{count}").map_err(io)?;
    let record = json!({
        "n": q.n, "from": q.from_type, "to": q.to_type,
        "constraint": q.constraint.to_string(), "transitive": q.transitive, "count": count.to_string(),
    });
    writeln!(out, "{record}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_tau(a: &TauArgs, out: &mut dyn Write) -> Result<i32> {
    let av = scalar::parse_list(&a.a)?;
    let bv = scalar::parse_list(&a.b)?;
    let n_vars = a.n_vars.unwrap_or(av.len());
    if av.len() != n_vars || bv.len() != n_vars {
        return Err(Error::SizeMismatch(format!("--a and --b need {n_vars} values each")));
    }
    let alpha: Rational = scalar::parse(&a.alpha)?;
    let family = match a.family {
        TauFamily::Vacuum => Family::Vacuum,
        TauFamily::Hciz => Family::HcizExp { z_cap: a.cap, n_vars },
        TauFamily::AlphaQ => Family::AlphaQ { alpha: alpha.clone(), q_cap: a.cap, n_vars },
    };
    let n_max = a.nmax.unwrap_or((a.cap as usize).min(crate::tau::TAU_MAX_DEGREE));
    let t = build_tau(&family, n_max)?;
    let value = tau_eval(&t, &av, &bv)?;
    let fmt = |x: &[Rational]| x.iter().map(scalar::format).collect::<Vec<_>>();
    let mut doc = json!({ "family": family.label(), "N": n_vars, "a": fmt(&av), "b": fmt(&bv), "nmax": n_max, "series": value });
    let mut code = EXIT_OK;
    if a.check_determinant {
        match a.family {
            TauFamily::Hciz => {
                let det = hciz_determinant(n_vars, &av, &bv, a.cap)?;
                let ok = det == value;
                doc["determinant"] = json!(det);
                doc["determinant_matches"] = json!(ok);
                if !ok {
                    code = EXIT_FAILED;
                }
            }
            TauFamily::AlphaQ => {
                let case = alpha_q_case(n_vars, &alpha, &av, &bv, a.cap)?;
                doc["determinant"] = json!(case.entrywise);
                doc["determinant_matches"] = json!(case.entrywise_matches());
                doc["report"] = json!(alpha_q_report(&[case]));
            }
            TauFamily::Vacuum => return Err(Error::Parse("no determinant formula for the vacuum family".into())),
        }
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable")).map_err(io)?;
    Ok(code)
}

fn cmd_gmatrix(a: &GmatrixArgs, out: &mut dyn Write) -> Result<i32> {
    let kind: TableKind = a.twist.parse()?;
    let cap = crate::walks::max_n();
    if a.n > cap {
        return Err(Error::SizeLimit { what: "gmatrix size", n: a.n, cap });
    }
    let twist = kind.twist(a.cap);
    let g = connection_coeffs(&twist, a.n)?;
    writeln!(out, "{}", g.to_json(&twist.to_string())).map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_chartable(a: &ChartableArgs, out: &mut dyn Write) -> Result<i32> {
    let t = character_table(a.n)?;
    writeln!(out, "{}", t.to_json()).map_err(io)?;
    Ok(EXIT_OK)
}
