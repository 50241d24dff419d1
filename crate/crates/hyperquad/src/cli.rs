//! Command-line front end: one subcommand per capability, one JSON
//! document on stdout per invocation, diagnostics on stderr.
//!
//! Exit codes separate the three ways an invocation can end: 0 when the
//! requested computation succeeded, 1 when the input was well formed but
//! the mathematics said no (a failing identity, a non-Diophantine tuple,
//! a degenerate extension), 2 for usage problems (unknown flags, unreadable
//! files, malformed rationals).

use crate::arith::Rational;
use crate::covariants::verify_covariant_identities;
use crate::hypermatrix::{
    complete, face_determinants, hyperdet, parameterize_asymmetric, parameterize_symmetric,
    rotate, verify_hypermatrix_identities, AsymmetricInputs, GenQuadruple, Hypermatrix222,
    Rotation, RotationVariant, SymParam, FACE_LABELS,
};
use crate::jsonio::{rat_to_value, JsonError};
use crate::quadruple::{
    ahs_extend, is_diophantine, is_regular_quadruple, verify_quadruple_identities, MTuple,
};
use crate::quintuple::{dujella_extend, is_regular_quintuple, verify_quintuple_identities};
use crate::report::IdentityReport;
use crate::search::{
    classify_regular, enumerate_diophantine, reduce_rank2, write_csv, SearchConfig,
    SymmetricMatrixInstance,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

/// How an invocation ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// Everything one invocation produces: the stdout JSON document, the
/// stderr diagnostic lines, and the status that becomes the exit code.
#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

#[derive(Debug)]
enum CliFailure {
    Math(String),
    Usage(String),
}

impl From<JsonError> for CliFailure {
    fn from(e: JsonError) -> CliFailure {
        CliFailure::Usage(e.0)
    }
}

fn math(e: impl std::fmt::Display) -> CliFailure {
    CliFailure::Math(e.to_string())
}

fn usage(msg: impl Into<String>) -> CliFailure {
    CliFailure::Usage(msg.into())
}

#[derive(Parser)]
#[command(
    name = "hyperquad",
    version,
    about = "Exact arithmetic for Diophantine m-tuples and the 2x2x2 hyperdeterminant"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy)]
enum Suite {
    Quadruple,
    Quintuple,
    Hypermatrix,
    Covariants,
    All,
}

#[derive(ValueEnum, Clone, Copy)]
enum Mode {
    Asymmetric,
    Symmetric,
}

#[derive(Subcommand)]
enum Command {
    /// Run the symbolic identity suites and report every identity checked
    VerifyIdentities {
        /// Suite to run
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Check the pairwise square conditions of a tuple file, plus
    /// regularity for quadruples and quintuples
    Check {
        /// JSON file: {"elements": ["1", "3", ...], "witnesses": {"0,1": "2", ...}?}
        tuple: PathBuf,
    },
    /// Extend a Diophantine triple: both roots of the quadruple condition
    ExtendTriple {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Extend a Diophantine quadruple: both roots of the quintuple condition
    ExtendQuadruple {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Hyperdeterminant and six face determinants of a 2x2x2 hypermatrix
    Hyperdet {
        /// JSON file: {"a": [[["a000","a001"],["a010","a011"]],[[...],[...]]]}
        hypermatrix: PathBuf,
    },
    /// Solve for one missing hypermatrix entry so the hyperdeterminant vanishes
    Complete {
        hypermatrix: PathBuf,
        /// Index of the missing entry as three binary digits, e.g. 000
        #[arg(long)]
        missing: String,
    },
    /// Apply a face-mixing rotation to a generalized solution
    Rotate {
        /// JSON file: {"x": [...], "y": [...], "z": [...]?}
        solution: PathBuf,
        /// Rotation family: 15a, 15b, or 15c
        #[arg(long)]
        variant: String,
        /// Rotation cosine, a rational string
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Rotation sine, a rational string
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Build a generalized solution from free parameters
    Parameterize {
        #[arg(long, value_enum)]
        mode: Mode,
        params: PathBuf,
    },
    /// Enumerate integer Diophantine tuples up to a bound
    Search {
        /// Tuple length, 2 through 4
        #[arg(long)]
        arity: usize,
        /// Largest element allowed
        #[arg(long)]
        bound: u64,
        /// One shard of the survey, as index/count with 0 <= index < count
        #[arg(long)]
        shard: Option<String>,
        /// Also write the tuples as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Reduce a rank-2 symmetric matrix to k*x_i*x_j + m normal form
    ReduceMatrix {
        /// JSON file: {"entries": [["2", "4", ...], ...]}
        matrix: PathBuf,
    },
}

/// Parses and executes one invocation. The first argv element is the
/// program name, as handed to a process.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => execute(cli.command),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            CommandResult {
                status: Status::Ok,
                payload: Value::Null,
                diagnostics: vec![e.render().to_string()],
            }
        }
        Err(e) => parse_failure(&e),
    }
}

/// Process entry point: prints the result and maps status to exit code.
/// Help and version requests print plain text instead of JSON.
pub fn main_entry<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{}", e.render());
            ExitCode::SUCCESS
        }
        Err(e) => finish(parse_failure(&e)),
        Ok(cli) => finish(execute(cli.command)),
    }
}

fn finish(result: CommandResult) -> ExitCode {
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    println!("{}", result.payload);
    ExitCode::from(result.status.exit_code())
}

fn parse_failure(e: &clap::Error) -> CommandResult {
    let message = e.render().to_string().trim_end().to_string();
    CommandResult {
        status: Status::Error,
        payload: json!({ "error": message }),
        diagnostics: vec![message],
    }
}

fn execute(cmd: Command) -> CommandResult {
    match dispatch(cmd) {
        Ok(result) => result,
        Err(CliFailure::Math(m)) => CommandResult {
            status: Status::Fail,
            payload: json!({ "error": m }),
            diagnostics: vec![m],
        },
        Err(CliFailure::Usage(m)) => CommandResult {
            status: Status::Error,
            payload: json!({ "error": m }),
            diagnostics: vec![m],
        },
    }
}

fn ok(payload: Value) -> CommandResult {
    CommandResult {
        status: Status::Ok,
        payload,
        diagnostics: Vec::new(),
    }
}

fn dispatch(cmd: Command) -> Result<CommandResult, CliFailure> {
    match cmd {
        Command::VerifyIdentities { suite } => Ok(run_suites(suite)),
        Command::Check { tuple } => {
            let tuple = MTuple::from_json(&read_json(&tuple)?)?;
            Ok(check_tuple(&tuple))
        }
        Command::ExtendTriple { a, b, c } => {
            let (a, b, c) = (rat(&a, "a")?, rat(&b, "b")?, rat(&c, "c")?);
            let roots = ahs_extend(&a, &b, &c).map_err(math)?;
            Ok(ok(roots_json(roots)))
        }
        Command::ExtendQuadruple { a, b, c, d } => {
            let (a, b, c, d) = (rat(&a, "a")?, rat(&b, "b")?, rat(&c, "c")?, rat(&d, "d")?);
            let roots = dujella_extend(&a, &b, &c, &d).map_err(math)?;
            Ok(ok(roots_json(roots)))
        }
        Command::Hyperdet { hypermatrix } => {
            let a = Hypermatrix222::from_json(&read_json(&hypermatrix)?)?;
            let faces: Map<String, Value> = FACE_LABELS
                .iter()
                .zip(face_determinants(&a).iter())
                .map(|(label, f)| (format!("F{label}"), rat_to_value(f)))
                .collect();
            Ok(ok(json!({
                "hyperdet": rat_to_value(&hyperdet(&a)),
                "faces": faces,
            })))
        }
        Command::Complete {
            hypermatrix,
            missing,
        } => {
            let a = Hypermatrix222::from_json(&read_json(&hypermatrix)?)?;
            let index = parse_missing(&missing)?;
            let roots = complete(&a, index).map_err(math)?;
            Ok(ok(json!({
                "roots": roots.iter().map(rat_to_value).collect::<Vec<_>>()
            })))
        }
        Command::Rotate {
            solution,
            variant,
            c,
            s,
        } => {
            let sol = GenQuadruple::from_json(&read_json(&solution)?)?;
            let variant = parse_variant(&variant)?;
            let rot = Rotation {
                c: rat(&c, "--c")?,
                s: rat(&s, "--s")?,
            };
            let rotated = rotate(&sol, variant, &rot).map_err(math)?;
            Ok(ok(rotated.to_json()))
        }
        Command::Parameterize { mode, params } => {
            let v = read_json(&params)?;
            let payload = match mode {
                Mode::Asymmetric => {
                    let inputs = AsymmetricInputs::from_json(&v)?;
                    parameterize_asymmetric(&inputs).map_err(math)?.to_json()
                }
                Mode::Symmetric => {
                    let params = SymParam::from_json(&v)?;
                    parameterize_symmetric(&params).to_json()
                }
            };
            Ok(ok(payload))
        }
        Command::Search {
            arity,
            bound,
            shard,
            csv,
        } => run_search(arity, bound, shard.as_deref(), csv.as_deref()),
        Command::ReduceMatrix { matrix } => {
            let instance = SymmetricMatrixInstance::from_json(&read_json(&matrix)?)?;
            let reduced = reduce_rank2(&instance).map_err(math)?;
            Ok(ok(reduced.to_json()))
        }
    }
}

fn run_suites(suite: Suite) -> CommandResult {
    let report = match suite {
        Suite::Quadruple => verify_quadruple_identities(),
        Suite::Quintuple => verify_quintuple_identities(),
        Suite::Hypermatrix => verify_hypermatrix_identities(),
        Suite::Covariants => verify_covariant_identities(),
        Suite::All => {
            let mut all = IdentityReport::new("all");
            all.merge(verify_quadruple_identities());
            all.merge(verify_quintuple_identities());
            all.merge(verify_hypermatrix_identities());
            all.merge(verify_covariant_identities());
            all
        }
    };
    let status = if report.all_pass() {
        Status::Ok
    } else {
        Status::Fail
    };
    CommandResult {
        status,
        payload: report.to_json(),
        diagnostics: report.render().lines().map(str::to_string).collect(),
    }
}

fn check_tuple(tuple: &MTuple) -> CommandResult {
    let report = is_diophantine(tuple);
    let e = &tuple.elements;
    let regular = match tuple.arity() {
        4 => Value::Bool(is_regular_quadruple(&e[0], &e[1], &e[2], &e[3])),
        5 => Value::Bool(is_regular_quintuple(&e[0], &e[1], &e[2], &e[3], &e[4])),
        _ => Value::Null,
    };
    let status = if report.pass { Status::Ok } else { Status::Fail };
    CommandResult {
        status,
        payload: json!({
            "arity": tuple.arity(),
            "diophantine": report.to_json(),
            "regular": regular,
        }),
        diagnostics: Vec::new(),
    }
}

fn run_search(
    arity: usize,
    bound: u64,
    shard: Option<&str>,
    csv: Option<&Path>,
) -> Result<CommandResult, CliFailure> {
    if !(2..=4).contains(&arity) {
        return Err(usage(format!("--arity must be 2, 3, or 4, got {arity}")));
    }
    if bound == 0 {
        return Err(usage("--bound must be at least 1"));
    }
    let cfg = SearchConfig {
        shard: shard.map(parse_shard).transpose()?,
        ..SearchConfig::new(bound, arity)
    };
    let tuples = enumerate_diophantine(&cfg);
    if let Some(path) = csv {
        let file = fs::File::create(path)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        write_csv(&tuples, file).map_err(|e| usage(e.to_string()))?;
    }
    let list: Vec<Value> = tuples
        .iter()
        .map(|t| {
            let mut obj = t.to_json();
            if arity == 4 {
                obj["regular"] = Value::Bool(classify_regular(t));
            }
            obj
        })
        .collect();
    Ok(CommandResult {
        status: Status::Ok,
        payload: Value::Array(list),
        diagnostics: vec![format!("found {} tuples", tuples.len())],
    })
}

fn read_json(path: &Path) -> Result<Value, CliFailure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn rat(s: &str, what: &str) -> Result<Rational, CliFailure> {
    Rational::from_str(s)
        .map_err(|_| usage(format!("{what}: \"{s}\" is not a rational (use n or n/d)")))
}

fn roots_json((upper, lower): (Rational, Rational)) -> Value {
    json!({ "roots": [rat_to_value(&upper), rat_to_value(&lower)] })
}

fn parse_missing(s: &str) -> Result<(usize, usize, usize), CliFailure> {
    let digits: Vec<usize> = s
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(()),
        })
        .collect::<Result<_, _>>()
        .map_err(|()| usage(format!("--missing wants three binary digits like 011, got \"{s}\"")))?;
    match digits[..] {
        [i, j, k] => Ok((i, j, k)),
        _ => Err(usage(format!(
            "--missing wants exactly three binary digits, got {} in \"{s}\"",
            digits.len()
        ))),
    }
}

fn parse_variant(s: &str) -> Result<RotationVariant, CliFailure> {
    match s.to_ascii_lowercase().as_str() {
        "15a" | "a" => Ok(RotationVariant::A),
        "15b" | "b" => Ok(RotationVariant::B),
        "15c" | "c" => Ok(RotationVariant::C),
        _ => Err(usage(format!(
            "--variant must be 15a, 15b, or 15c (or a, b, c), got \"{s}\""
        ))),
    }
}

fn parse_shard(s: &str) -> Result<(usize, usize), CliFailure> {
    let bad = || usage(format!("--shard wants index/count like 0/4, got \"{s}\""));
    let (index, count) = s.split_once('/').ok_or_else(bad)?;
    let index: usize = index.parse().map_err(|_| bad())?;
    let count: usize = count.parse().map_err(|_| bad())?;
    if count == 0 || index >= count {
        return Err(usage(format!(
            "--shard index must be below the count, got {index}/{count}"
        )));
    }
    Ok((index, count))
}
