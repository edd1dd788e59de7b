//! Command-line front end. [`run`] is pure: it takes argv and returns the
//! exit code and both output streams, so golden tests can call it directly.
//!
//! Exit codes: 0 on success, 2 on bad input, 1 when an internal consistency
//! check fails.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::engine::{apply_word, AmplitudeEntry, QuantumState, WordOperator};
use crate::entanglement::{
    aravind_demo, ghz_state, lemma_demo, product_test_2q, schmidt_rank, Bipartition, RANK_TOL,
};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::relations::{check_relation, relation_catalog};
use crate::rmatrix::{build_r, check_unitary, check_yang_baxter, RParams};
use crate::statesum::{bracket_state_sum, bracket_via_trace, sigma_zero_one, z_invariant, z_special};
use crate::C64;

/// Phases used when neither `--params` nor `--phases` is given.
pub const DEFAULT_PHASES: [f64; 4] = [0.3, 1.1, 2.0, 0.7];

#[derive(Debug, Parser)]
#[command(name = "braidq", version, about = "Braiding operators as quantum gates and link invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Tolerance for residual checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
struct ParamArgs {
    /// Four complex parameters a b c d as `re,im`.
    #[arg(long, num_args = 4, value_name = "RE,IM", value_parser = parse_complex, allow_negative_numbers = true, conflicts_with = "phases")]
    params: Option<Vec<C64>>,

    /// Four angles in radians: a = e^{i θa} and so on.
    #[arg(long, num_args = 4, value_name = "THETA", allow_negative_numbers = true)]
    phases: Option<Vec<f64>>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<RParams> {
        match (&self.params, &self.phases) {
            (Some(z), _) => RParams::new(z[0], z[1], z[2], z[3]),
            (None, Some(t)) => Ok(RParams::from_phases([t[0], t[1], t[2], t[3]])),
            (None, None) => Ok(RParams::from_phases(DEFAULT_PHASES)),
        }
    }
}

fn parse_complex(s: &str) -> std::result::Result<C64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got {s:?}"))?;
    let re: f64 = re.trim().parse().map_err(|_| format!("bad real part {re:?}"))?;
    let im: f64 = im.trim().parse().map_err(|_| format!("bad imaginary part {im:?}"))?;
    Ok(C64::new(re, im))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Bracket,
    Z,
    Sigma,
    Zspecial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Demo {
    Ghz,
    Aravind,
    Lemma,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unitarity and Yang-Baxter residuals of R.
    CheckYbe {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Apply the representation of a braid word to a state.
    BraidRun {
        /// Braid word, fixture name, or @file.
        #[arg(long)]
        word: String,
        /// Input basis state as a bit string; defaults to all zeros.
        #[arg(long, conflicts_with = "state")]
        input: Option<String>,
        /// Input state as JSON amplitude entries, or @file.
        #[arg(long)]
        state: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Product test and Schmidt ranks of a state.
    EntangleTest {
        /// State as JSON amplitude entries, or @file.
        #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
        state: Option<String>,
        /// Named state: bell, singlet, ghz, zero2.
        #[arg(long)]
        fixture: Option<String>,
        /// Left side of the cut as comma-separated 1-based qubits; default: every single qubit.
        #[arg(long, value_delimiter = ',')]
        cut: Option<Vec<usize>>,
    },
    /// State sums of the closure of a braid word.
    Invariant {
        /// Braid word, fixture name, or @file.
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Mode::Bracket)]
        mode: Mode,
        /// Evaluate at the given parameters with Q = sqrt(b/a).
        #[arg(long)]
        numeric: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Virtual braid group relations in the representation.
    CheckRelations {
        #[arg(long)]
        strands: usize,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Built-in demonstrations.
    Demo {
        #[arg(value_enum)]
        which: Demo,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// List the bundled braid fixtures with their closure data.
    Fixtures,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: String) -> Self {
        Self { code, stdout: String::new(), stderr: format!("{msg}\n") }
    }
}

enum Printed {
    Json(Value),
    Raw(String),
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => {
                    let text = e.to_string();
                    let line = text.lines().next().unwrap_or("invalid arguments");
                    Outcome::fail(2, line.trim_start_matches("error: ").to_string())
                }
            };
        }
    };
    if cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Outcome::fail(2, "tolerance must be positive".into());
    }
    match dispatch(&cli) {
        Ok(Printed::Raw(s)) => Outcome::ok(format!("{s}\n")),
        Ok(Printed::Json(v)) => Outcome::ok(render(&v, cli.output)),
        Err(Failure::Input(e)) => Outcome::fail(2, e.to_string()),
        Err(Failure::Check(v, msg)) => Outcome {
            code: 1,
            stdout: render(&v, cli.output),
            stderr: format!("{msg}\n"),
        },
    }
}

enum Failure {
    Input(Error),
    /// Computation finished but a check failed; the report is still printed.
    Check(Value, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Assertion(msg) => Failure::Check(Value::Null, msg),
            other => Failure::Input(other),
        }
    }
}

fn render(v: &Value, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => format!("{v}\n"),
        OutputFormat::Text => match v {
            Value::Object(map) => map.iter().map(|(k, x)| format!("{k}: {}\n", text_value(x))).collect(),
            Value::Array(items) => items.iter().map(|x| format!("{}\n", text_value(x))).collect(),
            other => format!("{}\n", text_value(other)),
        },
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn read_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

/// `@file`, fixture name, or literal word.
fn resolve_word(arg: &str) -> Result<BraidWord> {
    if let Some(w) = fixtures::braid(arg) {
        return Ok(w);
    }
    read_arg(arg)?.parse()
}

fn state_fixture(name: &str) -> Result<QuantumState> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = |re: f64| C64::new(re, 0.0);
    match name {
        "bell" => QuantumState::new(vec![z(h), z(0.0), z(0.0), z(h)]),
        "singlet" => QuantumState::new(vec![z(0.0), z(h), z(-h), z(0.0)]),
        "ghz" => Ok(ghz_state()),
        "zero2" => QuantumState::from_bits("00"),
        other => Err(Error::Invalid(format!("unknown state fixture {other:?}"))),
    }
}

fn parse_state(arg: &str) -> Result<QuantumState> {
    let text = read_arg(arg)?;
    let entries: Vec<AmplitudeEntry> =
        serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("bad state JSON: {e}")))?;
    QuantumState::from_entries(&entries)
}

fn dispatch(cli: &Cli) -> std::result::Result<Printed, Failure> {
    let tol = cli.tolerance;
    match &cli.command {
        Command::CheckYbe { params } => {
            let p = params.resolve()?;
            let r = build_r(&p)?;
            let (u, y) = (check_unitary(&r), check_yang_baxter(&r));
            let report = json!({ "unitary_residual": u, "ybe_residual": y });
            if u > tol || y > tol {
                return Err(Failure::Check(report, format!("residual above tolerance {tol:e}")));
            }
            Ok(Printed::Json(report))
        }
        Command::BraidRun { word, input, state, params } => {
            let w = resolve_word(word)?;
            let p = params.resolve()?;
            let s = match (input, state) {
                (Some(bits), _) => QuantumState::from_bits(bits)?,
                (None, Some(json)) => parse_state(json)?,
                (None, None) => QuantumState::basis(w.strands(), 0),
            };
            let op = WordOperator::new(w.clone(), p)?;
            let out = apply_word(&s, &op)?;
            Ok(Printed::Json(json!({
                "word": w.to_string(),
                "input": to_json(&s),
                "output": to_json(&out),
            })))
        }
        Command::EntangleTest { state, fixture, cut } => {
            let s = match (state, fixture) {
                (Some(json), _) => parse_state(json)?,
                (None, Some(name)) => state_fixture(name)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            let n = s.qubits();
            let cuts = match cut {
                Some(left) => vec![Bipartition::new(left, n)?],
                None if n >= 2 => (1..=n).map(|q| Bipartition::single(q, n)).collect::<Result<_>>()?,
                None => Vec::new(),
            };
            let mut ranks = Vec::new();
            for c in &cuts {
                let rank = schmidt_rank(&s, c, RANK_TOL)?;
                ranks.push(json!({ "left": c.left(), "schmidt_rank": rank }));
            }
            let entangled = ranks.iter().any(|r| r["schmidt_rank"].as_u64() > Some(1));
            let product = if n == 2 { Some(product_test_2q(&s, tol)?) } else { None };
            if let Some(t) = &product {
                let rank = schmidt_rank(&s, &Bipartition::single(1, 2)?, RANK_TOL)?;
                if t.entangled != (rank == 2) {
                    return Err(Failure::Check(
                        to_json(t),
                        "determinant test and Schmidt rank disagree".into(),
                    ));
                }
            }
            Ok(Printed::Json(json!({
                "qubits": n,
                "product_test": to_json(&product),
                "cuts": ranks,
                "entangled": entangled,
            })))
        }
        Command::Invariant { word, mode, numeric, params } => {
            let w = resolve_word(word)?;
            let value = match mode {
                Mode::Bracket => bracket_state_sum(&w)?,
                Mode::Z => z_invariant(&w)?,
                Mode::Sigma => sigma_zero_one(&w)?,
                Mode::Zspecial => z_special(&w)?,
            };
            if !numeric {
                return Ok(Printed::Raw(value.to_string()));
            }
            let p = params.resolve()?;
            let z = value.eval(&p);
            let mut report = json!({ "re": z.re, "im": z.im });
            if *mode == Mode::Bracket && (p.c - p.d).norm() <= tol {
                let t = bracket_via_trace(&w, &p)?;
                report["trace_re"] = json!(t.re);
                report["trace_im"] = json!(t.im);
                if (t - z).norm() > tol {
                    return Err(Failure::Check(report, "trace and state sum disagree".into()));
                }
            }
            Ok(Printed::Json(report))
        }
        Command::CheckRelations { strands, params } => {
            if *strands == 0 {
                return Err(Error::Invalid("need at least one strand".into()).into());
            }
            let p = params.resolve()?;
            let mut rows = Vec::new();
            let mut worst: f64 = 0.0;
            for r in relation_catalog(*strands) {
                let res = check_relation(&r, &p)?;
                worst = worst.max(res);
                rows.push(json!({
                    "name": r.name.to_string(),
                    "lhs": r.lhs.to_string(),
                    "rhs": r.rhs.to_string(),
                    "residual": res,
                }));
            }
            let table = Value::Array(rows);
            if worst > tol {
                return Err(Failure::Check(table, format!("relation residual {worst:e} above {tol:e}")));
            }
            Ok(Printed::Json(table))
        }
        Command::Demo { which, params } => match which {
            Demo::Ghz => {
                let g = ghz_state();
                let ranks: Vec<usize> = (1..=3)
                    .map(|q| schmidt_rank(&g, &Bipartition::single(q, 3)?, RANK_TOL))
                    .collect::<Result<_>>()?;
                Ok(Printed::Json(json!({
                    "state": to_json(&g),
                    "norm": g.norm(),
                    "single_qubit_cut_ranks": ranks,
                })))
            }
            Demo::Aravind => Ok(Printed::Json(to_json(&aravind_demo()?))),
            Demo::Lemma => {
                let p = params.resolve()?;
                Ok(Printed::Json(to_json(&lemma_demo(&p, tol)?)))
            }
        },
        Command::Fixtures => {
            let rows: Vec<Value> = fixtures::all_braids()
                .into_iter()
                .map(|(name, w)| {
                    let d = w.closure_data();
                    let lk: Vec<Value> = d
                        .pairwise_lk
                        .iter()
                        .map(|(&(i, j), &v)| json!({ "components": [i, j], "lk": v }))
                        .collect();
                    json!({
                        "name": name,
                        "word": w.to_string(),
                        "components": d.component_count(),
                        "writhe": d.writhe,
                        "rot": d.rot().ok(),
                        "linking": lk,
                    })
                })
                .collect();
            Ok(Printed::Json(Value::Array(rows)))
        }
    }
}
