//! `sga`: build chiral representations, run verification suites, print sign
//! tables and evaluate product chains.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use sga_core::blade::{decompose_multivector, spinor_outer_decompose, BladeDecomposition};
use sga_core::expr::parse_chain;
use sga_core::rep::DEFAULT_MAX_DIM;
use sga_core::suites::{run_suite, Suite, SuiteOptions, SuiteReport};
use sga_core::symmetry::{axis_rotor, classify_reflection, conjugate, is_real_element, plane_rotor, rotate, Angle, Rotor, Trig};
use sga_core::tables::{conjugation_symmetry_table, gamma_commutation_table, metric_symmetry_table, period8_check, SignTable};
use sga_core::{
    AnyMatrix, BladeBasis, Complex64, Element, Exact, Field, FormalSum, Matrix, MetricChoice, OddMode, RepConfig, Representation,
    Sga, SgaError, Signature,
};

#[derive(Parser, Debug)]
#[command(name = "sga", version, about = "Exact chiral representations of spinors and Clifford algebras")]
struct Cli {
    /// Seed for randomized property sweeps.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
    Md,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Standard,
    Alternative,
    PrimeStandard,
    PrimeAlternative,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OddArg {
    Project,
    EmbedN,
    EmbedNPlus1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScalarMode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Orthonormal,
    Chiral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableArg {
    All,
    Metric,
    Commutation,
    Conjugation,
}

#[derive(Args, Debug, Clone)]
struct RepArgs {
    /// Spacelike dimensions.
    #[arg(short = 'K', long = "k", default_value_t = 3)]
    k: usize,
    /// Timelike dimensions.
    #[arg(short = 'M', long = "m", default_value_t = 0)]
    m: usize,
    #[arg(long, value_enum, default_value = "standard")]
    metric: MetricArg,
    /// Treatment of odd N.
    #[arg(long, value_enum, default_value = "project")]
    odd_mode: OddArg,
    /// Timelike axes, 1-based and comma separated (default: the minus axis of
    /// each plane in turn).
    #[arg(long, value_delimiter = ',')]
    timelike: Vec<usize>,
    /// Cap on constructed generators.
    #[arg(long, env = "SGA_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump a representation as JSON.
    Build(RepArgs),
    /// Sign tables with their period-8 check.
    Tables {
        #[arg(long, value_enum, default_value = "all")]
        kind: TableArg,
        /// Largest N for the metric and commutation tables.
        #[arg(long, default_value_t = 17)]
        max_n: usize,
        /// Smallest K-M for the conjugation table.
        #[arg(long, default_value_t = -4, allow_negative_numbers = true)]
        min_diff: i64,
        /// Largest K-M for the conjugation table.
        #[arg(long, default_value_t = 12, allow_negative_numbers = true)]
        max_diff: i64,
        #[arg(long, env = "SGA_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Run verification suites.
    Verify {
        /// pauli, dirac, brauer-weyl, sign-laws, periodicity, rotors,
        /// conjugation, exclusion, odd-n, trace or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random cases per randomized law.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Largest even N in the Brauer-Weyl round trip.
        #[arg(long, default_value_t = 12)]
        max_even_n: usize,
        #[arg(long, env = "SGA_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Expand a matrix over blades and over spinor outer products.
    Decompose {
        #[command(flatten)]
        rep: RepArgs,
        /// Matrix as JSON rows of scalars.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "orthonormal")]
        basis: BasisArg,
    },
    /// Evaluate a product chain such as "e[d]' e[u]".
    Eval {
        #[command(flatten)]
        rep: RepArgs,
        chain: String,
        /// Forbidden products give the zero formal element instead of failing.
        #[arg(long)]
        forbidden_as_zero: bool,
        /// Also expand a multivector result over blades.
        #[arg(long)]
        blades: bool,
    },
    /// Classify the reflection through the given axes.
    ClassifyReflection {
        #[command(flatten)]
        rep: RepArgs,
        /// Reflected axes, 1-based; the scalar axis of an embedding is N+1.
        #[arg(long, value_delimiter = ',', required = true)]
        axes: Vec<usize>,
    },
    /// Build a plane rotor and optionally apply it to a chain.
    Rotate {
        #[command(flatten)]
        rep: RepArgs,
        /// Rotation plane k (the gamma_k^+ gamma_k^- plane).
        #[arg(long, conflicts_with = "axes")]
        plane: Option<usize>,
        /// Two orthonormal axes, 1-based.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        axes: Vec<usize>,
        /// Radians, or a multiple of pi such as "pi/2".
        #[arg(long, allow_hyphen_values = true)]
        angle: String,
        #[arg(long, value_enum, default_value = "exact")]
        scalar: ScalarMode,
        /// Chain to rotate.
        #[arg(long)]
        apply: Option<String>,
    },
    /// Conjugate the value of a chain.
    Conjugate {
        #[command(flatten)]
        rep: RepArgs,
        chain: String,
    },
}

/// A usage or input error; verification failures are reported through the
/// `bool` of a successful [`Outcome`].
#[derive(Debug)]
struct Failure(String);

impl From<SgaError> for Failure {
    fn from(e: SgaError) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

fn run<I: IntoIterator<Item = OsString>>(argv: I) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = execute(&cli).and_then(|(text, ok)| {
        write_output(cli.output.as_ref(), &text)?;
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("verification failed");
            1
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure(format!("cannot write output: {e}"))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn check_format(given: Option<Format>, allowed: &[Format]) -> Result<Format, Failure> {
    let f = given.unwrap_or(allowed[0]);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure(format!("format {f:?} is not available here")))
    }
}

fn build_rep(args: &RepArgs) -> Result<Representation, Failure> {
    let sig = if args.timelike.is_empty() {
        Signature::new(args.k, args.m)?
    } else {
        if args.timelike.contains(&0) {
            return Err(Failure("timelike axes are 1-based".into()));
        }
        Signature::with_timelike(args.k, args.m, args.timelike.iter().map(|a| a - 1).collect())?
    };
    let metric = match args.metric {
        MetricArg::Standard => MetricChoice::Standard,
        MetricArg::Alternative => MetricChoice::Alternative,
        MetricArg::PrimeStandard => MetricChoice::PrimeStandard,
        MetricArg::PrimeAlternative => MetricChoice::PrimeAlternative,
    };
    let mode = match args.odd_mode {
        OddArg::Project => OddMode::Project,
        OddArg::EmbedN => OddMode::EmbedScalarN,
        OddArg::EmbedNPlus1 => OddMode::EmbedScalarNPlus1,
    };
    Ok(Representation::build(
        RepConfig::new(sig).with_metric(metric).with_odd_mode(mode).with_max_dim(args.max_dim),
    )?)
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Build(args) => {
            check_format(cli.format, &[Format::Json])?;
            Ok((pretty(&build_rep(args)?.to_json()), true))
        }
        Command::Tables { kind, max_n, min_diff, max_diff, max_dim } => {
            tables(cli.format, *kind, *max_n, *min_diff..=*max_diff, *max_dim)
        }
        Command::Verify { suite, cases, max_even_n, max_dim } => {
            let opts = SuiteOptions { seed: cli.seed, max_even_n: *max_even_n, cases: *cases, max_dim: *max_dim };
            verify(cli.format, suite, &opts)
        }
        Command::Decompose { rep, input, basis } => decompose(cli.format, rep, input, *basis),
        Command::Eval { rep, chain, forbidden_as_zero, blades } => {
            eval(cli.format, rep, chain, *forbidden_as_zero, *blades)
        }
        Command::ClassifyReflection { rep, axes } => {
            let f = check_format(cli.format, &[Format::Json, Format::Text])?;
            let r = classify_reflection(&build_rep(rep)?, axes)?;
            Ok(match f {
                Format::Text => (r.class.to_string(), true),
                _ => (pretty(&json!(r)), true),
            })
        }
        Command::Rotate { rep, plane, axes, angle, scalar, apply } => {
            check_format(cli.format, &[Format::Json])?;
            rotate_cmd(rep, *plane, axes, angle, *scalar, apply.as_deref())
        }
        Command::Conjugate { rep, chain } => {
            check_format(cli.format, &[Format::Json])?;
            let rep = build_rep(rep)?;
            let s: Sga<Exact> = Sga::new(&rep);
            let value = s.simplify_chain(&parse_chain(&s, chain)?)?;
            let conj = conjugate(&rep, &value)?;
            let mut out = Map::new();
            out.insert("input".into(), element_json(&value));
            out.insert("conjugate".into(), element_json(&conj));
            if let Element::Multivector(m) = &value {
                out.insert("real".into(), json!(is_real_element(&rep, m, 0.0)?));
            }
            Ok((pretty(&Value::Object(out)), true))
        }
    }
}

fn tables(format: Option<Format>, kind: TableArg, max_n: usize, diffs: std::ops::RangeInclusive<i64>, max_dim: usize) -> Outcome {
    let f = check_format(format, &[Format::Md, Format::Csv, Format::Json])?;
    let mut list: Vec<SignTable> = Vec::new();
    if matches!(kind, TableArg::All | TableArg::Metric) {
        list.push(metric_symmetry_table(1..=max_n, max_dim)?);
    }
    if matches!(kind, TableArg::All | TableArg::Commutation) {
        list.push(gamma_commutation_table(1..=max_n, max_dim)?);
    }
    if matches!(kind, TableArg::All | TableArg::Conjugation) {
        if diffs.is_empty() {
            return Err(Failure("empty K-M range".into()));
        }
        list.push(conjugation_symmetry_table(diffs, max_dim)?);
    }
    // the period check needs nine consecutive keys; shorter tables skip it
    let periods: Vec<_> = list.iter().map(|t| period8_check(t).ok()).collect();
    let ok = periods.iter().flatten().all(|p| p.passed());
    let text = match f {
        Format::Json => pretty(&json!(list
            .iter()
            .zip(&periods)
            .map(|(t, p)| json!({ "table": t, "period8": p }))
            .collect::<Vec<_>>())),
        Format::Csv => list.iter().map(SignTable::to_csv).collect::<Vec<_>>().join("\n"),
        _ => list
            .iter()
            .zip(&periods)
            .map(|(t, p)| {
                let note = match p {
                    Some(p) if p.passed() => format!("\nperiod 8: {} comparisons, no violations\n", p.comparisons),
                    Some(p) => format!("\nperiod 8: {} violations in {} comparisons\n", p.violations.len(), p.comparisons),
                    None => String::new(),
                };
                format!("{}{note}", t.to_markdown())
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((text, ok))
}

fn verify(format: Option<Format>, suite: &str, opts: &SuiteOptions) -> Outcome {
    let f = check_format(format, &[Format::Json, Format::Text])?;
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let reports: Vec<SuiteReport> = suites.into_iter().map(|s| run_suite(s, opts)).collect();
    let ok = reports.iter().all(|r| r.passed);
    let text = match f {
        Format::Text => {
            let mut lines = Vec::new();
            for r in &reports {
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    lines.push(format!("{mark} {}: {} ({} cases)", r.suite, c.name, c.cases));
                    for msg in &c.failures {
                        lines.push(format!("     {msg}"));
                    }
                }
            }
            lines.join("\n")
        }
        _ => pretty(&json!({ "seed": opts.seed, "passed": ok, "suites": reports })),
    };
    Ok((text, ok))
}

fn blades_json<T: Field + serde::Serialize>(rep: &Representation, d: &BladeDecomposition<T>) -> Value {
    Value::Object(d.coefficients.iter().map(|(b, c)| (b.label(rep.n_dims()), json!(c))).collect())
}

fn outer_json<T: Field + serde::Serialize>(rep: &Representation, m: &Matrix<T>) -> Result<Value, Failure> {
    Ok(Value::Object(
        spinor_outer_decompose(rep, m)?
            .into_iter()
            .map(|((a, b), c)| (format!("{} {}", a.ascii(), b.ascii()), json!(c)))
            .collect(),
    ))
}

fn decompose(format: Option<Format>, args: &RepArgs, input: &PathBuf, basis: BasisArg) -> Outcome {
    check_format(format, &[Format::Json])?;
    let rep = build_rep(args)?;
    let text = fs::read_to_string(input).map_err(|e| Failure(format!("cannot read {}: {e}", input.display())))?;
    let basis = match basis {
        BasisArg::Orthonormal => BladeBasis::Orthonormal,
        BasisArg::Chiral => BladeBasis::Chiral,
    };
    let (blades, outer, ok) = match AnyMatrix::from_json(&text)? {
        AnyMatrix::Exact(m) => {
            let d = decompose_multivector(&rep, &m, basis)?;
            (blades_json(&rep, &d), outer_json(&rep, &m)?, d.reconstruct(&rep)? == m)
        }
        AnyMatrix::Float(m) => {
            let d = decompose_multivector(&rep, &m, basis)?;
            (blades_json(&rep, &d), outer_json(&rep, &m)?, d.reconstruct(&rep)?.close(&m, 1e-12))
        }
    };
    let out = json!({ "blades": blades, "outer_products": outer, "reconstructs": ok });
    Ok((pretty(&out), ok))
}

fn element_json<T: Field + serde::Serialize>(e: &Element<T>) -> Value {
    match e {
        Element::Scalar(s) => json!({ "species": "scalar", "value": s }),
        Element::Column(c) => json!({ "species": "column", "value": c }),
        Element::Row { row, .. } => json!({ "species": "row", "value": row }),
        Element::Multivector(m) => json!({ "species": "multivector", "value": m }),
    }
}

fn element_text(e: &Element<Exact>) -> String {
    let rows = |m: &Matrix<Exact>| {
        m.to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    match e {
        Element::Scalar(s) => s.to_string(),
        other => format!("{}\n{}", other.species(), rows(&other.as_matrix())),
    }
}

fn eval(format: Option<Format>, args: &RepArgs, chain: &str, forbidden_as_zero: bool, blades: bool) -> Outcome {
    let f = check_format(format, &[Format::Json, Format::Text])?;
    let rep = build_rep(args)?;
    let s: Sga<Exact> = Sga::new(&rep).forbidden_as_zero(forbidden_as_zero);
    let elements = parse_chain(&s, chain)?;
    let sum: FormalSum<Exact> = s.simplify_chain_formal(&elements)?;
    let Some(value) = sum.single() else {
        let text = match f {
            Format::Text => "0".to_string(),
            _ => pretty(&json!({ "species": "zero", "terms": [] })),
        };
        return Ok((text, true));
    };
    if f == Format::Text {
        return Ok((element_text(value), true));
    }
    let mut out = element_json(value);
    if let Element::Scalar(x) = value {
        out["display"] = json!(x.to_string());
    }
    if let (true, Element::Multivector(m)) = (blades, value) {
        out["blades"] = blades_json(&rep, &decompose_multivector(&rep, m, BladeBasis::Orthonormal)?);
    }
    Ok((pretty(&out), true))
}

fn rotor_for<T: Trig>(rep: &Representation, plane: Option<usize>, axes: &[usize], angle: Angle) -> Result<Rotor<T>, Failure> {
    match (plane, axes) {
        (Some(k), []) => Ok(plane_rotor(rep, k, angle)?),
        (None, [a, b]) => Ok(axis_rotor(rep, *a, *b, angle)?),
        _ => Err(Failure("give either --plane k or --axes a,b".into())),
    }
}

fn lift<T: Field>(e: &Element<Exact>) -> Element<T> {
    match e {
        Element::Scalar(x) => Element::Scalar(T::from_exact(x)),
        Element::Column(c) => Element::Column(c.map(T::from_exact)),
        Element::Row { column, row } => Element::Row { column: column.map(T::from_exact), row: row.map(T::from_exact) },
        Element::Multivector(m) => Element::Multivector(m.map(T::from_exact)),
    }
}

fn rotation_report<T: Trig + serde::Serialize>(rep: &Representation, r: Rotor<T>, mode: &str, apply: Option<&str>) -> Outcome {
    let eps = rep.metric().map(T::from_exact);
    // a Lorentz rotor is ε-orthogonal: Rᵀ ε R = ε
    let ok = (&(&r.matrix.transpose() * &eps) * &r.matrix).close(&eps, 1e-12);
    let mut out = json!({
        "scalar": mode,
        "generator": r.generator,
        "rotor": r.matrix,
        "reverse": r.reverse,
        "metric_preserved": ok,
    });
    if let Some(chain) = apply {
        let s: Sga<Exact> = Sga::new(rep);
        let value = s.simplify_chain(&parse_chain(&s, chain)?)?;
        out["rotated"] = element_json(&rotate(&r, &lift::<T>(&value))?);
    }
    Ok((pretty(&out), ok))
}

fn rotate_cmd(args: &RepArgs, plane: Option<usize>, axes: &[usize], angle: &str, scalar: ScalarMode, apply: Option<&str>) -> Outcome {
    let rep = build_rep(args)?;
    let angle: Angle = angle.parse()?;
    let inexact = matches!(angle, Angle::Radians(x) if x != 0.0);
    if scalar == ScalarMode::Float || inexact {
        let r: Rotor<Complex64> = rotor_for(&rep, plane, axes, angle)?;
        rotation_report(&rep, r, "float", apply)
    } else {
        let r: Rotor<Exact> = rotor_for(&rep, plane, axes, angle)?;
        rotation_report(&rep, r, "exact", apply)
    }
}
