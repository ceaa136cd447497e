//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use griffiths_core::chow::pn_chern_omega;
use griffiths_core::formulas::{
    cy_alt_sum, cy_beta_x, dnc_alpha_x, dnc_alpha_x_normal, lefschetz_report, linear_pencil_report,
    pe_pencil_report, LinearReport, StrataFile,
};
use griffiths_core::verify::{run_suites, SuiteParams, SUITES};
use griffiths_core::{HeightReport, PencilSpec, PnClass, Rat, Variant};
use serde_json::{json, Value};

use crate::expr::{eval_class_expr, parse_class_expr, Model};
use crate::table::{build_table, parse_range, write_table, Formula, TableFormat};

/// Exit code for usage and syntax errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for failed verification and evaluation errors.
pub const EXIT_FAILURE: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "griffiths", version, about = "Exact Griffiths heights of hypersurface pencils")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Heights and critical-point counts for one family.
    #[command(subcommand)]
    Compute(Compute),
    /// Sweep a closed formula over a parameter grid.
    Table(TableArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Evaluate a characteristic-class expression.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Compute {
    /// Pencil of hypersurfaces in a projective bundle over a curve.
    Pe(PeArgs),
    /// Pencil in `|M (x) O(delta)|` on `P^n x P^1`.
    Linear(LinearArgs),
    /// Lefschetz pencil of hyperplane sections of `P^n` embedded by `O(k)`.
    Lefschetz(LefschetzArgs),
    /// Localized terms of normal-crossing fibers read from a strata file.
    Dnc(DncArgs),
}

#[derive(Debug, Args)]
pub struct PeArgs {
    /// Fiber dimension; `rank E = N + 1`.
    #[arg(long = "N")]
    pub n: u32,
    #[arg(long)]
    pub d: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub deg_e: Rat,
    #[arg(long, allow_hyphen_values = true)]
    pub deg_m: Rat,
    #[arg(long, default_value = "minus")]
    pub sign: Variant,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct LinearArgs {
    /// `pn:<n>`.
    #[arg(long)]
    pub variety: String,
    /// Degree of `M` as a multiple of the hyperplane class.
    #[arg(long, allow_hyphen_values = true)]
    pub m_degree: i64,
    #[arg(long)]
    pub delta: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct LefschetzArgs {
    /// `pn:<n>`.
    #[arg(long)]
    pub variety: String,
    #[arg(long)]
    pub embedding_degree: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct DncArgs {
    #[arg(long)]
    pub strata: PathBuf,
    /// Also report the Calabi-Yau alternating sum over all fibers.
    #[arg(long, requires_all = ["deg_l", "chi_eta"])]
    pub cy: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub deg_l: Option<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    pub chi_eta: Option<i64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub formula: Formula,
    /// Inclusive range `a..b`; required for `F`.
    #[arg(long, value_parser = parse_range)]
    pub d: Option<RangeInclusive<u32>>,
    #[arg(long = "N", value_parser = parse_range)]
    pub n: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<u32>,
    /// Sample `d` in `1..=d_max` instead of `1..=N+3`.
    #[arg(long)]
    pub d_max: Option<u32>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// `pe:N:d`, `pe:N:d:degE:degM` or `pn:n`.
    #[arg(long)]
    pub model: String,
    #[arg(long, allow_hyphen_values = true)]
    pub expr: String,
}

/// Parses `argv` and runs the command; returns the process exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = if e.use_stderr() { e.render().to_string() } else { e.to_string() };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match run(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAILURE
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Compute(c) => compute(c, out, err),
        Command::Table(t) => {
            let table = build_table(t.formula, t.d, t.n)?;
            match &t.out {
                Some(path) => {
                    let mut buf = Vec::new();
                    write_table(&table, t.format, &mut buf)?;
                    fs::write(path, buf).with_context(|| format!("writing {}", path.display()))?;
                }
                None => write_table(&table, t.format, out)?,
            }
            Ok(0)
        }
        Command::Verify(v) => verify(v, out, err),
        Command::Eval(e) => eval(e, out, err),
    }
}

fn compute(c: Compute, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (format, fields, warnings) = match c {
        Compute::Pe(a) => {
            let spec = PencilSpec::new(a.n, a.d, a.deg_e, a.deg_m, a.sign)?;
            let r = pe_pencil_report(&spec);
            (a.format, pe_fields(&spec, &r), r.warnings)
        }
        Compute::Linear(a) => {
            let n = pn_dim(&a.variety)?;
            let c1m = PnClass::hyperplane(n).scale(&Rat::from_int(a.m_degree));
            let r = linear_pencil_report(&pn_chern_omega(n), &c1m, a.delta, n)?;
            (a.format, linear_fields(&r), r.warnings)
        }
        Compute::Lefschetz(a) => {
            let n = pn_dim(&a.variety)?;
            let c1 = PnClass::hyperplane(n).scale(&Rat::from_int(a.embedding_degree));
            let r = lefschetz_report(n, &pn_chern_omega(n), &c1)?;
            (a.format, linear_fields(&r), r.warnings)
        }
        Compute::Dnc(a) => (a.format, dnc_fields(&a)?, Vec::new()),
    };
    emit(out, format, fields)?;
    for w in warnings {
        writeln!(err, "warning: {w}")?;
    }
    Ok(0)
}

fn pn_dim(variety: &str) -> Result<usize> {
    match variety.parse::<Model>() {
        Ok(Model::Pn { n }) => Ok(n),
        _ => bail!("unsupported variety `{variety}` (expected pn:<n>)"),
    }
}

type Fields = Vec<(String, Value)>;

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn pe_fields(spec: &PencilSpec, r: &HeightReport) -> Fields {
    let variant = json!(spec.variant);
    vec![
        ("N".into(), json!(spec.n)),
        ("d".into(), json!(spec.d)),
        ("deg_e".into(), s(&spec.deg_e)),
        ("deg_m".into(), s(&spec.deg_m)),
        ("ht_int".into(), s(&r.ht_int)),
        ("sigma_count".into(), s(&r.sigma_count)),
        ("ht_plus".into(), s(&r.ht_plus)),
        ("ht_minus".into(), s(&r.ht_minus)),
        ("ht_stab".into(), s(&r.ht_stab)),
        ("variant".into(), variant),
        ("height".into(), s(r.height(spec.variant))),
        ("sigma_class".into(), s(&r.sigma_class)),
        ("curve_class_plus".into(), s(&r.curve_class_plus)),
        ("curve_class_minus".into(), s(&r.curve_class_minus)),
    ]
}

fn linear_fields(r: &LinearReport) -> Fields {
    vec![
        ("sigma_count".into(), s(&r.sigma_count)),
        ("ht_plus".into(), s(&r.ht_plus)),
        ("ht_minus".into(), s(&r.ht_minus)),
        ("chi_top".into(), s(&r.chi_top)),
    ]
}

fn dnc_fields(a: &DncArgs) -> Result<Fields> {
    let text = fs::read_to_string(&a.strata).with_context(|| format!("reading {}", a.strata.display()))?;
    let file: StrataFile =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", a.strata.display()))?;
    let specs = file.into_specs()?;
    let mut fibers = Vec::new();
    for spec in &specs {
        let mut f = serde_json::Map::new();
        f.insert("alpha_x".into(), s(dnc_alpha_x(spec)?));
        if let Some(alt) = dnc_alpha_x_normal(spec) {
            f.insert("alpha_x_normal".into(), s(alt));
        }
        if spec.components.iter().all(|c| c.v.is_some()) {
            f.insert("beta_x".into(), s(cy_beta_x(spec)?));
        }
        fibers.push(Value::Object(f));
    }
    let mut fields: Fields = vec![("fibers".into(), Value::Array(fibers))];
    if a.cy {
        let (Some(deg_l), Some(chi)) = (&a.deg_l, a.chi_eta) else {
            bail!("--cy needs --deg-l and --chi-eta");
        };
        fields.push(("cy_alt_sum".into(), s(cy_alt_sum(deg_l, chi, &specs)?)));
    }
    Ok(fields)
}

/// Aligned `key = value` lines, or a JSON object in field order.
fn emit(out: &mut dyn Write, format: OutputFormat, fields: Fields) -> Result<()> {
    match format {
        OutputFormat::Json => {
            let obj: serde_json::Map<String, Value> = fields.into_iter().collect();
            serde_json::to_writer_pretty(&mut *out, &obj)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &fields {
                match v {
                    Value::Array(items) => {
                        for (i, item) in items.iter().enumerate() {
                            let Value::Object(obj) = item else { continue };
                            let parts: Vec<String> = obj.iter().map(|(k, v)| format!("{k} = {}", plain(v))).collect();
                            writeln!(out, "{k}[{i}]: {}", parts.join(", "))?;
                        }
                    }
                    _ => writeln!(out, "{k:<width$} = {}", plain(v))?,
                }
            }
        }
    }
    Ok(())
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn verify(v: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let names: Vec<&str> = if v.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&v.suite.as_str()) {
        vec![v.suite.as_str()]
    } else {
        writeln!(err, "error: unknown suite `{}`; known suites: all, {}", v.suite, SUITES.join(", "))?;
        return Ok(EXIT_USAGE);
    };
    let params = SuiteParams { max_n: v.max_n, d_max: v.d_max, samples: v.samples, seed: v.seed };
    let reports = run_suites(&names, &params)?;
    let ok = reports.iter().filter(|r| r.meets_expectation()).count();
    match v.format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            let width = names.iter().map(|n| n.len()).max().unwrap_or(0);
            for r in &reports {
                let tag = if r.meets_expectation() { "" } else { "  <- unexpected" };
                writeln!(out, "{:<11} {:<width$} checks={}{tag}", r.status.to_string(), r.suite, r.checks_run)?;
                for w in &r.witnesses {
                    writeln!(out, "    witness {}: expected {}, got {}", w.input, w.expected, w.actual)?;
                }
                for n in &r.notes {
                    writeln!(out, "    note: {n}")?;
                }
            }
            writeln!(out, "{ok}/{} suites met their expected outcome", reports.len())?;
        }
    }
    Ok(if ok == reports.len() { 0 } else { EXIT_FAILURE })
}

fn eval(a: EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let model: Model = match a.model.parse() {
        Ok(m) => m,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let ast = match parse_class_expr(&a.expr) {
        Ok(ast) => ast,
        Err(e) => {
            writeln!(err, "error: {e}\n  {}\n  {:>width$}", a.expr, "^", width = e.offset + 1)?;
            return Ok(EXIT_USAGE);
        }
    };
    match eval_class_expr(&ast, &model) {
        Ok(r) => {
            for n in &r.notices {
                writeln!(err, "notice: {n}")?;
            }
            writeln!(out, "{}", r.value)?;
            Ok(0)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_FAILURE)
        }
    }
}
