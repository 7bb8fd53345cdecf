//! Command-line front end: argument model, engine dispatch, and output.
//!
//! Every command renders into a `String`; [`run`] maps results to exit
//! codes (0 success, 1 verification failure, 2 usage or parse error,
//! 3 resource budget exceeded).

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::binet::{char_roots, format_complex};
use crate::closed_form::{
    compose_from_leading, hessenberg_det_numeric_oracle, hessenberg_det_symbolic_with, multinomial_term_with,
};
use crate::error::{Error, Result};
use crate::families::identities::{catalog, check_identity, printed_variants, IdentityReport};
use crate::families::Order2Family;
use crate::recurrence::{companion_power_term_with, iterate_terms_with, RecurrenceSpec, TermBudget};
use crate::ring::{IntPoint, MultiPoly, VarList};
use crate::spec_doc::{load_spec, preset_spec, FamilyTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Iterate,
    Multinomial,
    Determinant,
    Companion,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Iterate => "iterate",
            Engine::Multinomial => "multinomial",
            Engine::Determinant => "determinant",
            Engine::Companion => "companion",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum FamilyArg {
    #[default]
    Generic,
    Classical,
    Numbers,
    Dickson,
}

impl FamilyArg {
    fn family(self) -> Order2Family {
        match self {
            FamilyArg::Generic => Order2Family::generic(),
            FamilyArg::Classical => Order2Family::classical(),
            FamilyArg::Numbers => Order2Family::numbers(),
            FamilyArg::Dickson => Order2Family::dickson(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "recpoly", version, about = "Recurrent polynomial sequences: engines, tables, identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args, Clone)]
pub struct SpecArgs {
    /// TOML recurrence document.
    #[arg(long, conflicts_with = "preset")]
    pub spec: Option<PathBuf>,
    /// Built-in family: fibonacci2, lucas2, dickson-d, dickson-e, generalized-lucas.
    #[arg(long)]
    pub preset: Option<String>,
    /// Order k for the generalized-lucas preset.
    #[arg(long)]
    pub order: Option<i64>,
}

impl SpecArgs {
    pub fn load(&self) -> Result<RecurrenceSpec> {
        match (&self.spec, &self.preset) {
            (Some(path), None) => load_spec(path),
            (None, Some(name)) => {
                let tag = FamilyTag::from_name(name)
                    .filter(|t| *t != FamilyTag::Custom)
                    .ok_or_else(|| Error::Usage(format!("unknown preset `{name}`")))?;
                preset_spec(tag, self.order)
            }
            _ => Err(Error::Usage("exactly one of --spec or --preset is required".into())),
        }
    }
}

#[derive(Debug, Args, Clone)]
pub struct EngineArgs {
    #[arg(long, value_enum, default_value_t = Engine::Iterate)]
    pub engine: Engine,
    /// Rebuild general initial terms from the leading basis sequence.
    #[arg(long)]
    pub compose: bool,
    /// Maximum number of terms in any intermediate polynomial.
    #[arg(long, value_name = "TERMS")]
    pub budget: Option<usize>,
}

impl EngineArgs {
    fn budget(&self) -> TermBudget {
        self.budget.map(TermBudget::limit).unwrap_or_default()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_n.
    Term {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        n: usize,
        /// Also evaluate at integer values, e.g. `x=1,a=-1`.
        #[arg(long)]
        point: Option<String>,
    },
    /// Print P_0..P_{n-max}.
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        n_max: usize,
    },
    /// Check catalog identities; `all` selects the whole catalog.
    Identity {
        ids: Vec<String>,
        #[arg(long, value_enum, default_value_t = FamilyArg::Generic)]
        family: FamilyArg,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        p_max: u64,
        #[arg(long, default_value_t = 6)]
        m_max: u64,
        /// Also run the printed variants known to be false, expecting failure.
        #[arg(long = "include-paper-typos")]
        include_printed_variants: bool,
    },
    /// Time engines on one term and require that they agree.
    Bench {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Engine::Iterate, Engine::Companion])]
        engines: Vec<Engine>,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
        #[arg(long)]
        compose: bool,
        #[arg(long, value_name = "TERMS")]
        budget: Option<usize>,
    },
    /// Hessenberg determinant of size n built from the coefficients.
    Det {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        /// Cross-check against fraction-free elimination at this point.
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_name = "TERMS")]
        budget: Option<usize>,
    },
    /// Roots of the characteristic polynomial at an integer point.
    Roots {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "")]
        point: String,
    },
}

/// One json-lines record.
#[derive(Debug, Serialize)]
struct Record<'a> {
    kind: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<u64>,
    value_canonical: String,
    engine: &'a str,
    elapsed_ns: u128,
}

impl Record<'_> {
    fn line(&self) -> String {
        serde_json::to_string(self).expect("record serializes") + "\n"
    }
}

/// Parses `var=int,var=int`; every name must belong to `vars`.
pub fn parse_point(text: &str, vars: &VarList) -> Result<IntPoint> {
    let mut point = IntPoint::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("point entry `{part}` is not of the form var=int")))?;
        let name = name.trim();
        if vars.index_of(name).is_none() {
            return Err(Error::Usage(format!("point names unknown variable `{name}`")));
        }
        let value: BigInt =
            value.trim().parse().map_err(|_| Error::Usage(format!("point value `{value}` is not an integer")))?;
        point.insert(name.to_string(), value);
    }
    Ok(point)
}

/// `b_m = P^{(k−1)}_{m+k−1}` by a closed-form engine.
fn leading_term(engine: Engine, spec: &RecurrenceSpec, m: usize, budget: TermBudget) -> Result<MultiPoly> {
    match engine {
        Engine::Multinomial => multinomial_term_with(spec.coeffs(), m as u64, budget),
        Engine::Determinant => hessenberg_det_symbolic_with(spec.coeffs(), m, budget),
        _ => unreachable!("only closed-form engines produce the leading sequence"),
    }
}

/// `P_n` by one engine. The closed-form engines compute the basis sequence
/// `P^{(k−1)}` and need delta initials at `k−1` unless `compose` is set.
pub fn compute_term(spec: &RecurrenceSpec, n: usize, engine: Engine, compose: bool, budget: TermBudget) -> Result<MultiPoly> {
    match engine {
        Engine::Iterate => Ok(iterate_terms_with(spec, n, budget)?.pop().expect("n+1 terms")),
        Engine::Companion => companion_power_term_with(spec, n as u64, budget),
        Engine::Multinomial | Engine::Determinant => {
            let k = spec.order();
            if compose {
                let b = (0..=n).map(|m| leading_term(engine, spec, m, budget)).collect::<Result<Vec<_>>>()?;
                let p = compose_from_leading(spec, &b, n);
                budget.check(&p)?;
                Ok(p)
            } else if spec.has_delta_initials(k - 1) {
                if n < k - 1 {
                    Ok(MultiPoly::zero(spec.vars()))
                } else {
                    leading_term(engine, spec, n - (k - 1), budget)
                }
            } else {
                Err(Error::NeedsDeltaInitials { engine: engine.name().to_string() })
            }
        }
    }
}

pub fn cmd_term(
    spec: &RecurrenceSpec,
    n: usize,
    engine: &EngineArgs,
    point: Option<&str>,
    format: Format,
) -> Result<String> {
    let start = Instant::now();
    let p = compute_term(spec, n, engine.engine, engine.compose, engine.budget())?;
    let elapsed = start.elapsed().as_nanos();
    let value = point.map(|text| parse_point(text, spec.vars()).and_then(|pt| p.eval_int(&pt))).transpose()?;
    Ok(match format {
        Format::Text => {
            let mut out = format!("{p}\n");
            if let Some(v) = value {
                out.push_str(&format!("value: {v}\n"));
            }
            out
        }
        Format::JsonLines => Record {
            kind: "term",
            id: None,
            index: Some(n as u64),
            value_canonical: p.canonical_string(),
            engine: engine.engine.name(),
            elapsed_ns: elapsed,
        }
        .line(),
    })
}

pub fn cmd_table(spec: &RecurrenceSpec, n_max: usize, engine: &EngineArgs, format: Format) -> Result<String> {
    let budget = engine.budget();
    let mut rows: Vec<(MultiPoly, u128)> = Vec::new();
    if engine.engine == Engine::Iterate {
        let start = Instant::now();
        let terms = iterate_terms_with(spec, n_max, budget)?;
        let per = start.elapsed().as_nanos() / (n_max as u128 + 1);
        rows.extend(terms.into_iter().map(|t| (t, per)));
    } else {
        for n in 0..=n_max {
            let start = Instant::now();
            let t = compute_term(spec, n, engine.engine, engine.compose, budget)?;
            rows.push((t, start.elapsed().as_nanos()));
        }
    }
    let mut out = String::new();
    for (n, (p, elapsed)) in rows.into_iter().enumerate() {
        match format {
            Format::Text => out.push_str(&format!("{n}\t{p}\n")),
            Format::JsonLines => out.push_str(
                &Record {
                    kind: "term",
                    id: None,
                    index: Some(n as u64),
                    value_canonical: p.canonical_string(),
                    engine: engine.engine.name(),
                    elapsed_ns: elapsed,
                }
                .line(),
            ),
        }
    }
    Ok(out)
}

/// Outcome of the identity command; `all_ok` decides the exit code.
#[derive(Debug, Clone)]
pub struct IdentityRun {
    pub output: String,
    pub all_ok: bool,
    pub reports: Vec<(IdentityReport, bool)>,
}

/// Runs the requested ids. Printed variants expect failure only when
/// `include_printed_variants` is set; otherwise every id must pass.
pub fn cmd_identity(
    ids: &[String],
    family: &Order2Family,
    n_max: u64,
    p_max: u64,
    m_max: u64,
    include_printed_variants: bool,
    format: Format,
) -> Result<IdentityRun> {
    if ids.is_empty() {
        return Err(Error::Usage("no identity ids given (use `all` for the whole catalog)".into()));
    }
    let mut selected: Vec<String> = Vec::new();
    for id in ids {
        if id == "all" {
            selected.extend(catalog().into_iter().map(String::from));
        } else {
            crate::families::identities::statement(id)?;
            selected.push(id.clone());
        }
    }
    let printed = printed_variants();
    if include_printed_variants {
        selected.extend(printed.iter().map(|s| s.to_string()));
    }
    let mut seen = std::collections::HashSet::new();
    selected.retain(|id| seen.insert(id.clone()));

    let mut out = String::new();
    let mut all_ok = true;
    let mut reports = Vec::new();
    for id in &selected {
        let start = Instant::now();
        let report = check_identity(id, family, n_max, p_max, m_max)?;
        let elapsed = start.elapsed().as_nanos();
        let expect_fail = include_printed_variants && printed.contains(&id.as_str());
        let ok = report.passed() != expect_fail;
        all_ok &= ok;
        let verdict = match (report.passed(), expect_fail) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "EXPECTED-FAIL",
            (true, true) => "UNEXPECTED-PASS",
        };
        match format {
            Format::Text => {
                out.push_str(&format!("{:<24} {:<40} {verdict}\n", report.identity_id, report.index_range));
                if let Some(w) = &report.witness {
                    out.push_str(&format!("    witness {w}\n"));
                }
            }
            Format::JsonLines => {
                let value = match &report.witness {
                    Some(w) => format!("{verdict} {w}"),
                    None => verdict.to_string(),
                };
                let engine = if id == "thm-4.21-12" { "numeric" } else { "symbolic" };
                out.push_str(
                    &Record { kind: "identity", id: Some(id), index: None, value_canonical: value, engine, elapsed_ns: elapsed }
                        .line(),
                );
            }
        }
        reports.push((report, ok));
    }
    Ok(IdentityRun { output: out, all_ok, reports })
}

/// One engine's benchmark row.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub engine: Engine,
    pub median_ns: u128,
    pub terms: usize,
    pub value: MultiPoly,
}

/// Times each engine `repetitions` times. All results must be equal;
/// a mismatch is returned as an error rather than a table entry.
pub fn run_bench(
    spec: &RecurrenceSpec,
    n: usize,
    engines: &[Engine],
    repetitions: usize,
    compose: bool,
    budget: TermBudget,
) -> Result<Vec<BenchRow>> {
    if engines.is_empty() {
        return Err(Error::Usage("no engines selected".into()));
    }
    let reps = repetitions.max(1);
    let mut rows = Vec::new();
    for &engine in engines {
        let mut times = Vec::with_capacity(reps);
        let mut value = None;
        for _ in 0..reps {
            let start = Instant::now();
            let v = compute_term(spec, n, engine, compose, budget)?;
            times.push(start.elapsed().as_nanos());
            value = Some(v);
        }
        times.sort_unstable();
        let value = value.expect("at least one repetition");
        rows.push(BenchRow { engine, median_ns: times[reps / 2], terms: value.num_terms(), value });
    }
    for pair in rows.windows(2) {
        if pair[0].value != pair[1].value {
            return Err(Error::EngineDisagreement {
                n: n as u64,
                left: pair[0].engine.name().to_string(),
                right: pair[1].engine.name().to_string(),
                left_value: pair[0].value.to_string(),
                right_value: pair[1].value.to_string(),
            });
        }
    }
    Ok(rows)
}

pub fn cmd_bench(
    spec: &RecurrenceSpec,
    n: usize,
    engines: &[Engine],
    repetitions: usize,
    compose: bool,
    budget: TermBudget,
    format: Format,
) -> Result<String> {
    let rows = run_bench(spec, n, engines, repetitions, compose, budget)?;
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("n={n} repetitions={}\n", repetitions.max(1)));
            out.push_str(&format!("{:<12} {:>14} {:>8} {:>6}\n", "engine", "median_ns", "terms", "agree"));
            for r in &rows {
                out.push_str(&format!("{:<12} {:>14} {:>8} {:>6}\n", r.engine.name(), r.median_ns, r.terms, true));
            }
            out.push_str(&format!("value: {}\n", rows[0].value));
        }
        Format::JsonLines => {
            for r in &rows {
                out.push_str(
                    &Record {
                        kind: "bench",
                        id: None,
                        index: Some(n as u64),
                        value_canonical: r.value.canonical_string(),
                        engine: r.engine.name(),
                        elapsed_ns: r.median_ns,
                    }
                    .line(),
                );
            }
        }
    }
    Ok(out)
}

pub fn cmd_det(spec: &RecurrenceSpec, n: usize, point: Option<&str>, budget: TermBudget, format: Format) -> Result<String> {
    let start = Instant::now();
    let det = hessenberg_det_symbolic_with(spec.coeffs(), n, budget)?;
    let elapsed = start.elapsed().as_nanos();
    let mut out = match format {
        Format::Text => format!("{det}\n"),
        Format::JsonLines => Record {
            kind: "det",
            id: None,
            index: Some(n as u64),
            value_canonical: det.canonical_string(),
            engine: "determinant",
            elapsed_ns: elapsed,
        }
        .line(),
    };
    if let Some(text) = point {
        let pt = parse_point(text, spec.vars())?;
        let symbolic = det.eval_int(&pt)?;
        let start = Instant::now();
        let oracle = hessenberg_det_numeric_oracle(spec.coeffs(), n, &pt)?;
        let elapsed = start.elapsed().as_nanos();
        if symbolic != oracle {
            return Err(Error::EngineDisagreement {
                n: n as u64,
                left: "determinant".into(),
                right: "bareiss".into(),
                left_value: symbolic.to_string(),
                right_value: oracle.to_string(),
            });
        }
        match format {
            Format::Text => out.push_str(&format!("value: {symbolic}\nbareiss: {oracle}\nagree: true\n")),
            Format::JsonLines => out.push_str(
                &Record {
                    kind: "det-value",
                    id: None,
                    index: Some(n as u64),
                    value_canonical: oracle.to_string(),
                    engine: "bareiss",
                    elapsed_ns: elapsed,
                }
                .line(),
            ),
        }
    }
    Ok(out)
}

pub fn cmd_roots(spec: &RecurrenceSpec, point: &str, format: Format) -> Result<String> {
    let pt = parse_point(point, spec.vars())?;
    let values = spec
        .coeffs()
        .iter()
        .map(|c| {
            let v = c.eval_int(&pt)?;
            v.to_f64()
                .filter(|f| f.is_finite())
                .map(|f| Complex64::new(f, 0.0))
                .ok_or_else(|| Error::Usage(format!("coefficient value {v} does not fit a double")))
        })
        .collect::<Result<Vec<_>>>()?;
    let start = Instant::now();
    let profile = char_roots(&values)?;
    let elapsed = start.elapsed().as_nanos();
    let mut out = String::new();
    for (i, (z, m)) in profile.roots().iter().zip(profile.mults()).enumerate() {
        match format {
            Format::Text => out.push_str(&format!("{}\tmultiplicity {m}\n", format_complex(*z))),
            Format::JsonLines => out.push_str(
                &Record {
                    kind: "root",
                    id: None,
                    index: Some(i as u64),
                    value_canonical: format!("{};multiplicity={m}", format_complex(*z)),
                    engine: "aberth",
                    elapsed_ns: elapsed,
                }
                .line(),
            ),
        }
    }
    Ok(out)
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    let format = cli.format;
    match &cli.command {
        Command::Term { spec, engine, n, point } => {
            Ok((cmd_term(&spec.load()?, *n, engine, point.as_deref(), format)?, 0))
        }
        Command::Table { spec, engine, n_max } => Ok((cmd_table(&spec.load()?, *n_max, engine, format)?, 0)),
        Command::Identity { ids, family, n_max, p_max, m_max, include_printed_variants } => {
            let run = cmd_identity(ids, &family.family(), *n_max, *p_max, *m_max, *include_printed_variants, format)?;
            Ok((run.output, if run.all_ok { 0 } else { 1 }))
        }
        Command::Bench { spec, n, engines, repetitions, compose, budget } => {
            let budget = budget.map(TermBudget::limit).unwrap_or_default();
            Ok((cmd_bench(&spec.load()?, *n, engines, *repetitions, *compose, budget, format)?, 0))
        }
        Command::Det { spec, n, point, budget } => {
            let budget = budget.map(TermBudget::limit).unwrap_or_default();
            Ok((cmd_det(&spec.load()?, *n, point.as_deref(), budget, format)?, 0))
        }
        Command::Roots { spec, point } => Ok((cmd_roots(&spec.load()?, point, format)?, 0)),
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("recpoly").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fibonacci2_third_term_every_engine() {
        for engine in ["iterate", "multinomial", "determinant", "companion"] {
            let (code, out, _) = run_capture(&["term", "--preset", "fibonacci2", "--n", "3", "--engine", engine]);
            assert_eq!(code, 0);
            assert_eq!(out, "x^2 + y\n", "{engine}");
        }
    }

    #[test]
    fn dickson_d5_companion() {
        let (code, out, _) = run_capture(&["term", "--preset", "dickson-d", "--n", "5", "--engine", "companion"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^5 - 5*x^3*a + 5*x*a^2\n");
    }

    #[test]
    fn closed_form_engines_need_delta_initials() {
        let (code, _, err) = run_capture(&["term", "--preset", "dickson-d", "--n", "5", "--engine", "multinomial"]);
        assert_eq!(code, 2);
        assert!(err.contains("--compose"));
        for engine in ["multinomial", "determinant"] {
            let (code, out, _) =
                run_capture(&["term", "--preset", "dickson-d", "--n", "5", "--engine", engine, "--compose"]);
            assert_eq!(code, 0);
            assert_eq!(out, "x^5 - 5*x^3*a + 5*x*a^2\n");
        }
    }

    #[test]
    fn leading_basis_index_shift() {
        let spec = preset_spec(FamilyTag::GeneralizedLucas, Some(3)).unwrap();
        let p = compute_term(&spec, 2, Engine::Multinomial, false, TermBudget::UNLIMITED).unwrap();
        assert!(p.is_one());
        let p = compute_term(&spec, 0, Engine::Multinomial, false, TermBudget::UNLIMITED).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn identity_usage_and_printed_variants() {
        let (code, _, _) = run_capture(&["identity"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_capture(&["identity", "thm-5.7-d2-as-printed", "--n-max", "6"]);
        assert_eq!(code, 1);
        assert!(out.contains("FAIL"));
        assert!(out.contains("at n=2"));
        let (code, _, err) = run_capture(&["identity", "thm-0.0"]);
        assert_eq!(code, 2);
        assert!(err.contains("thm-0.0"));
        let (code, out, _) =
            run_capture(&["identity", "thm-4.15", "--n-max", "8", "--include-paper-typos"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("EXPECTED-FAIL"));
    }

    #[test]
    fn bench_agreement() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fib.toml");
        std::fs::write(&path, "variables = []\norder = 2\ncoefficients = [\"1\", \"1\"]\ninitial = [\"0\", \"1\"]\n")
            .unwrap();
        let (code, out, _) = run_capture(&["bench", "--spec", path.to_str().unwrap(), "--n", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("value: 0"));
    }

    #[test]
    fn budget_exit_code() {
        let (code, _, err) =
            run_capture(&["term", "--preset", "fibonacci2", "--n", "30", "--budget", "3"]);
        assert_eq!(code, 3, "{err}");
    }

    #[test]
    fn json_lines_fields() {
        let (code, out, _) =
            run_capture(&["--format", "json-lines", "table", "--preset", "lucas2", "--n-max", "2"]);
        assert_eq!(code, 0);
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2]["value_canonical"], "x^2 + 2*y");
        assert_eq!(lines[2]["kind"], "term");
        assert_eq!(lines[2]["index"], 2);
        assert_eq!(lines[2]["engine"], "iterate");
        assert!(lines[2]["elapsed_ns"].is_u64());
    }

    #[test]
    fn det_and_roots() {
        let (code, out, _) =
            run_capture(&["det", "--preset", "fibonacci2", "--n", "3", "--point", "x=2,y=3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("x^3 + 2*x*y\n"));
        assert!(out.contains("value: 20"));
        let (code, out, _) = run_capture(&["roots", "--preset", "dickson-d", "--point", "x=2,a=1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\tmultiplicity 2\n");
        let (code, _, _) = run_capture(&["roots", "--preset", "dickson-d", "--point", "x=2"]);
        assert_eq!(code, 2);
    }
}
