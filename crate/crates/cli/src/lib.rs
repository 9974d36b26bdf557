//! `lwc` command-line front end.
//!
//! Exit status: 0 success, 1 a check failed (KAT record, count mismatch),
//! 2 usage error (bad flag, unknown algorithm, bad grid), 3 file I/O error,
//! 4 malformed input file.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lwc_ciphers::{kat, Family, Variant};
use lwc_model::cost_model::{expr_for, registry_json};
use lwc_model::schedule::plan;
use lwc_validation::{
    aligned_grid, default_grid, fit_linear, grid_rates, run_count_experiment, run_time_experiment, validate,
    validate_all, ExperimentConfig, Format, Mode, Options, MIN_REPETITIONS,
};

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "lwc", about = "NIST LWC finalist cost model, schedules, KATs and validation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Md,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The ten algorithms and their variants.
    List,
    /// The closed-form cost expression of an algorithm.
    Expr {
        /// Algorithm or variant name; omit with --all.
        alg: Option<String>,
        /// Every row as a JSON registry document.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Predicted per-phase primitive calls.
    Plan {
        alg: String,
        #[arg(long = "ad")]
        ad: u64,
        #[arg(long = "msg")]
        msg: u64,
    },
    /// Runs a NIST LWC known-answer file.
    Kat {
        alg: String,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Count (default) or timing experiment over a grid.
    Bench {
        alg: String,
        /// Grid for both dimensions: comma-separated byte lengths, `default` or `aligned`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long = "grid-ad")]
        grid_ad: Option<String>,
        #[arg(long = "grid-msg")]
        grid_msg: Option<String>,
        #[arg(long)]
        time: bool,
        #[arg(long, default_value_t = MIN_REPETITIONS)]
        reps: usize,
    },
    /// Validates one algorithm or all ten.
    Validate {
        alg: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        time: bool,
    },
    /// Validates all ten and writes the report.
    Report {
        #[arg(long, value_enum)]
        format: ReportFormat,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        time: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: msg.into() + "\n" }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridError(pub String);

impl std::fmt::Display for GridError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Largest accepted grid length; each point allocates its inputs.
pub const MAX_GRID_LEN: u64 = 16 << 20;

/// `0,1,8`, `default` or `aligned` (relative to `rate`).
pub fn parse_grid(text: &str, rate: u64) -> Result<Vec<u64>, GridError> {
    match text.trim() {
        "default" => return Ok(default_grid(rate)),
        "aligned" => return Ok(aligned_grid(rate)),
        _ => {}
    }
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        let v: u64 = item
            .parse()
            .map_err(|_| GridError(format!("grid entry `{item}` is not a non-negative integer")))?;
        if v > MAX_GRID_LEN {
            return Err(GridError(format!("grid entry {v} exceeds the {MAX_GRID_LEN}-byte limit")));
        }
        out.push(v);
    }
    Ok(out)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn variant(name: &str) -> Result<Variant, Outcome> {
    name.parse::<Variant>().map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))
}

#[derive(Serialize)]
struct ListEntry {
    algorithm: &'static str,
    slug: &'static str,
    variants: Vec<ListVariant>,
}

#[derive(Serialize)]
struct ListVariant {
    name: &'static str,
    slug: &'static str,
    primary: bool,
}

fn list() -> Outcome {
    let entries: Vec<ListEntry> = Family::ALL
        .iter()
        .map(|f| ListEntry {
            algorithm: f.display_name(),
            slug: f.slug(),
            variants: f
                .variants()
                .map(|v| ListVariant { name: v.name(), slug: v.slug(), primary: v.is_primary() })
                .collect(),
        })
        .collect();
    Outcome::ok(json(&entries))
}

fn expr(alg: Option<String>, all: bool, format: OutFormat) -> Outcome {
    if all {
        let doc = registry_json();
        return Outcome::ok(match format {
            OutFormat::Json => json(&doc),
            OutFormat::Text => doc.iter().map(|e| format!("{}\t{}\n", e.algorithm, e.expression_text)).collect(),
        });
    }
    let Some(alg) = alg else {
        return Outcome::fail(EXIT_USAGE, "error: name an algorithm or pass --all");
    };
    let v = match variant(&alg) {
        Ok(v) => v,
        Err(o) => return o,
    };
    match format {
        OutFormat::Text => Outcome::ok(expr_for(v.family()).render() + "\n"),
        OutFormat::Json => {
            let entry = registry_json().into_iter().find(|e| e.algorithm == v.family().display_name());
            Outcome::ok(json(&entry.expect("every family has a row")))
        }
    }
}

fn run_kat(alg: &str, file: &Path, format: OutFormat) -> Outcome {
    let v = match variant(alg) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_IO, format!("error: cannot read KAT file {}: {e}", file.display())),
    };
    let records = match kat::parse(&text) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_PARSE, format!("error: KAT file {}: {e}", file.display())),
    };
    let summary = kat::run(v, &records);
    let code = if summary.all_passed() { 0 } else { EXIT_CHECK_FAILED };
    let stdout = match format {
        OutFormat::Json => json(&summary),
        OutFormat::Text => {
            let mut s = format!("{}/{} passed\n", summary.passed, summary.total);
            for f in summary.failures.iter().take(10) {
                s += &format!("Count = {}: {}\n", f.count, f.reason);
            }
            s
        }
    };
    Outcome { code, stdout, stderr: String::new() }
}

#[derive(Serialize)]
struct BenchOut<'a> {
    algorithm: &'static str,
    mode: Mode,
    samples: &'a [lwc_validation::Sample],
    fit: Option<lwc_validation::FitSummary>,
    fit_error: Option<String>,
    warnings: Vec<String>,
}

fn bench(
    alg: &str,
    grid: Option<String>,
    grid_ad: Option<String>,
    grid_msg: Option<String>,
    time: bool,
    reps: usize,
) -> Outcome {
    let v = match variant(alg) {
        Ok(v) => v,
        Err(o) => return o,
    };
    let (ra, rm) = grid_rates(v);
    let pick = |specific: Option<String>, rate: u64| -> Result<Vec<u64>, GridError> {
        match specific.or_else(|| grid.clone()) {
            Some(t) => parse_grid(&t, rate),
            None => Ok(default_grid(rate)),
        }
    };
    let (ga, gm) = match (pick(grid_ad, ra), pick(grid_msg, rm)) {
        (Ok(a), Ok(m)) => (a, m),
        (Err(e), _) | (_, Err(e)) => return Outcome::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let mut cfg = ExperimentConfig::counts(v, ga, gm);
    let (samples, warnings) = if time {
        cfg.mode = Mode::Time;
        cfg.repetitions = reps;
        match run_time_experiment(&cfg) {
            Ok(r) => (r.samples, r.warnings),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}")),
        }
    } else {
        match run_count_experiment(&cfg) {
            Ok(s) => (s, Vec::new()),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("error: {e}")),
        }
    };
    let (fit, fit_error) = match fit_linear(&samples) {
        Ok(f) => (Some(f.summary()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mismatches = lwc_validation::count_check(v, &samples);
    let out = BenchOut { algorithm: v.name(), mode: cfg.mode, samples: &samples, fit, fit_error, warnings };
    let code = if mismatches.is_empty() { 0 } else { EXIT_CHECK_FAILED };
    Outcome { code, stdout: json(&out), stderr: String::new() }
}

fn failed_checks(report: &lwc_validation::Report) -> bool {
    report.rows.iter().any(|r| !r.count_exact || (r.kat_source != "none" && !r.kat_pass))
}

fn primaries() -> Vec<Variant> {
    Family::ALL.iter().map(|f| f.primary()).collect()
}

fn run_validate(alg: Option<String>, all: bool, time: bool) -> Outcome {
    let opts = Options { time };
    let result = match (alg, all) {
        (Some(_), true) => return Outcome::fail(EXIT_USAGE, "error: give an algorithm or --all, not both"),
        (None, false) => return Outcome::fail(EXIT_USAGE, "error: name an algorithm or pass --all"),
        (None, true) => validate_all(&primaries(), opts),
        (Some(a), false) => match variant(&a) {
            Ok(v) => validate(v, opts).map(|r| lwc_validation::Report { rows: vec![r] }),
            Err(o) => return o,
        },
    };
    match result {
        Ok(report) => {
            let code = if failed_checks(&report) { EXIT_CHECK_FAILED } else { 0 };
            Outcome { code, stdout: report.to_json(), stderr: String::new() }
        }
        Err(e) => Outcome::fail(EXIT_CHECK_FAILED, format!("error: {e}")),
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn report(format: ReportFormat, out: &Path, time: bool) -> Outcome {
    let report = match validate_all(&primaries(), Options { time }) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_CHECK_FAILED, format!("error: {e}")),
    };
    let format = match format {
        ReportFormat::Md => Format::Markdown,
        ReportFormat::Json => Format::Json,
        ReportFormat::Csv => Format::Csv,
    };
    let text = match report.render(format) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_IO, format!("error: {e}")),
    };
    if let Err(e) = write_atomic(out, &text) {
        return Outcome::fail(EXIT_IO, format!("error: cannot write report {}: {e}", out.display()));
    }
    let code = if failed_checks(&report) { EXIT_CHECK_FAILED } else { 0 };
    let validated = report.rows.iter().filter(|r| r.validated).count();
    let summary = serde_json::json!({
        "out": out.display().to_string(),
        "algorithms": report.rows.len(),
        "validated": validated,
    });
    Outcome { code, stdout: json(&summary), stderr: String::new() }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::fail(code, text.trim_end()) };
        }
    };
    match cli.command {
        Command::List => list(),
        Command::Expr { alg, all, format } => expr(alg, all, format),
        Command::Plan { alg, ad, msg } => match variant(&alg) {
            Ok(v) => Outcome::ok(plan(v, ad, msg).to_json() + "\n"),
            Err(o) => o,
        },
        Command::Kat { alg, file, format } => run_kat(&alg, &file, format),
        Command::Bench { alg, grid, grid_ad, grid_msg, time, reps } => bench(&alg, grid, grid_ad, grid_msg, time, reps),
        Command::Validate { alg, all, time } => run_validate(alg, all, time),
        Command::Report { format, out, time } => report(format, &out, time),
    }
}
