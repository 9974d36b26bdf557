//! Experiments that check the closed-form cost rows against instrumented
//! ciphers: exact call counts, least-squares fits, coefficient comparisons,
//! KAT verdicts, and wall-clock corroboration.

pub mod check;
pub mod experiment;
pub mod fit;
pub mod report;

use lwc_ciphers::{kat, Variant};
use lwc_model::cost_model::{expr_for, int};

pub use check::{coefficient_check, count_check, Classification, Discrepancy, Location};
pub use experiment::{
    aligned_grid, default_grid, grid_rates, run_count_experiment, run_time_experiment, ExperimentConfig,
    ExperimentError, Measured, Mode, Sample, MIN_REPETITIONS,
};
pub use fit::{fit_linear, fit_points, FitError, FitResult, FitSummary};
pub use report::{build_report, AlgorithmReport, Format, Report, ReportError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error(transparent)]
    Experiment(#[from] ExperimentError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Report(#[from] ReportError),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct KatVerdict {
    pub pass: bool,
    pub source: &'static str,
    pub detail: String,
}

/// Runs the bundled known-answer file, if there is one.
pub fn kat_verdict(v: Variant) -> KatVerdict {
    let Some(fx) = kat::fixture(v) else {
        return KatVerdict { pass: false, source: "none", detail: "no fixture".into() };
    };
    let source = match fx.source {
        kat::KatSource::Official => "official",
        kat::KatSource::CrossImplementation => "cross_implementation",
    };
    match kat::parse(fx.text) {
        Ok(records) => {
            let s = kat::run(v, &records);
            KatVerdict { pass: s.all_passed(), source, detail: format!("{}/{} passed", s.passed, s.total) }
        }
        Err(e) => KatVerdict { pass: false, source, detail: format!("fixture unreadable: {e}") },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Options {
    pub time: bool,
}

/// Count exactness on the default grid, fit and coefficient checks on the
/// rate-aligned grid, KAT verdict, and optionally a timing fit.
pub fn validate(v: Variant, opts: Options) -> Result<AlgorithmReport, ValidationError> {
    let grid = run_count_experiment(&ExperimentConfig::default_counts(v))?;
    let mut discrepancies = count_check(v, &grid);
    let count_exact = discrepancies.is_empty();

    let aligned = run_count_experiment(&ExperimentConfig::aligned_counts(v))?;
    discrepancies.extend(count_check(v, &aligned));
    let fit = fit_linear(&aligned)?;
    discrepancies.extend(coefficient_check(&fit, v));

    let (time_fit, warnings) = if opts.time {
        let (f, w) = time_check(v)?;
        (Some(f), w)
    } else {
        (None, Vec::new())
    };

    let kat = kat_verdict(v);
    Ok(AlgorithmReport {
        algorithm: v.family().display_name().to_string(),
        variant: v.name().to_string(),
        expression: expr_for(v.family()).render(),
        fit: Some(fit.summary()),
        count_exact,
        kat_pass: kat.pass,
        kat_source: kat.source.to_string(),
        kat_detail: kat.detail,
        validated: count_exact && kat.pass,
        discrepancies,
        time_fit,
        warnings,
    })
}

/// Timing fit on the default time grid. A low R² is a warning, never an error.
pub fn time_check(v: Variant) -> Result<(FitSummary, Vec<String>), ValidationError> {
    let run = run_time_experiment(&ExperimentConfig::default_time(v))?;
    let mut warnings = run.warnings;
    let tf = fit_linear(&run.samples)?;
    if tf.r_squared < int(95) / int(100) {
        warnings.push(format!("time fit R² = {:.4} is below 0.95", tf.summary().r2));
    }
    Ok((tf.summary(), warnings))
}

/// Count validation runs one thread per variant; timing stays serial.
pub fn validate_all(variants: &[Variant], opts: Options) -> Result<Report, ValidationError> {
    let counted: Vec<Result<AlgorithmReport, ValidationError>> = std::thread::scope(|s| {
        let handles: Vec<_> = variants
            .iter()
            .map(|&v| s.spawn(move || validate(v, Options { time: false })))
            .collect();
        handles.into_iter().map(|h| h.join().expect("validation thread panicked")).collect()
    });
    let mut rows = counted.into_iter().collect::<Result<Vec<_>, _>>()?;
    if opts.time {
        for (row, &v) in rows.iter_mut().zip(variants) {
            let (f, w) = time_check(v)?;
            row.time_fit = Some(f);
            row.warnings = w;
        }
    }
    Ok(build_report(rows)?)
}
