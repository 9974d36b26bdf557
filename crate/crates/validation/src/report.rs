//! Per-algorithm results in the shape of the comparison table: markdown,
//! JSON and CSV.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::check::{Classification, Discrepancy, Location};
use crate::fit::FitSummary;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmReport {
    pub algorithm: String,
    pub variant: String,
    pub expression: String,
    pub fit: Option<FitSummary>,
    pub count_exact: bool,
    pub kat_pass: bool,
    /// `official`, `cross_implementation` or `none`.
    pub kat_source: String,
    pub kat_detail: String,
    pub validated: bool,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default)]
    pub time_fit: Option<FitSummary>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub rows: Vec<AlgorithmReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("no experiments")]
    NoExperiments,
    #[error("invalid report JSON: {0}")]
    Json(String),
    #[error("CSV output: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "md" | "markdown" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format `{s}` (expected md, json or csv)")),
        }
    }
}

pub fn build_report(rows: Vec<AlgorithmReport>) -> Result<Report, ReportError> {
    if rows.is_empty() {
        return Err(ReportError::NoExperiments);
    }
    Ok(Report { rows })
}

fn class_name(c: Classification) -> &'static str {
    match c {
        Classification::CountMismatch => "count_mismatch",
        Classification::CoefficientMismatch => "coefficient_mismatch",
        Classification::PaperInternalInconsistency => "paper_internal_inconsistency",
    }
}

fn location_text(l: &Location) -> String {
    match l {
        Location::GridPoint { len_a, len_m } => format!("(|A|, |M|) = ({len_a}, {len_m})"),
        Location::Coefficient { name } => name.clone(),
    }
}

/// Table cells cannot hold a bare `|`.
fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn fit_cells(f: &Option<FitSummary>) -> [String; 4] {
    match f {
        Some(f) => match &f.exact {
            Some(e) => [e.slope_a.clone(), e.slope_m.clone(), e.intercept.clone(), format!("{:.4}", f.r2)],
            None => [f.slope_a, f.slope_m, f.intercept, f.r2].map(|x| format!("{x:.4}")),
        },
        None => Default::default(),
    }
}

impl Report {
    pub fn all_validated(&self) -> bool {
        self.rows.iter().all(|r| r.validated)
    }

    pub fn render(&self, format: Format) -> Result<String, ReportError> {
        match format {
            Format::Markdown => Ok(self.to_markdown()),
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Report, ReportError> {
        serde_json::from_str(text).map_err(|e| ReportError::Json(e.to_string()))
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("| Algorithm | Variant | Expression | slope_A | slope_M | intercept | R² | counts exact | KAT | validated | discrepancies |\n");
        s.push_str("|---|---|---|---|---|---|---|---|---|---|---|\n");
        let yn = |b: bool| if b { "yes" } else { "no" };
        for r in &self.rows {
            let [sa, sm, ic, r2] = fit_cells(&r.fit);
            let _ = writeln!(
                s,
                "| {} | {} | {} | {sa} | {sm} | {ic} | {r2} | {} | {} ({}) | {} | {} |",
                r.algorithm,
                r.variant,
                cell(&r.expression),
                yn(r.count_exact),
                yn(r.kat_pass),
                r.kat_detail,
                yn(r.validated),
                r.discrepancies.len()
            );
        }
        if self.rows.iter().any(|r| !r.discrepancies.is_empty()) {
            s.push_str("\n## Discrepancies\n\n| Algorithm | Where | Expected | Observed | Classification |\n|---|---|---|---|---|\n");
            for d in self.rows.iter().flat_map(|r| &r.discrepancies) {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} |",
                    d.variant,
                    cell(&location_text(&d.location)),
                    cell(&d.expected),
                    cell(&d.observed),
                    class_name(d.classification)
                );
            }
        }
        let warnings: Vec<_> = self.rows.iter().flat_map(|r| r.warnings.iter().map(move |w| (&r.variant, w))).collect();
        if !warnings.is_empty() {
            s.push_str("\n## Warnings\n\n");
            for (v, w) in warnings {
                let _ = writeln!(s, "- {v}: {w}");
            }
        }
        s
    }

    pub fn to_csv(&self) -> Result<String, ReportError> {
        let err = |e: csv::Error| ReportError::Csv(e.to_string());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "algorithm", "variant", "expression", "slope_A", "slope_M", "intercept", "r2", "count_exact", "kat_pass",
            "kat_source", "validated", "discrepancies", "warnings",
        ])
        .map_err(err)?;
        for r in &self.rows {
            let [sa, sm, ic, r2] = fit_cells(&r.fit);
            let disc = r
                .discrepancies
                .iter()
                .map(|d| {
                    format!(
                        "{}: {}: expected {}, observed {}",
                        class_name(d.classification),
                        location_text(&d.location),
                        d.expected,
                        d.observed
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            w.write_record([
                r.algorithm.as_str(),
                &r.variant,
                &r.expression,
                &sa,
                &sm,
                &ic,
                &r2,
                &r.count_exact.to_string(),
                &r.kat_pass.to_string(),
                &r.kat_source,
                &r.validated.to_string(),
                &disc,
                &r.warnings.join("; "),
            ])
            .map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| ReportError::Csv(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
    }
}
