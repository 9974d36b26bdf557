//! Comparisons that produce discrepancy entries: measured counts against the
//! schedule, and fitted coefficients against the closed-form rows.

use serde::{Deserialize, Serialize};

use lwc_ciphers::{Family, Phase, Primitive, Variant};
use lwc_model::cost_model::{eval_row, fmt_rational, int, CostParams, Rational};
use lwc_model::schedule::plan;

use crate::experiment::{grid_rates, Sample};
use crate::fit::FitResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    CountMismatch,
    CoefficientMismatch,
    PaperInternalInconsistency,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    GridPoint {
        #[serde(rename = "len_A")]
        len_a: u64,
        #[serde(rename = "len_M")]
        len_m: u64,
    },
    Coefficient { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub algorithm: String,
    pub variant: String,
    pub location: Location,
    pub expected: String,
    pub observed: String,
    pub classification: Classification,
}

fn coefficient(v: Variant, name: &str, expected: String, observed: String, class: Classification) -> Discrepancy {
    Discrepancy {
        algorithm: v.family().display_name().to_string(),
        variant: v.name().to_string(),
        location: Location::Coefficient { name: name.to_string() },
        expected,
        observed,
        classification: class,
    }
}

/// One entry per grid point whose measured counters differ from the plan.
pub fn count_check(v: Variant, samples: &[Sample]) -> Vec<Discrepancy> {
    samples
        .iter()
        .filter_map(|s| {
            let measured = s.counters()?.calls;
            let diff = s.predicted.counts.diff(&measured);
            if diff.is_empty() {
                return None;
            }
            let cells = |pick: fn(&(Phase, Primitive, u64, u64)) -> u64| {
                diff.iter().map(|d| format!("{}/{}={}", d.0, d.1, pick(d))).collect::<Vec<_>>().join(", ")
            };
            Some(Discrepancy {
                algorithm: v.family().display_name().to_string(),
                variant: v.name().to_string(),
                location: Location::GridPoint { len_a: s.len_a, len_m: s.len_m },
                expected: cells(|d| d.2),
                observed: cells(|d| d.3),
                classification: Classification::CountMismatch,
            })
        })
        .collect()
}

/// Per-block slopes and intercept the closed-form row implies at unit costs,
/// read off by evaluating it at whole-block lengths.
pub fn expected_coefficients(v: Variant) -> (Rational, Rational, Rational) {
    let cp = CostParams::unit(v);
    let (ra, rm) = grid_rates(v);
    let at = |a: u64, m: u64| eval_row(v, a, m, &cp).expect("registry rows bind every symbol");
    let base = at(ra, rm);
    let slope_a = at(2 * ra, rm) - &base;
    let slope_m = at(ra, 2 * rm) - &base;
    let intercept = &base - &slope_a - &slope_m;
    (slope_a, slope_m, intercept)
}

/// Entries for every fitted coefficient that disagrees with the row.
///
/// Slopes are always compared. Intercepts are compared only for rows that
/// write a fixed term; elsewhere the O(·) form says nothing about constants.
pub fn coefficient_check(fit: &FitResult, v: Variant) -> Vec<Discrepancy> {
    use Classification::*;
    let mut out = Vec::new();
    let (ea, em, e0) = expected_coefficients(v);
    let s = fmt_rational;
    if fit.residual_max != int(0) {
        out.push(coefficient(v, "residual_max", "0".into(), s(&fit.residual_max), CoefficientMismatch));
    }
    for (name, fitted) in [("slope_A", &fit.slope_a), ("slope_M", &fit.slope_m)] {
        if !fitted.is_integer() {
            out.push(coefficient(v, &format!("{name} (integrality)"), "an integer".into(), s(fitted), CoefficientMismatch));
        }
    }
    if fit.slope_a != ea {
        out.push(coefficient(v, "slope_A", s(&ea), s(&fit.slope_a), CoefficientMismatch));
    }
    if fit.slope_m != em {
        out.push(coefficient(v, "slope_M", s(&em), s(&fit.slope_m), CoefficientMismatch));
    }
    if e0 != int(0) && fit.intercept != e0 {
        out.push(coefficient(v, "intercept", s(&e0), s(&fit.intercept), CoefficientMismatch));
    }
    match v.family() {
        Family::Sparkle => {
            let want = Rational::new(3.into(), 2.into());
            let got = if fit.slope_a == int(0) { None } else { Some(&fit.slope_m / &fit.slope_a) };
            if got.as_ref() != Some(&want) {
                let observed = got.map_or("undefined (slope_A = 0)".into(), |r| s(&r));
                out.push(coefficient(v, "slope_M/slope_A", s(&want), observed, CoefficientMismatch));
            }
        }
        Family::TinyJambu => {
            // The table's fixed 6·b_640 against the text's 3·b_640 initialization.
            let p = plan(v, 0, 0);
            let init640 = p.counts.get(Phase::Init, Primitive::TinyJambuP640);
            let init1024 = p.counts.get(Phase::Init, Primitive::TinyJambuP1024);
            out.push(coefficient(
                v,
                "init b_640 term",
                "6·b_640 (table row) vs 3·b_640 (initialization text)".into(),
                format!("{init640} P_640 + {init1024} P_1024 calls in init"),
                PaperInternalInconsistency,
            ));
        }
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fit(a: i64, m: i64, c: i64) -> FitResult {
        let r = |v: i64| Rational::from_integer(v.into());
        FitResult { slope_a: r(a), slope_m: r(m), intercept: r(c), r_squared: r(1), residual_max: r(0) }
    }

    #[test]
    fn matching_slopes_give_no_entries() {
        assert_eq!(expected_coefficients(Variant::PhotonBeetleAead128), (int(1), int(1), int(0)));
        assert!(coefficient_check(&fit(1, 1, 1), Variant::PhotonBeetleAead128).is_empty());
    }

    #[test]
    fn tinyjambu_fixed_terms() {
        assert_eq!(expected_coefficients(Variant::TinyJambu128), (int(2), int(2), int(10)));
        let entries = coefficient_check(&fit(2, 2, 10), Variant::TinyJambu128);
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].classification, Classification::PaperInternalInconsistency);
        let entries = coefficient_check(&fit(2, 2, 6), Variant::TinyJambu128);
        assert!(entries.iter().any(|e| e.location == Location::Coefficient { name: "intercept".into() }));
    }

    #[test]
    fn sparkle_ratio_is_recorded() {
        assert_eq!(expected_coefficients(Variant::Schwaemm256_128), (int(2), int(3), int(3)));
        let entries = coefficient_check(&fit(2, 3, 3), Variant::Schwaemm256_128);
        assert!(entries.is_empty());
        let entries = coefficient_check(&fit(1, 1, 1), Variant::Schwaemm256_128);
        let ratio = entries.iter().find(|e| matches!(&e.location, Location::Coefficient { name } if name == "slope_M/slope_A"));
        assert_eq!(ratio.unwrap().observed, "1");
    }
}
