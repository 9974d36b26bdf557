//! Exact ordinary least squares of a response against (blocks_A, blocks_M, 1).

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use lwc_model::cost_model::{fmt_rational, int, Rational};

use crate::experiment::{Measured, Sample};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitResult {
    pub slope_a: Rational,
    pub slope_m: Rational,
    pub intercept: Rational,
    pub r_squared: Rational,
    pub residual_max: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FitError {
    #[error("need at least 3 samples, got {0}; widen the grid")]
    TooFewSamples(usize),
    #[error("{0} takes a single value on this grid; widen the grid so it varies")]
    Constant(&'static str),
    #[error("blocks_A and blocks_M are collinear on this grid; widen the grid so they vary independently")]
    Collinear,
}

/// `(x_A, x_M, y)`.
pub type Point = (Rational, Rational, Rational);

fn distinct(v: impl Iterator<Item = Rational>) -> usize {
    let mut xs: Vec<Rational> = v.collect();
    xs.sort();
    xs.dedup();
    xs.len()
}

/// Solves `A x = b` for 3×3 `A` by Gaussian elimination; `None` if singular.
fn solve3(mut a: [[Rational; 3]; 3], mut b: [Rational; 3]) -> Option<[Rational; 3]> {
    for col in 0..3 {
        let pivot = (col..3).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..3 {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                for k in 0..3 {
                    let d = &f * &a[col][k];
                    a[r][k] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    Some([&b[0] / &a[0][0], &b[1] / &a[1][1], &b[2] / &a[2][2]])
}

pub fn fit_points(points: &[Point]) -> Result<FitResult, FitError> {
    if points.len() < 3 {
        return Err(FitError::TooFewSamples(points.len()));
    }
    if distinct(points.iter().map(|p| p.0.clone())) < 2 {
        return Err(FitError::Constant("blocks_A"));
    }
    if distinct(points.iter().map(|p| p.1.clone())) < 2 {
        return Err(FitError::Constant("blocks_M"));
    }
    let mut xtx: [[Rational; 3]; 3] = Default::default();
    let mut xty: [Rational; 3] = Default::default();
    for (xa, xm, y) in points {
        let row = [xa.clone(), xm.clone(), Rational::one()];
        for i in 0..3 {
            for j in 0..3 {
                xtx[i][j] += &row[i] * &row[j];
            }
            xty[i] += &row[i] * y;
        }
    }
    let [slope_a, slope_m, intercept] = solve3(xtx, xty).ok_or(FitError::Collinear)?;

    let n = int(points.len() as u64);
    let mean = points.iter().map(|p| p.2.clone()).sum::<Rational>() / n;
    let (mut ss_res, mut ss_tot, mut residual_max) = (Rational::zero(), Rational::zero(), Rational::zero());
    for (xa, xm, y) in points {
        let r = y - (&slope_a * xa + &slope_m * xm + &intercept);
        ss_res += &r * &r;
        ss_tot += (y - &mean) * (y - &mean);
        residual_max = residual_max.max(r.abs());
    }
    let r_squared = if ss_tot.is_zero() {
        if ss_res.is_zero() { Rational::one() } else { Rational::zero() }
    } else {
        (Rational::one() - ss_res / ss_tot).max(Rational::zero())
    };
    Ok(FitResult { slope_a, slope_m, intercept, r_squared, residual_max })
}

/// Fits total primitive calls (count samples) or seconds (time samples).
pub fn fit_linear(samples: &[Sample]) -> Result<FitResult, FitError> {
    let points: Vec<Point> = samples
        .iter()
        .map(|s| {
            let y = match s.measured {
                Measured::Counts(c) => int(c.total_calls()),
                Measured::Seconds(t) => Rational::from_float(t).unwrap_or_else(Rational::zero),
            };
            (int(s.blocks_a), int(s.blocks_m), y)
        })
        .collect();
    fit_points(&points)
}

/// The fit as reported: floats for reading, exact text alongside.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct FitSummary {
    #[serde(rename = "slope_A")]
    pub slope_a: f64,
    #[serde(rename = "slope_M")]
    pub slope_m: f64,
    pub intercept: f64,
    pub r2: f64,
    pub residual_max: f64,
    pub exact: Option<ExactFit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ExactFit {
    #[serde(rename = "slope_A")]
    pub slope_a: String,
    #[serde(rename = "slope_M")]
    pub slope_m: String,
    pub intercept: String,
    pub residual_max: String,
}

impl FitResult {
    pub fn summary(&self) -> FitSummary {
        let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
        FitSummary {
            slope_a: f(&self.slope_a),
            slope_m: f(&self.slope_m),
            intercept: f(&self.intercept),
            r2: f(&self.r_squared),
            residual_max: f(&self.residual_max),
            exact: Some(ExactFit {
                slope_a: fmt_rational(&self.slope_a),
                slope_m: fmt_rational(&self.slope_m),
                intercept: fmt_rational(&self.intercept),
                residual_max: fmt_rational(&self.residual_max),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(f: impl Fn(u64, u64) -> u64) -> Vec<Point> {
        let mut v = Vec::new();
        for a in [0, 1, 3] {
            for m in [0, 2, 5] {
                v.push((int(a), int(m), int(f(a, m))));
            }
        }
        v
    }

    #[test]
    fn exact_linear_data() {
        let fit = fit_points(&pts(|a, _| 2 * a + 1)).unwrap();
        assert_eq!((fit.slope_a, fit.slope_m, fit.intercept), (int(2), int(0), int(1)));
        assert_eq!(fit.r_squared, int(1));
        assert_eq!(fit.residual_max, int(0));
    }

    #[test]
    fn constant_data() {
        let fit = fit_points(&pts(|_, _| 5)).unwrap();
        assert_eq!((fit.slope_a, fit.slope_m, fit.intercept), (int(0), int(0), int(5)));
        assert_eq!(fit.r_squared, int(1));
    }

    #[test]
    fn nonlinear_data_leaves_residuals() {
        let fit = fit_points(&pts(|a, m| a * a + m)).unwrap();
        assert!(fit.residual_max > int(0));
        assert!(fit.r_squared < int(1) && fit.r_squared > int(0));
    }

    #[test]
    fn degenerate_designs() {
        assert_eq!(fit_points(&pts(|a, _| a)[..2]), Err(FitError::TooFewSamples(2)));
        let same_a: Vec<Point> = (0..4).map(|m| (int(1), int(m), int(m))).collect();
        assert_eq!(fit_points(&same_a), Err(FitError::Constant("blocks_A")));
        let diag: Vec<Point> = (0..4).map(|k| (int(k), int(2 * k), int(k))).collect();
        assert_eq!(fit_points(&diag), Err(FitError::Collinear));
    }
}
