//! Count and wall-clock experiments over (|A|, |M|) grids.

use std::time::{Duration, Instant};

use serde::Serialize;

use lwc_ciphers::{params, seal, AeadError, OpCounters, Variant};
use lwc_model::schedule::{block_count, plan, schedule_params, PhasePlan, PlanDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Counts,
    Time,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub variant: Variant,
    pub grid_a: Vec<u64>,
    pub grid_m: Vec<u64>,
    pub repetitions: usize,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExperimentError {
    #[error("{0} grid is empty")]
    EmptyGrid(&'static str),
    #[error("time mode needs at least {MIN_REPETITIONS} repetitions, got {0}")]
    TooFewRepetitions(usize),
    #[error("expected {expected:?} mode, config is {got:?}")]
    WrongMode { expected: Mode, got: Mode },
    #[error(transparent)]
    Cipher(#[from] AeadError),
}

pub const MIN_REPETITIONS: usize = 30;

/// Grid spacing: the schedule's block rates, except Grain, whose schedule
/// counts bytes; its grid steps in 32-bit keystream words.
pub fn grid_rates(v: Variant) -> (u64, u64) {
    if v == Variant::Grain128AeadV2 {
        return (4, 4);
    }
    let sp = schedule_params(v);
    (sp.rate_ad, sp.rate_msg)
}

/// `{0, 1, r−1, r, r+1, 2r, 2r+1, 8r, 64r}`, deduplicated.
pub fn default_grid(r: u64) -> Vec<u64> {
    let mut g = vec![0, 1, r - 1, r, r + 1, 2 * r, 2 * r + 1, 8 * r, 64 * r];
    g.sort_unstable();
    g.dedup();
    g
}

/// Whole blocks only: `{r, 2r, 4r, 8r, 64r}`.
pub fn aligned_grid(r: u64) -> Vec<u64> {
    [1, 2, 4, 8, 64].iter().map(|k| k * r).collect()
}

impl ExperimentConfig {
    pub fn counts(variant: Variant, grid_a: Vec<u64>, grid_m: Vec<u64>) -> Self {
        ExperimentConfig { variant, grid_a, grid_m, repetitions: 1, mode: Mode::Counts }
    }

    pub fn default_counts(variant: Variant) -> Self {
        let (ra, rm) = grid_rates(variant);
        Self::counts(variant, default_grid(ra), default_grid(rm))
    }

    pub fn aligned_counts(variant: Variant) -> Self {
        let (ra, rm) = grid_rates(variant);
        Self::counts(variant, aligned_grid(ra), aligned_grid(rm))
    }

    /// Messages up to 64 KiB, with two AD lengths so both predictors vary.
    pub fn default_time(variant: Variant) -> Self {
        ExperimentConfig {
            variant,
            grid_a: vec![0, 1024],
            grid_m: vec![0, 1024, 4096, 16384, 32768, 65536],
            repetitions: MIN_REPETITIONS,
            mode: Mode::Time,
        }
    }

    fn check(&self, mode: Mode) -> Result<(), ExperimentError> {
        if self.mode != mode {
            return Err(ExperimentError::WrongMode { expected: mode, got: self.mode });
        }
        if self.grid_a.is_empty() {
            return Err(ExperimentError::EmptyGrid("AD"));
        }
        if self.grid_m.is_empty() {
            return Err(ExperimentError::EmptyGrid("message"));
        }
        if mode == Mode::Time && self.repetitions < MIN_REPETITIONS {
            return Err(ExperimentError::TooFewRepetitions(self.repetitions));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measured {
    Counts(OpCounters),
    Seconds(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    #[serde(rename = "len_A")]
    pub len_a: u64,
    #[serde(rename = "len_M")]
    pub len_m: u64,
    #[serde(rename = "blocks_A")]
    pub blocks_a: u64,
    #[serde(rename = "blocks_M")]
    pub blocks_m: u64,
    pub measured: Measured,
    #[serde(serialize_with = "plan_doc")]
    pub predicted: PhasePlan,
}

fn plan_doc<S: serde::Serializer>(p: &PhasePlan, s: S) -> Result<S::Ok, S::Error> {
    let doc: PlanDoc = p.to_doc();
    doc.serialize(s)
}

impl Sample {
    pub fn counters(&self) -> Option<&OpCounters> {
        match &self.measured {
            Measured::Counts(c) => Some(c),
            Measured::Seconds(_) => None,
        }
    }
}

/// Deterministic inputs: fixed key and nonce, AD and PT bytes `i mod 251`.
fn inputs(v: Variant, len_a: u64, len_m: u64) -> [Vec<u8>; 4] {
    let ap = params(v);
    let bytes = |n: usize, salt: u8| (0..n).map(|i| (i % 251) as u8 ^ salt).collect::<Vec<u8>>();
    [bytes(ap.key_len, 0x11), bytes(ap.nonce_len, 0x22), bytes(len_a as usize, 0), bytes(len_m as usize, 0x5a)]
}

fn sample(v: Variant, len_a: u64, len_m: u64, measured: Measured) -> Sample {
    let (ra, rm) = grid_rates(v);
    Sample {
        len_a,
        len_m,
        blocks_a: block_count(len_a, ra),
        blocks_m: block_count(len_m, rm),
        measured,
        predicted: plan(v, len_a, len_m),
    }
}

/// One seal per grid point; AD lengths outer, message lengths inner.
pub fn run_count_experiment(cfg: &ExperimentConfig) -> Result<Vec<Sample>, ExperimentError> {
    cfg.check(Mode::Counts)?;
    let mut out = Vec::with_capacity(cfg.grid_a.len() * cfg.grid_m.len());
    for &a in &cfg.grid_a {
        for &m in &cfg.grid_m {
            let [key, nonce, ad, pt] = inputs(cfg.variant, a, m);
            let counters = seal(cfg.variant, &key, &nonce, &ad, &pt)?.counters;
            out.push(sample(cfg.variant, a, m, Measured::Counts(counters)));
        }
    }
    Ok(out)
}

/// Batches shorter than this are repeated until they are not.
const MIN_BATCH: Duration = Duration::from_micros(200);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeRun {
    pub samples: Vec<Sample>,
    pub warnings: Vec<String>,
}

/// Median-of-repetitions seconds per seal at each grid point.
pub fn run_time_experiment(cfg: &ExperimentConfig) -> Result<TimeRun, ExperimentError> {
    cfg.check(Mode::Time)?;
    let v = cfg.variant;
    let mut samples = Vec::new();
    let mut warnings = Vec::new();
    for &a in &cfg.grid_a {
        for &m in &cfg.grid_m {
            let [key, nonce, ad, pt] = inputs(v, a, m);
            let start = Instant::now();
            seal(v, &key, &nonce, &ad, &pt)?;
            let once = start.elapsed();
            if once.is_zero() {
                warnings.push(format!("({a}, {m}): a single seal is below timer resolution; timing batches"));
            }
            let batch = (MIN_BATCH.as_nanos() / once.as_nanos().max(1)).clamp(1, 100_000) as u32;
            let mut reps: Vec<f64> = (0..cfg.repetitions)
                .map(|_| {
                    let t = Instant::now();
                    for _ in 0..batch {
                        std::hint::black_box(seal(v, &key, &nonce, &ad, &pt).expect("sealed once already"));
                    }
                    t.elapsed().as_secs_f64() / batch as f64
                })
                .collect();
            reps.sort_by(f64::total_cmp);
            samples.push(sample(v, a, m, Measured::Seconds(reps[reps.len() / 2])));
        }
    }
    Ok(TimeRun { samples, warnings })
}
