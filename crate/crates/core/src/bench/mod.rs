//! Desk-scale benchmark harness for the two experiments: fixed-workload
//! matrix multiplication and variable-workload batched LU decomposition.
//!
//! For each worker count `N` the harness runs the workload `repetitions`
//! times and keeps the fastest run (scheduler noise only ever adds time).
//! The fixed-workload experiment compares every `N` against the single
//! `N = 1` baseline. The variable-workload experiment sizes the matrix as
//! `z = z₁·N` and measures each size both with one worker and with `N`
//! workers, mirroring how scaled speedup is defined.
//!
//! At `N = 1` the generation/initialization phase and the compute phase
//! are timed separately; their ratio estimates the sequential fraction
//! used for the theoretical overlay columns. Workload data is a pure
//! function of the seed, so reruns and different worker counts see
//! byte-identical inputs. All times are wall-clock milliseconds from a
//! monotonic clock.

pub mod lu;
pub mod matmul;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::estimate::estimate_s;
use crate::exec::Workers;
use crate::oracle;

pub use lu::{multiply_square, LuBatch};

/// Generate the two input matrices of the fixed-workload experiment.
pub fn matmul_inputs(p: &MatmulParams, range: (i64, i64), seed: u64) -> (Vec<i64>, Vec<i64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = matmul::generate(p.rows_a, p.inner_dim, range, &mut rng);
    let b = matmul::generate(p.inner_dim, p.cols_b, range, &mut rng);
    (a, b)
}

/// The row-partitioned multiplication kernel, one contiguous row chunk per
/// worker.
pub fn matmul_multiply(a: &[i64], b: &[i64], p: &MatmulParams, workers: &Workers) -> Vec<i64> {
    matmul::multiply(a, b, p.rows_a, p.inner_dim, p.cols_b, workers)
}

/// Which experiment to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Experiment {
    MatmulFixed,
    LuVariable,
}

impl Experiment {
    pub fn name(&self) -> &'static str {
        match self {
            Experiment::MatmulFixed => "matmul_fixed",
            Experiment::LuVariable => "lu_variable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatmulParams {
    pub rows_a: usize,
    pub inner_dim: usize,
    pub cols_b: usize,
}

impl Default for MatmulParams {
    fn default() -> Self {
        MatmulParams { rows_a: 1024, inner_dim: 512, cols_b: 1024 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LuParams {
    /// Matrix rows per worker; the problem size at N workers is z₁·N.
    pub z1: usize,
    /// Matrices per batch; padding that keeps the parallel region's work
    /// dominant over worker management.
    pub m: usize,
    /// Lower bound applied to the measured sequential fraction before the
    /// theoretical overlay (single-unit runs are too short to resolve it).
    pub s_floor: f64,
}

impl Default for LuParams {
    fn default() -> Self {
        LuParams { z1: 64, m: 8, s_floor: 0.01 }
    }
}

fn default_thread_counts() -> Vec<usize> {
    vec![1, 2, 4]
}

fn default_seed() -> u64 {
    42
}

fn default_repetitions() -> usize {
    3
}

/// Benchmark configuration; the JSON document format of `bench --config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub experiment: Experiment,
    #[serde(default = "default_thread_counts")]
    pub thread_counts: Vec<usize>,
    #[serde(default)]
    pub matmul: MatmulParams,
    #[serde(default)]
    pub lu: LuParams,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Inclusive range for the random integer matrix entries. Defaults to
    /// [-1000, 1000] for matmul and [1, 1000] for LU (positive entries
    /// keep the pivotless elimination away from zero pivots).
    #[serde(default)]
    pub value_range: Option<(i64, i64)>,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
}

impl BenchConfig {
    pub fn new(experiment: Experiment) -> Self {
        BenchConfig {
            experiment,
            thread_counts: default_thread_counts(),
            matmul: MatmulParams::default(),
            lu: LuParams::default(),
            seed: default_seed(),
            value_range: None,
            repetitions: default_repetitions(),
        }
    }

    pub fn resolved_range(&self) -> (i64, i64) {
        self.value_range.unwrap_or(match self.experiment {
            Experiment::MatmulFixed => (-1000, 1000),
            Experiment::LuVariable => (1, 1000),
        })
    }

    /// Validate and normalize (thread counts sorted, deduplicated).
    pub fn validate(&mut self) -> Result<()> {
        if self.thread_counts.is_empty() {
            return Err(Error::BenchConfig("thread_counts must be nonempty".into()));
        }
        if self.thread_counts.contains(&0) {
            return Err(Error::BenchConfig("thread counts must be >= 1".into()));
        }
        self.thread_counts.sort_unstable();
        self.thread_counts.dedup();
        if self.thread_counts[0] != 1 {
            return Err(Error::BenchConfig(
                "thread_counts must contain 1 (the baseline measurement)".into(),
            ));
        }
        if self.repetitions == 0 {
            return Err(Error::BenchConfig("repetitions must be >= 1".into()));
        }
        let (lo, hi) = self.resolved_range();
        if lo > hi {
            return Err(Error::BenchConfig(format!("empty value range [{lo}, {hi}]")));
        }
        match self.experiment {
            Experiment::MatmulFixed => {
                let max_n = *self.thread_counts.last().expect("nonempty");
                let p = self.matmul;
                if p.rows_a == 0 || p.inner_dim == 0 || p.cols_b == 0 {
                    return Err(Error::BenchConfig("matmul dimensions must be >= 1".into()));
                }
                if !p.rows_a.is_multiple_of(max_n) {
                    return Err(Error::BenchConfig(format!(
                        "rows_a = {} must be divisible by the largest thread count {max_n} \
                         so the row partition is equal",
                        p.rows_a
                    )));
                }
            }
            Experiment::LuVariable => {
                if self.lu.z1 < 2 {
                    return Err(Error::BenchConfig("lu.z1 must be >= 2".into()));
                }
                if self.lu.m == 0 {
                    return Err(Error::BenchConfig("lu.m must be >= 1".into()));
                }
                if !(0.0..1.0).contains(&self.lu.s_floor) {
                    return Err(Error::BenchConfig("lu.s_floor must lie in [0, 1)".into()));
                }
                if lo < 1 {
                    return Err(Error::BenchConfig(
                        "LU entries must be >= 1; the elimination runs without pivoting".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// One measured point with its derived and theoretical columns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    /// Single-worker time of this row's workload, ms.
    pub t_single_ms: f64,
    /// N-worker time, ms.
    pub t_total_ms: f64,
    pub s_comp: f64,
    pub e_comp: f64,
    pub s_theor: f64,
    pub e_theor: f64,
}

/// Execution environment captured alongside the measurements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvRecord {
    pub cores: usize,
    pub timestamp_unix_ms: u128,
    pub repetitions: usize,
    pub seed: u64,
    pub notes: Vec<String>,
}

/// Full result of one harness run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchResult {
    pub experiment: Experiment,
    pub rows: Vec<BenchRow>,
    /// Sequential/parallel phase times measured at N = 1, ms.
    pub t_seq_ms: f64,
    pub t_par_ms: f64,
    pub s_measured: f64,
    /// The value used for the theoretical columns (floored for LU).
    pub s_used: f64,
    /// LU only: rows per worker.
    pub lu_z1: Option<u64>,
    pub env: EnvRecord,
}

/// Compute the derived columns from raw times: `S = t_single/t_total`,
/// `E = S/N`, with the theoretical overlay supplied by the caller.
/// This is the single derivation path shared by the harness and by
/// re-derivations from recorded raw times.
pub fn derive_rows<F: Fn(usize) -> f64>(raw: &[(usize, f64, f64)], theor: F) -> Vec<BenchRow> {
    raw.iter()
        .map(|&(n, t_single, t_total)| {
            let s_comp = t_single / t_total;
            let s_theor = theor(n);
            BenchRow {
                n,
                t_single_ms: t_single,
                t_total_ms: t_total,
                s_comp,
                e_comp: s_comp / n as f64,
                s_theor,
                e_theor: s_theor / n as f64,
            }
        })
        .collect()
}

fn now_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn env_record(cfg: &BenchConfig, notes: Vec<String>) -> EnvRecord {
    EnvRecord {
        cores: std::thread::available_parallelism().map(|c| c.get()).unwrap_or(1),
        timestamp_unix_ms: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_millis())
            .unwrap_or(0),
        repetitions: cfg.repetitions,
        seed: cfg.seed,
        notes,
    }
}

fn note_oversubscription(cfg: &BenchConfig, notes: &mut Vec<String>) {
    let cores = std::thread::available_parallelism().map(|c| c.get()).unwrap_or(1);
    for &n in &cfg.thread_counts {
        if n > cores {
            notes.push(format!(
                "N={n} exceeds the {cores} available hardware threads; measured values will degrade"
            ));
        }
    }
}

/// Run the fixed-workload matrix multiplication experiment.
pub fn run_matmul(config: &BenchConfig) -> Result<BenchResult> {
    let mut cfg = config.clone();
    if cfg.experiment != Experiment::MatmulFixed {
        return Err(Error::BenchConfig("config is not a matmul_fixed config".into()));
    }
    cfg.validate()?;
    let p = cfg.matmul;
    let range = cfg.resolved_range();
    let mut notes = Vec::new();
    note_oversubscription(&cfg, &mut notes);

    let mut raw: Vec<(usize, f64, f64)> = Vec::new();
    let mut split = (0.0, 0.0);
    let mut t1_total = 0.0;
    for &n in &cfg.thread_counts {
        let workers = Workers::new(n)?;
        let mut best: Option<(f64, f64)> = None;
        for _ in 0..cfg.repetitions {
            let t0 = Instant::now();
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let a = matmul::generate(p.rows_a, p.inner_dim, range, &mut rng);
            let b = matmul::generate(p.inner_dim, p.cols_b, range, &mut rng);
            let t_init = now_ms(t0);
            let t1 = Instant::now();
            let c = matmul::multiply(&a, &b, p.rows_a, p.inner_dim, p.cols_b, &workers);
            let t_mul = now_ms(t1);
            std::hint::black_box(&c);
            if best.is_none_or(|(bi, bm)| t_init + t_mul < bi + bm) {
                best = Some((t_init, t_mul));
            }
        }
        let (t_init, t_mul) = best.expect("repetitions >= 1");
        let total = t_init + t_mul;
        if n == 1 {
            split = (t_init, t_mul);
            t1_total = total;
        }
        raw.push((n, 0.0, total));
    }
    for r in &mut raw {
        r.1 = t1_total; // fixed workload: every row compares to the one baseline
    }

    let est = estimate_s(split.0, split.1)?;
    if let Some(w) = est.warning {
        notes.push(w);
    }
    let s = est.s;
    let rows = derive_rows(&raw, |n| 1.0 / (s + (1.0 - s) / n as f64));
    Ok(BenchResult {
        experiment: Experiment::MatmulFixed,
        rows,
        t_seq_ms: split.0,
        t_par_ms: split.1,
        s_measured: s,
        s_used: s,
        lu_z1: None,
        env: env_record(&cfg, notes),
    })
}

/// Run the variable-workload LU experiment: at each N the matrix has
/// `z = z₁·N` rows and is decomposed both with one worker and with N.
pub fn run_lu(config: &BenchConfig) -> Result<BenchResult> {
    let mut cfg = config.clone();
    if cfg.experiment != Experiment::LuVariable {
        return Err(Error::BenchConfig("config is not a lu_variable config".into()));
    }
    cfg.validate()?;
    let p = cfg.lu;
    let range = cfg.resolved_range();
    let mut notes = Vec::new();
    note_oversubscription(&cfg, &mut notes);

    // (generation phase ms, decompose phase ms), fastest of `reps` runs
    let measure = |workers: &Workers, z: usize, seed: u64, reps: usize| -> (f64, f64) {
        let mut best: Option<(f64, f64)> = None;
        for _ in 0..reps {
            let t0 = Instant::now();
            let mut batch = LuBatch::generate(z, p.m, range, seed);
            let t_init = now_ms(t0);
            let t1 = Instant::now();
            batch.decompose(workers);
            let t_dec = now_ms(t1);
            std::hint::black_box(&batch);
            if best.is_none_or(|(bi, bd)| t_init + t_dec < bi + bd) {
                best = Some((t_init, t_dec));
            }
        }
        best.expect("repetitions >= 1")
    };

    let mut raw: Vec<(usize, f64, f64)> = Vec::new();
    let mut split = (0.0, 0.0);
    for &n in &cfg.thread_counts {
        let z = p.z1 * n;
        // distinct data per problem size, identical between the two runs
        let seed = cfg.seed.wrapping_add(n as u64);
        let workers = Workers::new(n)?;
        let (t_init_n, t_dec_n) = measure(&workers, z, seed, cfg.repetitions);
        let t_total = t_init_n + t_dec_n;
        let t_single = if n == 1 {
            split = (t_init_n, t_dec_n);
            t_total
        } else {
            let single = Workers::new(1)?;
            let (ti, td) = measure(&single, z, seed, cfg.repetitions);
            ti + td
        };
        raw.push((n, t_single, t_total));
    }

    let est = estimate_s(split.0, split.1)?;
    if let Some(w) = est.warning {
        notes.push(w);
    }
    let s_used = if est.s < p.s_floor {
        notes.push(format!(
            "measured s = {:.6} below the configured floor; using s = {} for the overlay",
            est.s, p.s_floor
        ));
        p.s_floor
    } else {
        est.s
    };
    let z1 = p.z1 as u64;
    let rows = derive_rows(&raw, |n| {
        oracle::lu_speedup_theoretical(s_used, z1, n as u64).expect("validated parameters")
    });
    Ok(BenchResult {
        experiment: Experiment::LuVariable,
        rows,
        t_seq_ms: split.0,
        t_par_ms: split.1,
        s_measured: est.s,
        s_used,
        lu_z1: Some(z1),
        env: env_record(&cfg, notes),
    })
}
