//! Parameter estimation from measured timings.
//!
//! Three estimators:
//!
//! - [`estimate_s`]: the sequential fraction from a single-unit run split
//!   into sequential and parallelizable phases, `s = t_seq/(t_seq + t_par)`.
//! - [`fit_power_law`]: ordinary least squares on `(ln x, ln y)`. Power
//!   laws are exactly linear in log space, so the noiseless fit is exact;
//!   the exponent is clamped to `≥ 0` (reported, never silent) to stay in
//!   the model's parameter domain.
//! - [`infer_h`]: inverts the parallel-time denominator to recover per-N
//!   `h` values from end-to-end times when `s`, `f`, `g` are known, then
//!   fits a power law over them.
//!
//! Timing files use milliseconds: a CSV with header `N,t_total`, plus an
//! optional single-row `t_seq,t_par` split file.

use crate::error::{Error, Result};
use crate::model::{PowerLaw, WorkloadSplit};

/// Measured `(N, total time)` samples, with an optional sequential/parallel
/// split measured at N = 1. Times are milliseconds.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingRun {
    samples: Vec<(u64, f64)>,
    split: Option<(f64, f64)>,
}

impl TimingRun {
    /// `samples` must be nonempty with strictly increasing `N ≥ 1` and
    /// positive times.
    pub fn new(samples: Vec<(u64, f64)>, split: Option<(f64, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Estimation("no timing samples".into()));
        }
        let mut prev = 0u64;
        for &(n, t) in &samples {
            if n == 0 {
                return Err(Error::Estimation("sample with N = 0".into()));
            }
            if n <= prev {
                return Err(Error::Estimation(format!(
                    "N values must be strictly increasing (saw {n} after {prev})"
                )));
            }
            if !t.is_finite() || t <= 0.0 {
                return Err(Error::Estimation(format!("non-positive time {t} at N={n}")));
            }
            prev = n;
        }
        if let Some((ts, tp)) = split {
            if !ts.is_finite() || ts < 0.0 || !tp.is_finite() || tp < 0.0 {
                return Err(Error::Estimation("split times must be nonnegative".into()));
            }
        }
        Ok(TimingRun { samples, split })
    }

    pub fn samples(&self) -> &[(u64, f64)] {
        &self.samples
    }

    pub fn split(&self) -> Option<(f64, f64)> {
        self.split
    }
}

/// Estimated sequential fraction, with a warning when the measurement was
/// degenerate (a zero phase, typically timer resolution).
#[derive(Debug, Clone, PartialEq)]
pub struct SEstimate {
    pub s: f64,
    pub warning: Option<String>,
}

/// `s = t_seq/(t_seq + t_par)` from a single-unit run.
pub fn estimate_s(t_seq: f64, t_par: f64) -> Result<SEstimate> {
    if !t_seq.is_finite() || t_seq < 0.0 || !t_par.is_finite() || t_par < 0.0 {
        return Err(Error::Estimation(format!(
            "split times must be finite and nonnegative (got {t_seq}, {t_par})"
        )));
    }
    if t_seq == 0.0 && t_par == 0.0 {
        return Err(Error::Estimation("both split times are zero".into()));
    }
    let s = t_seq / (t_seq + t_par);
    let warning = if t_seq == 0.0 {
        Some("measured sequential time is zero; s = 0 is below timer resolution, consider a floor".into())
    } else if t_par == 0.0 {
        Some("measured parallel time is zero; s = 1 means nothing to parallelize".into())
    } else {
        None
    };
    Ok(SEstimate { s, warning })
}

/// Weighting for the log-log least squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitWeighting {
    /// Every sample weighs the same.
    Uniform,
    /// Samples weigh by the width of their neighborhood in `ln x`, so a
    /// linearly spaced grid does not overweight large `x`.
    LogSpacing,
}

/// A fitted power law plus fit diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerLawFit {
    pub law: PowerLaw,
    /// Weighted RMS of the residuals in log space.
    pub rms_log_residual: f64,
    /// True when the unconstrained slope was negative and got clamped to 0.
    pub alpha_clamped: bool,
}

/// Least squares for `y = c·x^α` on `(ln x, ln y)`. Needs at least two
/// points with distinct `x ≥ 1`; all `y` must be positive.
pub fn fit_power_law(points: &[(f64, f64)], weighting: FitWeighting) -> Result<PowerLawFit> {
    if points.len() < 2 {
        return Err(Error::Estimation("need at least 2 points to fit".into()));
    }
    for &(x, y) in points {
        if !x.is_finite() || x < 1.0 {
            return Err(Error::Estimation(format!("x values must be >= 1, got {x}")));
        }
        if !y.is_finite() || y <= 0.0 {
            return Err(Error::Estimation(format!("y values must be positive, got {y}")));
        }
    }
    let mut pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    if pts.windows(2).all(|w| w[0].0 == w[1].0) {
        return Err(Error::Estimation("need at least 2 distinct x values".into()));
    }

    let weights: Vec<f64> = match weighting {
        FitWeighting::Uniform => vec![1.0; pts.len()],
        FitWeighting::LogSpacing => {
            let k = pts.len();
            (0..k)
                .map(|i| {
                    let lo = if i == 0 { pts[0].0 } else { pts[i - 1].0 };
                    let hi = if i == k - 1 { pts[k - 1].0 } else { pts[i + 1].0 };
                    // half the neighbor-to-neighbor span; end points get their
                    // single-sided span
                    ((hi - lo) * 0.5).max(f64::MIN_POSITIVE)
                })
                .collect()
        }
    };

    let wsum: f64 = weights.iter().sum();
    let mx = pts.iter().zip(&weights).map(|(p, w)| w * p.0).sum::<f64>() / wsum;
    let my = pts.iter().zip(&weights).map(|(p, w)| w * p.1).sum::<f64>() / wsum;
    let sxx: f64 = pts.iter().zip(&weights).map(|(p, w)| w * (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().zip(&weights).map(|(p, w)| w * (p.0 - mx) * (p.1 - my)).sum();

    let mut alpha = sxy / sxx;
    let mut alpha_clamped = false;
    if alpha < 0.0 {
        alpha = 0.0;
        alpha_clamped = true;
    }
    // with alpha fixed (possibly clamped), the optimal intercept is the
    // weighted mean of ln y - alpha·ln x
    let ln_c = pts.iter().zip(&weights).map(|(p, w)| w * (p.1 - alpha * p.0)).sum::<f64>() / wsum;
    let c = ln_c.exp();

    let rss: f64 = pts
        .iter()
        .zip(&weights)
        .map(|(p, w)| {
            let r = p.1 - (ln_c + alpha * p.0);
            w * r * r
        })
        .sum();
    let rms = (rss / wsum).sqrt();

    Ok(PowerLawFit { law: PowerLaw::new(c, alpha)?, rms_log_residual: rms, alpha_clamped })
}

/// One inverted sample: the `h` value implied by the measured time at `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HSample {
    pub n: u64,
    pub h_hat: f64,
}

/// A sample where inversion failed: the normalized time did not exceed the
/// sequential term, i.e. overhead (or noise) has swamped the model there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HRejected {
    pub n: u64,
    pub normalized_time: f64,
    pub sequential_term: f64,
}

/// Inversion result: per-sample `h` values, rejected samples, and the
/// fitted power law over the accepted ones.
#[derive(Debug, Clone, PartialEq)]
pub struct HInference {
    pub samples: Vec<HSample>,
    pub rejected: Vec<HRejected>,
    pub fit: PowerLawFit,
}

/// Recover `h` from end-to-end times with `s`, `f`, `g` known.
///
/// The run must contain an `N = 1` sample; it normalizes measured time
/// into model units (a single unit executes everything serially, so
/// `T(1) = s·f(1) + p·g(1)`) and is excluded from the fit. For every other
/// sample, `h_hat(N) = p·g(N) / (T̂(N) − s·f(N))`.
pub fn infer_h(
    run: &TimingRun,
    split: &WorkloadSplit,
    f: &PowerLaw,
    g: &PowerLaw,
) -> Result<HInference> {
    let s = split.sequential();
    let p = split.parallelizable();
    let t1 = run
        .samples()
        .iter()
        .find(|&&(n, _)| n == 1)
        .map(|&(_, t)| t)
        .ok_or_else(|| Error::Estimation("inversion needs an N = 1 sample for normalization".into()))?;
    let scale = (s * f.eval(1) + p * g.eval(1)) / t1;

    let mut samples = Vec::new();
    let mut rejected = Vec::new();
    for &(n, t) in run.samples().iter().filter(|&&(n, _)| n > 1) {
        let normalized = t * scale;
        let seq_term = s * f.eval(n);
        let rest = normalized - seq_term;
        if rest <= 0.0 {
            rejected.push(HRejected { n, normalized_time: normalized, sequential_term: seq_term });
            continue;
        }
        samples.push(HSample { n, h_hat: p * g.eval(n) / rest });
    }
    if samples.len() < 2 {
        return Err(Error::Estimation(format!(
            "not enough invertible samples to fit h ({} accepted, {} rejected)",
            samples.len(),
            rejected.len()
        )));
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|h| (h.n as f64, h.h_hat)).collect();
    let fit = fit_power_law(&pts, FitWeighting::Uniform)?;
    Ok(HInference { samples, rejected, fit })
}

/// Parse a `N,t_total` CSV (milliseconds). Blank lines and `#` comments
/// are ignored.
pub fn parse_timing_csv(text: &str) -> Result<Vec<(u64, f64)>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Estimation("empty timing CSV".into()))?;
    if header != "N,t_total" {
        return Err(Error::Estimation(format!(
            "timing CSV must start with header 'N,t_total', got '{header}'"
        )));
    }
    let mut out = Vec::new();
    for line in lines {
        let (n, t) = line
            .split_once(',')
            .ok_or_else(|| Error::Estimation(format!("malformed timing row '{line}'")))?;
        let n: u64 = n
            .trim()
            .parse()
            .map_err(|_| Error::Estimation(format!("bad N in row '{line}'")))?;
        let t: f64 = t
            .trim()
            .parse()
            .map_err(|_| Error::Estimation(format!("bad time in row '{line}'")))?;
        out.push((n, t));
    }
    Ok(out)
}

/// Parse the single-row `t_seq,t_par` split file (milliseconds).
pub fn parse_split_csv(text: &str) -> Result<(f64, f64)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Estimation("empty split CSV".into()))?;
    if header != "t_seq,t_par" {
        return Err(Error::Estimation(format!(
            "split CSV must start with header 't_seq,t_par', got '{header}'"
        )));
    }
    let row = lines.next().ok_or_else(|| Error::Estimation("split CSV has no data row".into()))?;
    let (a, b) = row
        .split_once(',')
        .ok_or_else(|| Error::Estimation(format!("malformed split row '{row}'")))?;
    let t_seq: f64 =
        a.trim().parse().map_err(|_| Error::Estimation(format!("bad t_seq in '{row}'")))?;
    let t_par: f64 =
        b.trim().parse().map_err(|_| Error::Estimation(format!("bad t_par in '{row}'")))?;
    Ok((t_seq, t_par))
}
