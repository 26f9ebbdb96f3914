//! Additive parallelization overhead and the optimization problems it
//! creates.
//!
//! With a polynomial overhead term the closed-form equations become
//!
//! ```text
//! S(N) = (s·c_f·N^α_f + p·c_g·N^α_g) / (s·c_f·N^α_f + (p·c_g/c_h)·N^(α_g−α_h) + z(N))
//! E(N) = (s·c_f·N^α_f + p·c_g·N^α_g) / (s·c_f·N^(α_f+1) + (p·c_g/c_h)·N^(α_g−α_h+1) + N·z(N))
//! ```
//!
//! and execution time, speedup, and efficiency may stop being monotone in
//! `N`, so asymptotic limits give way to extreme points: [`optimal_n`]
//! scans the integer range exhaustively.
//!
//! [`check_flatt_kennedy`] tests the five classical requirements on an
//! overhead function under which speedup has a unique finite maximum:
//! smoothness, `z(1) = 0`, `z' > 0`, `N·z'' + 2·z' > 0`, and the existence
//! of `N₁` with `z(N₁) = 1`. Every shifted polynomial
//! `z(N) = c_z·N^α_z − c_z` with `c_z, α_z > 0` satisfies all five, with
//! `N₁ = ((c_z + 1)/c_z)^(1/α_z)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ScalabilityModel;

/// Polynomial overhead. Unshifted: `z(N) = c_z·N^α_z`. Shifted:
/// `z(N) = c_z·N^α_z − c_z`, which makes `z(1) = 0` exact.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOverheadPoly", into = "RawOverheadPoly")]
pub struct OverheadPoly {
    c_z: f64,
    alpha_z: f64,
    shifted: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOverheadPoly {
    c_z: f64,
    alpha_z: f64,
    shifted: bool,
}

impl TryFrom<RawOverheadPoly> for OverheadPoly {
    type Error = Error;
    fn try_from(raw: RawOverheadPoly) -> Result<Self> {
        OverheadPoly::new(raw.c_z, raw.alpha_z, raw.shifted)
    }
}

impl From<OverheadPoly> for RawOverheadPoly {
    fn from(z: OverheadPoly) -> Self {
        RawOverheadPoly { c_z: z.c_z, alpha_z: z.alpha_z, shifted: z.shifted }
    }
}

impl OverheadPoly {
    pub fn new(c_z: f64, alpha_z: f64, shifted: bool) -> Result<Self> {
        if !c_z.is_finite() || c_z <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "overhead coefficient c_z must be finite and > 0, got {c_z}"
            )));
        }
        if !alpha_z.is_finite() || alpha_z < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "overhead exponent alpha_z must be finite and >= 0, got {alpha_z}"
            )));
        }
        Ok(OverheadPoly { c_z, alpha_z, shifted })
    }

    pub fn c_z(&self) -> f64 {
        self.c_z
    }

    pub fn alpha_z(&self) -> f64 {
        self.alpha_z
    }

    pub fn shifted(&self) -> bool {
        self.shifted
    }

    pub fn eval(&self, n: u64) -> f64 {
        self.eval_real(n as f64)
    }

    fn eval_real(&self, n: f64) -> f64 {
        let base = self.c_z * n.powf(self.alpha_z);
        if self.shifted {
            base - self.c_z
        } else {
            base
        }
    }

    /// `N·z(N)`, computed through the shifted exponents so the efficiency
    /// closed form is a genuinely distinct arithmetic route from `S(N)/N`.
    fn n_times_eval(&self, n: u64) -> f64 {
        let nf = n as f64;
        let lead = self.c_z * nf.powf(self.alpha_z + 1.0);
        if self.shifted {
            lead - self.c_z * nf
        } else {
            lead
        }
    }
}

fn guard_n(m: &ScalabilityModel, z: &OverheadPoly, n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("N must be >= 1".into()));
    }
    if n == 1 {
        if m.h().coeff() != 1.0 {
            return Err(Error::EvalAtOne { c_h: m.h().coeff() });
        }
        if z.eval(1) != 0.0 {
            return Err(Error::InvalidParameter(
                "evaluation at N=1 requires z(1) = 0 (use a shifted overhead)".into(),
            ));
        }
    }
    Ok(())
}

/// Speedup with the overhead term added to the parallel time.
pub fn overhead_speedup(m: &ScalabilityModel, z: &OverheadPoly, n: u64) -> Result<f64> {
    guard_n(m, z, n)?;
    Ok(m.serial_time(n) / (m.parallel_time(n)? + z.eval(n)))
}

/// Efficiency with overhead, via its own closed form; agrees with
/// `overhead_speedup / N` to machine precision.
pub fn overhead_efficiency(m: &ScalabilityModel, z: &OverheadPoly, n: u64) -> Result<f64> {
    guard_n(m, z, n)?;
    let s = m.split().sequential();
    let p = m.split().parallelizable();
    let nf = n as f64;
    let den = s * m.f().coeff() * nf.powf(m.f().exponent() + 1.0)
        + (p * m.g().coeff() / m.h().coeff()) * nf.powf(m.g().exponent() - m.h().exponent() + 1.0)
        + z.n_times_eval(n);
    Ok(m.serial_time(n) / den)
}

/// Outcome of checking the five overhead requirements.
///
/// Conditions 1, 3, and 4 are decided analytically from the closed
/// derivatives of the polynomial family and double-checked numerically on
/// a grid over `1..=n_max`; condition 2 is exact; condition 5 reports the
/// root `N₁` of `z(N) = 1` when one exists.
#[derive(Debug, Clone, Serialize)]
pub struct FlattKennedyReport {
    /// Twice continuously differentiable on `N ≥ 1`. Holds for the whole
    /// polynomial family; the numeric fallback for arbitrary mappings
    /// marks this approximate instead.
    pub smooth: bool,
    /// `z(1) = 0`.
    pub zero_at_one: bool,
    /// `z'(N) > 0` for all `N ≥ 1`.
    pub strictly_increasing: bool,
    /// `N·z''(N) + 2·z'(N) > 0` for all `N ≥ 1`.
    pub curvature_positive: bool,
    /// `N₁ ≥ 1` with `z(N₁) = 1`, when it exists.
    pub n_one: Option<f64>,
    /// False when the checks came from secant approximations rather than
    /// closed derivatives.
    pub analytic: bool,
}

impl FlattKennedyReport {
    pub fn all_pass(&self) -> bool {
        self.smooth
            && self.zero_at_one
            && self.strictly_increasing
            && self.curvature_positive
            && self.n_one.is_some()
    }
}

/// Check the five requirements for a polynomial overhead. `n_max ≥ 2`.
pub fn check_flatt_kennedy(z: &OverheadPoly, n_max: u64) -> Result<FlattKennedyReport> {
    if n_max < 2 {
        return Err(Error::InvalidParameter(format!("n_max must be >= 2, got {n_max}")));
    }
    let (c, a) = (z.c_z, z.alpha_z);
    // closed derivatives: z' = c·a·N^(a-1), N·z'' + 2·z' = c·a·(a+1)·N^(a-1)
    let analytic_increasing = a > 0.0;
    let analytic_curvature = a > 0.0;

    // numeric confirmation on a geometric grid over 1..=n_max
    let mut grid = Vec::new();
    let mut x = 1.0f64;
    while x < n_max as f64 {
        grid.push(x);
        x *= 2.0;
    }
    grid.push(n_max as f64);
    let grid_ok = grid.into_iter().all(|n| {
        let d1 = c * a * n.powf(a - 1.0);
        let d2 = c * a * (a - 1.0) * n.powf(a - 2.0);
        d1 > 0.0 && n * d2 + 2.0 * d1 > 0.0
    });

    let n_one = if a > 0.0 {
        if z.shifted {
            Some(((c + 1.0) / c).powf(1.0 / a))
        } else if c <= 1.0 {
            Some((1.0 / c).powf(1.0 / a))
        } else {
            None
        }
    } else {
        // constant overhead: z == c (unshifted) or z == 0 (shifted)
        if !z.shifted && c == 1.0 {
            Some(1.0)
        } else {
            None
        }
    };

    Ok(FlattKennedyReport {
        smooth: true,
        zero_at_one: z.eval(1) == 0.0,
        strictly_increasing: analytic_increasing && grid_ok,
        curvature_positive: analytic_curvature && grid_ok,
        n_one,
        analytic: true,
    })
}

/// Secant-based check for an arbitrary overhead mapping; every condition
/// is approximate and the report says so.
pub fn check_flatt_kennedy_fn<Z: Fn(f64) -> f64>(z: Z, n_max: u64) -> Result<FlattKennedyReport> {
    if n_max < 2 {
        return Err(Error::InvalidParameter(format!("n_max must be >= 2, got {n_max}")));
    }
    let eps = 1e-5;
    let d1 = |x: f64| (z(x + eps) - z(x - eps)) / (2.0 * eps);
    let d2 = |x: f64| (z(x + eps) - 2.0 * z(x) + z(x - eps)) / (eps * eps);

    let mut increasing = true;
    let mut curvature = true;
    let mut smooth = true;
    let mut x = 1.0f64;
    let mut prev_n1_bracket: Option<(f64, f64)> = None;
    let mut prev = (x, z(x));
    while x <= n_max as f64 {
        let v = z(x);
        if !v.is_finite() {
            smooth = false;
        }
        if d1(x.max(1.0 + eps)) <= 0.0 {
            increasing = false;
        }
        let xx = x.max(1.0 + eps);
        if xx * d2(xx) + 2.0 * d1(xx) <= 0.0 {
            curvature = false;
        }
        if prev_n1_bracket.is_none() && (prev.1 - 1.0) * (v - 1.0) <= 0.0 && prev.0 < x {
            prev_n1_bracket = Some((prev.0, x));
        }
        prev = (x, v);
        if x == n_max as f64 {
            break;
        }
        x = (x * 1.5).min(n_max as f64);
    }

    // bisect for z(N1) = 1 if a sign change was bracketed
    let n_one = prev_n1_bracket.map(|(mut lo, mut hi)| {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (z(lo) - 1.0) * (z(mid) - 1.0) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    });

    Ok(FlattKennedyReport {
        smooth,
        zero_at_one: z(1.0).abs() <= 1e-12,
        strictly_increasing: increasing,
        curvature_positive: curvature,
        n_one,
        analytic: false,
    })
}

/// What to optimize over the worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// Minimize parallel execution time.
    Time,
    /// Maximize speedup.
    Speedup,
    /// Maximize efficiency.
    Efficiency,
}

fn objective_value(
    m: &ScalabilityModel,
    z: &OverheadPoly,
    objective: Objective,
    n: u64,
) -> Result<f64> {
    match objective {
        Objective::Time => Ok(m.parallel_time(n)? + z.eval(n)),
        Objective::Speedup => overhead_speedup(m, z, n),
        Objective::Efficiency => overhead_efficiency(m, z, n),
    }
}

/// Exhaustive integer search for the optimal worker count over
/// `N ∈ 1..=n_max` (N = 1 only when the model and overhead are evaluable
/// there). Ties break toward the smaller N. Returns `(N*, value)`.
///
/// The scan parallelizes across the grid when the `parallel` feature is
/// on; the winner is identical either way.
pub fn optimal_n(
    m: &ScalabilityModel,
    z: &OverheadPoly,
    objective: Objective,
    n_max: u64,
) -> Result<(u64, f64)> {
    if n_max < 2 {
        return Err(Error::InvalidParameter(format!("n_max must be >= 2, got {n_max}")));
    }
    let start = if m.h().coeff() == 1.0 && z.eval(1) == 0.0 { 1 } else { 2 };
    let minimize = objective == Objective::Time;

    // (n, value) wins over (n2, value2) on strictly better value, or on
    // equal value with smaller n
    let better = move |a: (u64, f64), b: (u64, f64)| -> (u64, f64) {
        let a_wins = if minimize { a.1 < b.1 } else { a.1 > b.1 };
        let b_wins = if minimize { b.1 < a.1 } else { b.1 > a.1 };
        if a_wins {
            a
        } else if b_wins {
            b
        } else if a.0 <= b.0 {
            a
        } else {
            b
        }
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (start..=n_max)
            .into_par_iter()
            .map(|n| objective_value(m, z, objective, n).map(|v| (n, v)))
            .try_reduce_with(|a, b| Ok(better(a, b)))
            .unwrap_or_else(|| {
                Err(Error::InvalidParameter("empty optimization range".into()))
            })
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut best: Option<(u64, f64)> = None;
        for n in start..=n_max {
            let v = objective_value(m, z, objective, n)?;
            best = Some(match best {
                None => (n, v),
                Some(b) => better(b, (n, v)),
            });
        }
        best.ok_or_else(|| Error::InvalidParameter("empty optimization range".into()))
    }
}
