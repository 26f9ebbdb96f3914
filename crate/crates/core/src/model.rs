//! The speedup and efficiency model.
//!
//! A workload is split into a sequential fraction `s` and a parallelizable
//! fraction `p = 1 - s`. Three scaling functions describe what happens as
//! the number of processing units `N` grows:
//!
//! - `f(N)` scales the sequential workload,
//! - `g(N)` scales the parallelizable workload,
//! - `h(N)` divides the parallel execution time of the parallelizable
//!   workload (`h(N) = N` is perfect distribution).
//!
//! With an additive overhead `z(N)` the general equations are
//!
//! ```text
//! S(N) = (s·f(1) + p·g(1)) / (s·f(N) + p·g(N)/h(N) + z(N))
//! E(N) = S(N) / N
//! ```
//!
//! [`GeneralModel`] evaluates these for arbitrary mappings. [`ScalabilityModel`]
//! is the closed-form specialization where `f`, `g`, `h` are power functions
//! `c·N^α` and overhead is ignored (for `N > 1`, or `N = 1` when `c_h = 1`):
//!
//! ```text
//! S(N) = (s·c_f·N^α_f + p·c_g·N^α_g) / (s·c_f·N^α_f + (p·c_g/c_h)·N^(α_g−α_h))
//! E(N) = (s·c_f·N^α_f + p·c_g·N^α_g) / (s·c_f·N^(α_f+1) + (p·c_g/c_h)·N^(α_g−α_h+1))
//! ```
//!
//! All types are immutable after construction and all evaluation is pure,
//! so everything here can be shared freely across threads.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A power function `N ↦ c·N^α` with `c > 0` and `α ≥ 0`.
///
/// Serializes as `{"c": .., "alpha": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPowerLaw", into = "RawPowerLaw")]
pub struct PowerLaw {
    coeff: f64,
    exponent: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPowerLaw {
    c: f64,
    alpha: f64,
}

impl TryFrom<RawPowerLaw> for PowerLaw {
    type Error = Error;
    fn try_from(raw: RawPowerLaw) -> Result<Self> {
        PowerLaw::new(raw.c, raw.alpha)
    }
}

impl From<PowerLaw> for RawPowerLaw {
    fn from(p: PowerLaw) -> Self {
        RawPowerLaw { c: p.coeff, alpha: p.exponent }
    }
}

impl PowerLaw {
    pub fn new(coeff: f64, exponent: f64) -> Result<Self> {
        if !coeff.is_finite() || coeff <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "power-law coefficient must be finite and > 0, got {coeff}"
            )));
        }
        if !exponent.is_finite() || exponent < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "power-law exponent must be finite and >= 0, got {exponent}"
            )));
        }
        Ok(PowerLaw { coeff, exponent })
    }

    /// `c·N^0`, a constant.
    pub fn constant(coeff: f64) -> Result<Self> {
        Self::new(coeff, 0.0)
    }

    /// `1·N^0`, the neutral scaling function.
    pub fn unit() -> Self {
        PowerLaw { coeff: 1.0, exponent: 0.0 }
    }

    /// `1·N^1`, perfect linear scaling.
    pub fn identity() -> Self {
        PowerLaw { coeff: 1.0, exponent: 1.0 }
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn eval(&self, n: u64) -> f64 {
        self.coeff * (n as f64).powf(self.exponent)
    }
}

/// Normalized workload split. `s` is stored; `p = 1 - s` is always derived,
/// so `s + p = 1` holds exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkloadSplit {
    s: f64,
}

impl WorkloadSplit {
    /// `s` must lie in `[0, 1]`. The degenerate endpoints are valid for
    /// evaluation; classification rejects them separately.
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || !(0.0..=1.0).contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "sequential fraction s must lie in [0, 1], got {s}"
            )));
        }
        Ok(WorkloadSplit { s })
    }

    pub fn sequential(&self) -> f64 {
        self.s
    }

    pub fn parallelizable(&self) -> f64 {
        1.0 - self.s
    }
}

/// The power-law speedup model: a workload split plus the three scaling
/// functions `f`, `g`, `h`.
///
/// Serializes as `{"s": .., "f": {"c": .., "alpha": ..}, "g": {..}, "h": {..}}`
/// with unknown fields rejected; an optional `"schema"` field must equal 1.
/// This document is the model-file format shared by the CLI and the
/// estimation tooling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModel", into = "RawModel")]
pub struct ScalabilityModel {
    split: WorkloadSplit,
    f: PowerLaw,
    g: PowerLaw,
    h: PowerLaw,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    schema: Option<u32>,
    s: f64,
    f: PowerLaw,
    g: PowerLaw,
    h: PowerLaw,
}

impl TryFrom<RawModel> for ScalabilityModel {
    type Error = Error;
    fn try_from(raw: RawModel) -> Result<Self> {
        if let Some(v) = raw.schema {
            if v != 1 {
                return Err(Error::InvalidParameter(format!(
                    "unsupported model schema version {v} (expected 1)"
                )));
            }
        }
        ScalabilityModel::new(WorkloadSplit::new(raw.s)?, raw.f, raw.g, raw.h)
    }
}

impl From<ScalabilityModel> for RawModel {
    fn from(m: ScalabilityModel) -> Self {
        RawModel { schema: Some(1), s: m.split.sequential(), f: m.f, g: m.g, h: m.h }
    }
}

impl ScalabilityModel {
    pub fn new(split: WorkloadSplit, f: PowerLaw, g: PowerLaw, h: PowerLaw) -> Result<Self> {
        Ok(ScalabilityModel { split, f, g, h })
    }

    pub fn split(&self) -> WorkloadSplit {
        self.split
    }

    pub fn f(&self) -> PowerLaw {
        self.f
    }

    pub fn g(&self) -> PowerLaw {
        self.g
    }

    pub fn h(&self) -> PowerLaw {
        self.h
    }

    fn guard_n(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidParameter("N must be >= 1".into()));
        }
        if n == 1 && self.h.coeff() != 1.0 {
            return Err(Error::EvalAtOne { c_h: self.h.coeff() });
        }
        Ok(())
    }

    /// Time to execute the N-scaled workload on a single unit:
    /// `s·c_f·N^α_f + p·c_g·N^α_g`. Defined for all `N ≥ 1`.
    pub fn serial_time(&self, n: u64) -> f64 {
        assert!(n >= 1, "N must be >= 1");
        let s = self.split.sequential();
        let p = self.split.parallelizable();
        s * self.f.eval(n) + p * self.g.eval(n)
    }

    /// Time to execute the N-scaled workload on N units:
    /// `s·c_f·N^α_f + (p·c_g/c_h)·N^(α_g−α_h)`.
    ///
    /// `N = 1` is rejected unless `c_h = 1`, because `h(1) = c_h` and a
    /// single unit cannot reduce (or inflate) its own execution time.
    pub fn parallel_time(&self, n: u64) -> Result<f64> {
        self.guard_n(n)?;
        let s = self.split.sequential();
        let p = self.split.parallelizable();
        Ok(s * self.f.eval(n) + p * self.g.eval(n) / self.h.eval(n))
    }

    /// `S(N) = serial_time(N) / parallel_time(N)`.
    pub fn speedup(&self, n: u64) -> Result<f64> {
        Ok(self.serial_time(n) / self.parallel_time(n)?)
    }

    /// `E(N) = S(N)/N`, evaluated through its own closed form
    /// (exponents shifted by one in the denominator) rather than by
    /// dividing [`Self::speedup`] by `N`; the two routes agree to
    /// machine precision and tests hold them to 1e-12.
    pub fn efficiency(&self, n: u64) -> Result<f64> {
        self.guard_n(n)?;
        let s = self.split.sequential();
        let p = self.split.parallelizable();
        let nf = n as f64;
        let num = self.serial_time(n);
        let den = s * self.f.coeff() * nf.powf(self.f.exponent() + 1.0)
            + (p * self.g.coeff() / self.h.coeff())
                * nf.powf(self.g.exponent() - self.h.exponent() + 1.0);
        Ok(num / den)
    }
}

/// The general model: arbitrary workload mappings plus an additive overhead
/// term. `f`, `g`, `h` must be positive and `z` nonnegative over the queried
/// range; violations are reported per call.
pub struct GeneralModel<F, G, H, Z>
where
    F: Fn(u64) -> f64,
    G: Fn(u64) -> f64,
    H: Fn(u64) -> f64,
    Z: Fn(u64) -> f64,
{
    split: WorkloadSplit,
    f: F,
    g: G,
    h: H,
    z: Z,
}

impl<F, G, H, Z> GeneralModel<F, G, H, Z>
where
    F: Fn(u64) -> f64,
    G: Fn(u64) -> f64,
    H: Fn(u64) -> f64,
    Z: Fn(u64) -> f64,
{
    pub fn new(split: WorkloadSplit, f: F, g: G, h: H, z: Z) -> Self {
        GeneralModel { split, f, g, h, z }
    }

    fn check_point(&self, n: u64) -> Result<(f64, f64, f64, f64)> {
        let (fv, gv, hv, zv) = ((self.f)(n), (self.g)(n), (self.h)(n), (self.z)(n));
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(fv) || !positive(gv) || !positive(hv) {
            return Err(Error::InvalidParameter(format!(
                "f, g, h must be positive at N={n} (got f={fv}, g={gv}, h={hv})"
            )));
        }
        if !zv.is_finite() || zv < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "overhead must be nonnegative at N={n} (got z={zv})"
            )));
        }
        Ok((fv, gv, hv, zv))
    }

    /// `S(N) = (s·f(1) + p·g(1)) / (s·f(N) + p·g(N)/h(N) + z(N))` for `N ≥ 1`.
    pub fn speedup(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidParameter("N must be >= 1".into()));
        }
        let s = self.split.sequential();
        let p = self.split.parallelizable();
        let f1 = (self.f)(1);
        let g1 = (self.g)(1);
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(f1) || !positive(g1) {
            return Err(Error::InvalidParameter(format!(
                "f(1) and g(1) must be positive (got f(1)={f1}, g(1)={g1})"
            )));
        }
        let (fv, gv, hv, zv) = self.check_point(n)?;
        let den = s * fv + p * gv / hv + zv;
        if !den.is_finite() || den <= 0.0 {
            return Err(Error::NonPositiveDenominator { n, value: den });
        }
        Ok((s * f1 + p * g1) / den)
    }

    /// `E(N) = S(N)/N`.
    pub fn efficiency(&self, n: u64) -> Result<f64> {
        Ok(self.speedup(n)? / n as f64)
    }
}
