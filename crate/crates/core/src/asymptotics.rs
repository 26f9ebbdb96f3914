//! Asymptotic classification of power-law speedup models.
//!
//! As `N → ∞` the behavior of `S(N)` and `E(N)` is decided entirely by
//! `d := α_g − α_f` and `α_h` (with the coefficients fixing the limit
//! values where those are finite). Six speedup cases and eight efficiency
//! cases combine into twelve scalability cases; each model maps to exactly
//! one of them.
//!
//! Speedup cases:
//!
//! ```text
//! A_S  d = 0, α_h > 0          → (s·c_f + p·c_g)/(s·c_f)            (upper bound)
//! B_S  d = 0, α_h = 0          → (s·c_f + p·c_g)/(s·c_f + p·c_g/c_h) (upper bound)
//! C_S  d < 0                   → 1                                   (lower bound)
//! D_S  d > 0, 0 < α_h ≤ d      → ∞, Θ(N^α_h)
//! E_S  0 < d < α_h             → ∞, Θ(N^d)
//! F_S  d > 0, α_h = 0          → c_h
//! ```
//!
//! Efficiency cases:
//!
//! ```text
//! A_E  d < 1                   → 0
//! B_E  d = 1, 0 ≤ α_h < 1      → 0
//! C_E  d = 1, α_h = 1          → p·c_g/(s·c_f + p·c_g/c_h)
//! D_E  d = 1, α_h > 1          → p·c_g/(s·c_f)
//! E_E  d > 1, 0 ≤ α_h < 1      → 0
//! F_E  d > 1, α_h = 1          → c_h
//! G_E  1 < d < α_h             → ∞, Θ(N^(d−1))
//! H_E  1 < α_h ≤ d             → ∞, Θ(N^(α_h−1))
//! ```
//!
//! The parameter region `0 < α_h ≤ d < 1` pairs D_S with A_E but belongs to
//! none of the eleven named scalability cases; it is assigned the extra
//! label [`ScalabilityCase::EExtended`] with type `(∞_h, 0)`.
//!
//! Exponent comparisons use an absolute tolerance (default
//! [`DEFAULT_EXPONENT_TOLERANCE`]) because the case boundaries are
//! measure-zero sets that user-entered reals are meant to hit exactly.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ScalabilityModel;

/// Absolute tolerance used when testing exponent differences against the
/// case boundaries 0 and 1.
pub const DEFAULT_EXPONENT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpeedupCase {
    #[serde(rename = "A_S")]
    A,
    #[serde(rename = "B_S")]
    B,
    #[serde(rename = "C_S")]
    C,
    #[serde(rename = "D_S")]
    D,
    #[serde(rename = "E_S")]
    E,
    #[serde(rename = "F_S")]
    F,
}

impl fmt::Display for SpeedupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SpeedupCase::A => "A_S",
            SpeedupCase::B => "B_S",
            SpeedupCase::C => "C_S",
            SpeedupCase::D => "D_S",
            SpeedupCase::E => "E_S",
            SpeedupCase::F => "F_S",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EfficiencyCase {
    #[serde(rename = "A_E")]
    A,
    #[serde(rename = "B_E")]
    B,
    #[serde(rename = "C_E")]
    C,
    #[serde(rename = "D_E")]
    D,
    #[serde(rename = "E_E")]
    E,
    #[serde(rename = "F_E")]
    F,
    #[serde(rename = "G_E")]
    G,
    #[serde(rename = "H_E")]
    H,
}

impl fmt::Display for EfficiencyCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EfficiencyCase::A => "A_E",
            EfficiencyCase::B => "B_E",
            EfficiencyCase::C => "C_E",
            EfficiencyCase::D => "D_E",
            EfficiencyCase::E => "E_E",
            EfficiencyCase::F => "F_E",
            EfficiencyCase::G => "G_E",
            EfficiencyCase::H => "H_E",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ScalabilityCase {
    #[serde(rename = "A_SC")]
    A,
    #[serde(rename = "B_SC")]
    B,
    #[serde(rename = "C_SC")]
    C,
    #[serde(rename = "D_SC")]
    D,
    #[serde(rename = "E_SC")]
    E,
    /// The gap region `0 < α_h ≤ α_g − α_f < 1`; behaves like E with the
    /// growth order still set by `h`, but the workload difference stays
    /// below one so efficiency dies out.
    #[serde(rename = "E_SC_extended")]
    EExtended,
    #[serde(rename = "F_SC")]
    F,
    #[serde(rename = "G_SC")]
    G,
    #[serde(rename = "H_SC")]
    H,
    #[serde(rename = "I_SC")]
    I,
    #[serde(rename = "J_SC")]
    J,
    #[serde(rename = "K_SC")]
    K,
}

impl fmt::Display for ScalabilityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ScalabilityCase::A => "A_SC",
            ScalabilityCase::B => "B_SC",
            ScalabilityCase::C => "C_SC",
            ScalabilityCase::D => "D_SC",
            ScalabilityCase::E => "E_SC",
            ScalabilityCase::EExtended => "E_SC_extended",
            ScalabilityCase::F => "F_SC",
            ScalabilityCase::G => "G_SC",
            ScalabilityCase::H => "H_SC",
            ScalabilityCase::I => "I_SC",
            ScalabilityCase::J => "J_SC",
            ScalabilityCase::K => "K_SC",
        };
        f.write_str(s)
    }
}

/// Direction in which a finite limit bounds the quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    UpperBound,
    LowerBound,
    /// The quantity is exactly constant, so the limit bounds it both ways.
    TwoSided,
    NotABound,
}

/// Either a finite limit (with its bound direction) or unbounded growth
/// with a stated Θ-exponent.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LimitValue {
    Finite { value: f64, bound: Bound },
    Unbounded { growth_exponent: f64 },
}

impl LimitValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, LimitValue::Finite { .. })
    }
}

/// The full classification of a model: both cases, the joint scalability
/// case, its type label, and the two limit values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub speedup_case: SpeedupCase,
    pub efficiency_case: EfficiencyCase,
    pub scalability_case: ScalabilityCase,
    #[serde(rename = "type")]
    pub type_label: String,
    pub speedup_limit: LimitValue,
    pub efficiency_limit: LimitValue,
    /// The matched inequalities over `α_g − α_f` and `α_h`.
    pub conditions: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Compares `x` against `target` with absolute tolerance `tol`.
fn cmp_tol(x: f64, target: f64, tol: f64) -> Ordering {
    if (x - target).abs() <= tol {
        Ordering::Equal
    } else if x < target {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn guard_split(m: &ScalabilityModel) -> Result<(f64, f64)> {
    let s = m.split().sequential();
    let p = m.split().parallelizable();
    if s <= 0.0 || s >= 1.0 {
        return Err(Error::DegenerateSplit { s });
    }
    Ok((s, p))
}

/// Classify the asymptotic speedup behavior. Requires `s ∈ (0, 1)`.
pub fn classify_speedup(m: &ScalabilityModel) -> Result<(SpeedupCase, LimitValue)> {
    classify_speedup_with(m, DEFAULT_EXPONENT_TOLERANCE)
}

pub fn classify_speedup_with(
    m: &ScalabilityModel,
    tol: f64,
) -> Result<(SpeedupCase, LimitValue)> {
    let (s, p) = guard_split(m)?;
    let a = s * m.f().coeff();
    let b = p * m.g().coeff();
    let c_h = m.h().coeff();
    let d = m.g().exponent() - m.f().exponent();
    let ah = m.h().exponent();

    let r = match (cmp_tol(d, 0.0, tol), cmp_tol(ah, 0.0, tol)) {
        (Ordering::Less, _) => {
            (SpeedupCase::C, LimitValue::Finite { value: 1.0, bound: Bound::LowerBound })
        }
        (Ordering::Equal, Ordering::Greater) => (
            SpeedupCase::A,
            LimitValue::Finite { value: (a + b) / a, bound: Bound::UpperBound },
        ),
        (Ordering::Equal, _) => (
            SpeedupCase::B,
            LimitValue::Finite { value: (a + b) / (a + b / c_h), bound: Bound::UpperBound },
        ),
        (Ordering::Greater, Ordering::Equal) => {
            let bound = match cmp_tol(c_h, 1.0, tol) {
                Ordering::Greater => Bound::LowerBound,
                Ordering::Less => Bound::UpperBound,
                Ordering::Equal => Bound::TwoSided,
            };
            (SpeedupCase::F, LimitValue::Finite { value: c_h, bound })
        }
        (Ordering::Greater, _) => {
            if cmp_tol(d, ah, tol) != Ordering::Less {
                (SpeedupCase::D, LimitValue::Unbounded { growth_exponent: ah })
            } else {
                (SpeedupCase::E, LimitValue::Unbounded { growth_exponent: d })
            }
        }
    };
    Ok(r)
}

/// Classify the asymptotic efficiency behavior. Requires `s ∈ (0, 1)`.
pub fn classify_efficiency(m: &ScalabilityModel) -> Result<(EfficiencyCase, LimitValue)> {
    classify_efficiency_with(m, DEFAULT_EXPONENT_TOLERANCE)
}

pub fn classify_efficiency_with(
    m: &ScalabilityModel,
    tol: f64,
) -> Result<(EfficiencyCase, LimitValue)> {
    let (s, p) = guard_split(m)?;
    let a = s * m.f().coeff();
    let b = p * m.g().coeff();
    let c_h = m.h().coeff();
    let d = m.g().exponent() - m.f().exponent();
    let ah = m.h().exponent();

    let zero = LimitValue::Finite { value: 0.0, bound: Bound::LowerBound };
    let r = match cmp_tol(d, 1.0, tol) {
        Ordering::Less => (EfficiencyCase::A, zero),
        Ordering::Equal => match cmp_tol(ah, 1.0, tol) {
            Ordering::Less => (EfficiencyCase::B, zero),
            Ordering::Equal => (
                EfficiencyCase::C,
                LimitValue::Finite { value: b / (a + b / c_h), bound: Bound::LowerBound },
            ),
            Ordering::Greater => (
                EfficiencyCase::D,
                LimitValue::Finite { value: b / a, bound: Bound::LowerBound },
            ),
        },
        Ordering::Greater => match cmp_tol(ah, 1.0, tol) {
            Ordering::Less => (EfficiencyCase::E, zero),
            Ordering::Equal => (
                EfficiencyCase::F,
                LimitValue::Finite { value: c_h, bound: Bound::LowerBound },
            ),
            Ordering::Greater => {
                if cmp_tol(d, ah, tol) != Ordering::Less {
                    // upper-bounded by c_h·N^(α_h − 1) once c_h·N ≥ 1
                    (EfficiencyCase::H, LimitValue::Unbounded { growth_exponent: ah - 1.0 })
                } else {
                    (EfficiencyCase::G, LimitValue::Unbounded { growth_exponent: d - 1.0 })
                }
            }
        },
    };
    Ok(r)
}

/// Full classification: both cases, the scalability case, type label, and
/// limits. Requires `s ∈ (0, 1)`.
pub fn classify(m: &ScalabilityModel) -> Result<Classification> {
    classify_with(m, DEFAULT_EXPONENT_TOLERANCE)
}

pub fn classify_with(m: &ScalabilityModel, tol: f64) -> Result<Classification> {
    let (speedup_case, speedup_limit) = classify_speedup_with(m, tol)?;
    let (efficiency_case, efficiency_limit) = classify_efficiency_with(m, tol)?;

    let d = m.g().exponent() - m.f().exponent();
    let ah = m.h().exponent();
    let d0 = cmp_tol(d, 0.0, tol);
    let d1 = cmp_tol(d, 1.0, tol);
    let ah0 = cmp_tol(ah, 0.0, tol);
    let ah1 = cmp_tol(ah, 1.0, tol);
    let dah = cmp_tol(d, ah, tol);

    use Ordering::{Equal, Greater, Less};
    let (case, conditions): (ScalabilityCase, Vec<&str>) = match (d0, ah0) {
        (Less, _) => (ScalabilityCase::A, vec!["alpha_g - alpha_f < 0"]),
        (Equal, Greater) => (ScalabilityCase::B, vec!["0 = alpha_g - alpha_f < alpha_h"]),
        (Equal, _) => (ScalabilityCase::C, vec!["0 = alpha_g - alpha_f = alpha_h"]),
        (Greater, Equal | Less) => (ScalabilityCase::D, vec!["0 = alpha_h < alpha_g - alpha_f"]),
        (Greater, Greater) => match d1 {
            Less => {
                if dah != Less {
                    (
                        ScalabilityCase::EExtended,
                        vec!["0 < alpha_h <= alpha_g - alpha_f < 1"],
                    )
                } else {
                    (
                        ScalabilityCase::J,
                        vec!["0 < alpha_g - alpha_f < min{1, alpha_h}"],
                    )
                }
            }
            Equal => match ah1 {
                Less => (
                    ScalabilityCase::E,
                    vec!["0 < alpha_h < 1 <= alpha_g - alpha_f"],
                ),
                Equal => (ScalabilityCase::G, vec!["alpha_h = alpha_g - alpha_f = 1"]),
                Greater => (ScalabilityCase::K, vec!["1 = alpha_g - alpha_f < alpha_h"]),
            },
            Greater => match ah1 {
                Less => (
                    ScalabilityCase::E,
                    vec!["0 < alpha_h < 1 <= alpha_g - alpha_f"],
                ),
                Equal => (ScalabilityCase::H, vec!["1 = alpha_h < alpha_g - alpha_f"]),
                Greater => {
                    if dah != Less {
                        (ScalabilityCase::F, vec!["1 < alpha_h <= alpha_g - alpha_f"])
                    } else {
                        (ScalabilityCase::I, vec!["1 < alpha_g - alpha_f < alpha_h"])
                    }
                }
            },
        },
    };

    let type_label = match case {
        ScalabilityCase::A => "(1, 0)",
        ScalabilityCase::B => "(β_{s,f,g}, 0)",
        ScalabilityCase::C => "(β_{s,f,g,h}, 0)",
        ScalabilityCase::D => "(β_h, 0)",
        ScalabilityCase::E | ScalabilityCase::EExtended => "(∞_h, 0)",
        ScalabilityCase::F => "(∞_h, ∞_h)",
        ScalabilityCase::G => "(∞_h, γ_{s,f,g,h})",
        ScalabilityCase::H => "(∞_h, γ_h)",
        ScalabilityCase::I => "(∞_{f,g}, ∞_{f,g})",
        ScalabilityCase::J => "(∞_{f,g}, 0)",
        ScalabilityCase::K => "(∞_{f,g}, γ_{s,f,g})",
    }
    .to_string();

    let mut notes = Vec::new();
    if m.h().coeff() < 1.0 {
        notes.push(
            "c_h < 1: h(N) can fall below 1 (parallel execution inflating work); \
             finite-limit bound directions assume h(N) >= 1"
                .to_string(),
        );
    }

    Ok(Classification {
        speedup_case,
        efficiency_case,
        scalability_case: case,
        type_label,
        speedup_limit,
        efficiency_limit,
        conditions: conditions.into_iter().map(str::to_string).collect(),
        notes,
    })
}

/// Which quantity a growth verification probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthQuantity {
    Speedup,
    Efficiency,
}

/// Numeric cross-check of a classified limit.
///
/// For a finite limit the report carries the value at `N_probe`, its
/// relative deviation from the limit, and whether the approach direction
/// over `N_probe/4, N_probe/2, N_probe` is consistent with the bound flag.
/// For Θ(N^e) growth it carries the doubling ratio `Q(2·N_probe)/Q(N_probe)`
/// against `2^e`.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub quantity: GrowthQuantity,
    pub n_probe: u64,
    pub claimed: LimitValue,
    pub observed: f64,
    pub target: f64,
    pub relative_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approach_consistent: Option<bool>,
}

impl GrowthReport {
    /// Pass/fail against a caller-supplied relative tolerance.
    pub fn passes(&self, tol: f64) -> bool {
        self.relative_deviation <= tol
    }
}

/// Probe the model numerically against a claimed limit. `n_probe ≥ 1000`.
pub fn verify_growth(
    m: &ScalabilityModel,
    claimed: &LimitValue,
    n_probe: u64,
    quantity: GrowthQuantity,
) -> Result<GrowthReport> {
    if n_probe < 1_000 {
        return Err(Error::InvalidParameter(format!(
            "n_probe must be >= 1000, got {n_probe}"
        )));
    }
    let eval = |n: u64| -> Result<f64> {
        match quantity {
            GrowthQuantity::Speedup => m.speedup(n),
            GrowthQuantity::Efficiency => m.efficiency(n),
        }
    };

    match *claimed {
        LimitValue::Finite { value, bound } => {
            let q1 = eval(n_probe / 4)?;
            let q2 = eval(n_probe / 2)?;
            let q3 = eval(n_probe)?;
            let scale = if value > 0.0 { value } else { 1.0 };
            let deviation = (q3 - value).abs() / scale;
            let (d1, d2, d3) = (q1 - value, q2 - value, q3 - value);
            let shrinking = d1.abs() >= d2.abs() - 1e-15 && d2.abs() >= d3.abs() - 1e-15;
            let tiny = d3.abs() <= 1e-12 * scale;
            let side_ok = match bound {
                Bound::UpperBound => d3 <= 0.0 || tiny,
                Bound::LowerBound => d3 >= 0.0 || tiny,
                Bound::TwoSided | Bound::NotABound => true,
            };
            Ok(GrowthReport {
                quantity,
                n_probe,
                claimed: *claimed,
                observed: q3,
                target: value,
                relative_deviation: deviation,
                approach_consistent: Some((shrinking && side_ok) || tiny),
            })
        }
        LimitValue::Unbounded { growth_exponent } => {
            let lo = eval(n_probe)?;
            let hi = eval(2 * n_probe)?;
            let ratio = hi / lo;
            let target = 2f64.powf(growth_exponent);
            Ok(GrowthReport {
                quantity,
                n_probe,
                claimed: *claimed,
                observed: ratio,
                target,
                relative_deviation: (ratio - target).abs() / target,
                approach_consistent: None,
            })
        }
    }
}
