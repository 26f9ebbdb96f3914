//! Named presets for the classical speedup laws.
//!
//! Each preset is plain data: it builds an ordinary [`ScalabilityModel`]
//! so presets and hand-built models go through the identical evaluation
//! and classification paths.
//!
//! | preset               | parameters                          | scalability case            |
//! |----------------------|-------------------------------------|-----------------------------|
//! | `amdahl`             | c_f=c_g=c_h=1, α_f=α_g=0, α_h=1     | B_SC, β = 1/s               |
//! | `gustafson`          | c_f=c_g=c_h=1, α_f=0, α_g=α_h=1     | G_SC, γ = 1−s               |
//! | `sun_ni`             | amdahl/gustafson family over α_g    | B/G/H/J_SC by α_g           |
//! | `generalized_scaled` | sun_ni with α_g = 1/2               | J_SC                        |
//! | `scaled`             | c_h=α_h=1, f and g free             | A/B/G/H/J_SC by α_g−α_f     |

use crate::asymptotics::ScalabilityCase;
use crate::error::{Error, Result};
use crate::model::{PowerLaw, ScalabilityModel, WorkloadSplit};

fn strict_split(s: f64) -> Result<WorkloadSplit> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "law presets require s strictly inside (0, 1), got {s}"
        )));
    }
    WorkloadSplit::new(s)
}

/// Fixed workload, perfectly distributed: `S(N) = 1/(s + p/N)`.
pub fn amdahl(s: f64) -> Result<ScalabilityModel> {
    ScalabilityModel::new(strict_split(s)?, PowerLaw::unit(), PowerLaw::unit(), PowerLaw::identity())
}

/// Parallel workload grows linearly with N: `S(N) = (s + p·N)/(s + p)`.
pub fn gustafson(s: f64) -> Result<ScalabilityModel> {
    ScalabilityModel::new(
        strict_split(s)?,
        PowerLaw::unit(),
        PowerLaw::identity(),
        PowerLaw::identity(),
    )
}

/// Memory-bound family: parallel workload grows as `N^α_g`, perfect
/// distribution. `α_g = 0` is `amdahl`, `α_g = 1` is `gustafson`.
pub fn sun_ni(s: f64, alpha_g: f64) -> Result<ScalabilityModel> {
    ScalabilityModel::new(
        strict_split(s)?,
        PowerLaw::unit(),
        PowerLaw::new(1.0, alpha_g)?,
        PowerLaw::identity(),
    )
}

/// `sun_ni` with `α_g = 1/2`.
pub fn generalized_scaled(s: f64) -> Result<ScalabilityModel> {
    sun_ni(s, 0.5)
}

/// Both workloads scale by power functions, perfect distribution
/// (`c_h = α_h = 1`).
pub fn scaled_model(
    s: f64,
    c_f: f64,
    alpha_f: f64,
    c_g: f64,
    alpha_g: f64,
) -> Result<ScalabilityModel> {
    ScalabilityModel::new(
        strict_split(s)?,
        PowerLaw::new(c_f, alpha_f)?,
        PowerLaw::new(c_g, alpha_g)?,
        PowerLaw::identity(),
    )
}

/// Descriptor of a law preset, for listings and dispatch by name.
#[derive(Debug, Clone, Copy)]
pub struct PresetInfo {
    pub name: &'static str,
    pub summary: &'static str,
    /// Extra parameters beyond `s` that the preset takes.
    pub parameters: &'static [&'static str],
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo {
        name: "amdahl",
        summary: "fixed workload, perfectly distributed; speedup bounded by 1/s",
        parameters: &[],
    },
    PresetInfo {
        name: "gustafson",
        summary: "parallel workload linear in N; linear speedup, efficiency -> 1-s",
        parameters: &[],
    },
    PresetInfo {
        name: "sun_ni",
        summary: "parallel workload ~ N^alpha_g, perfectly distributed",
        parameters: &["alpha_g"],
    },
    PresetInfo {
        name: "generalized_scaled",
        summary: "sun_ni with alpha_g = 1/2; unbounded sublinear speedup",
        parameters: &[],
    },
    PresetInfo {
        name: "scaled",
        summary: "both workloads scale by power functions, h(N) = N",
        parameters: &["c_f", "alpha_f", "c_g", "alpha_g"],
    },
];

/// The scalability case a preset is expected to land in, derived from its
/// parameters independently of the classifier. Used by the self-test that
/// every preset classifies as documented.
pub fn expected_case(name: &str, m: &ScalabilityModel) -> Option<ScalabilityCase> {
    let d = m.g().exponent() - m.f().exponent();
    match name {
        "amdahl" => Some(ScalabilityCase::B),
        "gustafson" => Some(ScalabilityCase::G),
        "generalized_scaled" => Some(ScalabilityCase::J),
        "sun_ni" => Some(if d == 0.0 {
            ScalabilityCase::B
        } else if d == 1.0 {
            ScalabilityCase::G
        } else if d > 1.0 {
            ScalabilityCase::H
        } else {
            ScalabilityCase::J
        }),
        "scaled" => Some(if d < 0.0 {
            ScalabilityCase::A
        } else if d == 0.0 {
            ScalabilityCase::B
        } else if d == 1.0 {
            ScalabilityCase::G
        } else if d > 1.0 {
            ScalabilityCase::H
        } else {
            ScalabilityCase::J
        }),
        _ => None,
    }
}
