//! Scalability analysis for parallel programs.
//!
//! The crate models a workload as a sequential fraction `s` plus a
//! parallelizable fraction `p = 1 − s`, scaled by power functions of the
//! worker count, and provides:
//!
//! - closed-form speedup/efficiency evaluation, including additive
//!   parallelization overhead ([`model`], [`overhead`]);
//! - asymptotic classification into speedup, efficiency, and scalability
//!   cases with verified limit values and growth orders ([`asymptotics`]);
//! - the classical laws as parameter presets ([`laws`]);
//! - overhead-aware optimal worker-count search ([`overhead`]);
//! - parameter estimation from measured timings ([`estimate`]);
//! - exact combinatorial workload counts for pivotless LU decomposition
//!   ([`oracle`]);
//! - a desk-scale benchmark harness with CSV/SVG reports ([`bench`],
//!   [`report`]).
//!
//! With the default `parallel` feature the harness and grid scans use a
//! rayon pool sized to the requested worker count; without it everything
//! runs sequentially and only single-worker measurements are accepted.
//!
//! ```
//! use parascale::asymptotics::{classify, ScalabilityCase};
//! use parascale::laws;
//!
//! let m = laws::amdahl(0.023595)?;
//! assert!((m.speedup(128)? - 32.027504).abs() < 1e-6);
//!
//! let c = classify(&m)?;
//! assert_eq!(c.scalability_case, ScalabilityCase::B);
//! // speedup is bounded by 1/s ≈ 42.4, efficiency dies out
//! # Ok::<(), parascale::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod asymptotics;
pub mod bench;
pub mod error;
pub mod estimate;
pub mod exec;
pub mod laws;
pub mod model;
pub mod oracle;
pub mod overhead;
pub mod report;

pub use error::{Error, Result};
pub use model::{GeneralModel, PowerLaw, ScalabilityModel, WorkloadSplit};
