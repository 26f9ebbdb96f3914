//! Exact workload counts for LU decomposition without pivoting.
//!
//! Eliminating a `z × z` matrix performs, summed over outer iterations,
//!
//! ```text
//! ĝ(z) = Σ_{i=1}^{z−1} (z−i)·(z−i+1) = (z³ − z)/3
//! ```
//!
//! basic calculations. When the row loop is distributed over `N` units
//! with static ceiling scheduling, the serial-equivalent count becomes
//!
//! ```text
//! ĝ_reduced(z, N) = Σ_{i=1}^{z−1} ⌈(z−i)/N⌉·(z−i+1)
//! ```
//!
//! and the effective time-reduction factor is `ĥ(N, z₁) = ĝ(z)/ĝ_reduced(z, N)`
//! with `z = z₁·N`. [`g_reduced`] evaluates the sum blockwise — all `k` with
//! the same `⌈k/N⌉` are summed in closed form — so a row costs
//! `O(⌈(z−1)/N⌉)` block steps instead of an `O(z)` loop, which is what makes
//! `z ≈ 10¹¹` feasible.
//!
//! Everything here is exact 128-bit integer arithmetic; `z` is capped at
//! [`MAX_EXACT_Z`] so `z³` cannot overflow.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest matrix dimension whose cubed workload still fits the exact
/// integer arithmetic.
pub const MAX_EXACT_Z: u64 = 5_000_000_000_000;

/// An exact nonnegative calculation count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct WorkloadCount(u128);

impl WorkloadCount {
    pub fn value(&self) -> u128 {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        self.0 as f64
    }
}

fn guard_z(z: u64) -> Result<()> {
    if z == 0 {
        return Err(Error::InvalidParameter("z must be >= 1".into()));
    }
    if z > MAX_EXACT_Z {
        return Err(Error::WorkloadOverflow { z, max: MAX_EXACT_Z });
    }
    Ok(())
}

/// `ĝ(z) = (z³ − z)/3`, exactly.
pub fn g_hat(z: u64) -> Result<WorkloadCount> {
    guard_z(z)?;
    let z = z as u128;
    Ok(WorkloadCount((z * z * z - z) / 3))
}

/// The literal sum `Σ_{i=1}^{z−1} (z−i)·(z−i+1)`. Loop oracle for
/// [`g_hat`]; capped at `z ≤ 10⁶`.
pub fn g_hat_bruteforce(z: u64) -> Result<WorkloadCount> {
    guard_z(z)?;
    if z > 1_000_000 {
        return Err(Error::InvalidParameter(format!(
            "brute-force count is capped at z <= 1e6, got {z}"
        )));
    }
    let z = z as u128;
    let mut total = 0u128;
    for i in 1..z {
        total += (z - i) * (z - i + 1);
    }
    Ok(WorkloadCount(total))
}

/// `ĝ_reduced(z, N)` via the block closed form.
///
/// Substituting `k = z − i`, the sum is `Σ_{k=1}^{z−1} ⌈k/N⌉·(k+1)`. On the
/// block `k ∈ ((q−1)·N, q·N]` the ceiling is the constant `q`, and the inner
/// sum of `(k+1)` telescopes to `len·(lo + hi + 2)/2`.
pub fn g_reduced(z: u64, n: u64) -> Result<WorkloadCount> {
    guard_z(z)?;
    if n == 0 {
        return Err(Error::InvalidParameter("N must be >= 1".into()));
    }
    let z = z as u128;
    let n = n as u128;
    let top = z - 1;
    let mut total = 0u128;
    let mut q = 1u128;
    loop {
        let lo = (q - 1) * n + 1;
        if lo > top {
            break;
        }
        let hi = (q * n).min(top);
        let len = hi - lo + 1;
        total += q * (len * (lo + hi + 2) / 2);
        q += 1;
    }
    Ok(WorkloadCount(total))
}

/// The literal `O(z)` loop for `ĝ_reduced`; oracle for [`g_reduced`],
/// capped at `z ≤ 10⁶`.
pub fn g_reduced_naive(z: u64, n: u64) -> Result<WorkloadCount> {
    guard_z(z)?;
    if n == 0 {
        return Err(Error::InvalidParameter("N must be >= 1".into()));
    }
    if z > 1_000_000 {
        return Err(Error::InvalidParameter(format!(
            "naive reduced count is capped at z <= 1e6, got {z}"
        )));
    }
    let z = z as u128;
    let n = n as u128;
    let mut total = 0u128;
    for k in 1..z {
        total += k.div_ceil(n) * (k + 1);
    }
    Ok(WorkloadCount(total))
}

/// `ĥ(N, z₁)` as the exact pair `(ĝ(z), ĝ_reduced(z, N))` with `z = z₁·N`,
/// plus the double-precision quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HHat {
    pub numerator: WorkloadCount,
    pub denominator: WorkloadCount,
}

impl HHat {
    pub fn value(&self) -> f64 {
        self.numerator.as_f64() / self.denominator.as_f64()
    }
}

/// Time-reduction factor for the row-distributed elimination, `z₁ ≥ 2`.
pub fn h_hat(n: u64, z1: u64) -> Result<HHat> {
    if z1 < 2 {
        return Err(Error::InvalidParameter(format!("z1 must be >= 2, got {z1}")));
    }
    let z = z1
        .checked_mul(n)
        .ok_or(Error::WorkloadOverflow { z: u64::MAX, max: MAX_EXACT_Z })?;
    Ok(HHat { numerator: g_hat(z)?, denominator: g_reduced(z, n)? })
}

/// Normalized workload scaling `ḡ_{z₁}(N) = ĝ(z₁·N)/ĝ(z₁)`; `ḡ(1) = 1`
/// exactly.
pub fn g_bar(n: u64, z1: u64) -> Result<f64> {
    if z1 < 2 {
        return Err(Error::InvalidParameter(format!("z1 must be >= 2, got {z1}")));
    }
    let z = z1
        .checked_mul(n)
        .ok_or(Error::WorkloadOverflow { z: u64::MAX, max: MAX_EXACT_Z })?;
    if n == 1 {
        return Ok(1.0);
    }
    Ok(g_hat(z)?.as_f64() / g_hat(z1)?.as_f64())
}

/// Closed-form speedup for the variable-workload elimination with
/// `c_g = z₁³/(z₁³ − z₁)`:
///
/// ```text
/// S_{z₁}(N) = (s + p·c_g·N³) / (s + p·c_g·N²)
/// ```
///
/// `s ∈ [0, 1)`; `s = 0` yields exactly `N`.
pub fn lu_speedup_theoretical(s: f64, z1: u64, n: u64) -> Result<f64> {
    if !(0.0..1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!("s must lie in [0, 1), got {s}")));
    }
    if z1 < 2 {
        return Err(Error::InvalidParameter(format!("z1 must be >= 2, got {z1}")));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("N must be >= 1".into()));
    }
    if s == 0.0 {
        return Ok(n as f64);
    }
    let z1 = z1 as f64;
    let c_g = z1.powi(3) / (z1.powi(3) - z1);
    let p = 1.0 - s;
    let nf = n as f64;
    Ok((s + p * c_g * nf.powi(3)) / (s + p * c_g * nf.powi(2)))
}

/// One row of the workload table: `N = 2^i`, `z = z₁·N`, the exact counts,
/// and the reduction factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleRow {
    pub i: u32,
    pub n: u64,
    pub z: u64,
    #[serde(serialize_with = "ser_u128")]
    pub g_hat: u128,
    #[serde(serialize_with = "ser_u128")]
    pub g_reduced: u128,
    pub h_hat: f64,
    pub h_hat_over_n: f64,
}

fn ser_u128<S: serde::Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Emit one table row per `i ∈ 1..=i_max` with `N = 2^i`, `z = z₁·N`.
pub fn emit_table(z1: u64, i_max: u32) -> Result<Vec<OracleRow>> {
    if z1 < 2 {
        return Err(Error::InvalidParameter(format!("z1 must be >= 2, got {z1}")));
    }
    if i_max == 0 || i_max > 40 {
        return Err(Error::InvalidParameter(format!("i_max must lie in 1..=40, got {i_max}")));
    }
    // reject up front if the last row would overflow
    let max_z = z1
        .checked_mul(1u64 << i_max)
        .ok_or(Error::WorkloadOverflow { z: u64::MAX, max: MAX_EXACT_Z })?;
    guard_z(max_z)?;

    (1..=i_max)
        .map(|i| {
            let n = 1u64 << i;
            let z = z1 * n;
            let h = h_hat(n, z1)?;
            Ok(OracleRow {
                i,
                n,
                z,
                g_hat: h.numerator.value(),
                g_reduced: h.denominator.value(),
                h_hat: h.value(),
                h_hat_over_n: h.value() / n as f64,
            })
        })
        .collect()
}

/// Render rows as CSV. Counts are exact integers; the ratio columns print
/// with six significant digits.
pub fn table_csv(rows: &[OracleRow]) -> String {
    let mut out = String::from("i,N,z,g_hat,g_reduced,h_hat,h_hat_over_N\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.i,
            r.n,
            r.z,
            r.g_hat,
            r.g_reduced,
            format_g6(r.h_hat),
            format_g6(r.h_hat_over_n)
        ));
    }
    out
}

/// Format with six significant digits, choosing fixed or scientific
/// notation the way C's `%g` does (scientific when the exponent is below
/// −4 or at least 6), trailing zeros trimmed.
pub fn format_g6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.5e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let e: i32 = exp.parse().expect("numeric exponent");
    if !(-4..6).contains(&e) {
        let m = trim_trailing_zeros(mantissa);
        let sign = if e < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", e.abs())
    } else {
        let dp = (5 - e).max(0) as usize;
        trim_trailing_zeros(&format!("{x:.dp$}"))
    }
}

fn trim_trailing_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
