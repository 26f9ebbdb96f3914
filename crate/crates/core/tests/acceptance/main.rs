//! Acceptance suite: every check prints one PASS line with its runtime
//! and enforces both the stated numeric tolerance and its runtime budget.
//!
//! Numbered overview:
//!
//!  1. fixed-workload theoretical table (s = 0.023595) to ±1e-6
//!  2. variable-workload theoretical table (s = 0.01, z1 = 100) to ±1e-5
//!  3. exact LU workload tables at six significant figures
//!  4. law presets classify to their documented cases and limit formulas
//!  5. closed forms vs. brute-force loops, exact integer equality
//!  6. classified growth orders and bound directions verified numerically
//!  7. shifted polynomial overheads satisfy the five overhead requirements
//!  8. estimation round-trip recovers (c_h, alpha_h) from noiseless timings
//!  9. harness methodology: correctness gates and derived-column soundness

mod tables;

use std::time::Instant;

use parascale::asymptotics::{
    classify, verify_growth, Bound, EfficiencyCase, GrowthQuantity, LimitValue, ScalabilityCase,
    SpeedupCase,
};
use parascale::bench::{derive_rows, multiply_square, LuBatch};
use parascale::estimate::{infer_h, TimingRun};
use parascale::exec::Workers;
use parascale::laws;
use parascale::model::{PowerLaw, ScalabilityModel, WorkloadSplit};
use parascale::oracle;
use parascale::overhead::{check_flatt_kennedy, optimal_n, Objective, OverheadPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn finish(name: &str, t0: Instant, budget_ms: u128) {
    let elapsed = t0.elapsed();
    println!(
        "acceptance {name}: PASS ({:.2} ms, budget {budget_ms} ms)",
        elapsed.as_secs_f64() * 1e3
    );
    assert!(
        elapsed.as_millis() < budget_ms,
        "{name} exceeded its {budget_ms} ms budget: {elapsed:?}"
    );
}

fn model(s: f64, cf: f64, af: f64, cg: f64, ag: f64, ch: f64, ah: f64) -> ScalabilityModel {
    ScalabilityModel::new(
        WorkloadSplit::new(s).unwrap(),
        PowerLaw::new(cf, af).unwrap(),
        PowerLaw::new(cg, ag).unwrap(),
        PowerLaw::new(ch, ah).unwrap(),
    )
    .unwrap()
}

#[test]
fn a1_matmul_theoretical_table() {
    let m = laws::amdahl(0.023595).unwrap();
    let t0 = Instant::now();
    let computed: Vec<(f64, f64)> = tables::MATMUL_THEORETICAL
        .iter()
        .map(|&(n, _, _)| (m.speedup(n).unwrap(), m.efficiency(n).unwrap()))
        .collect();
    for (&(n, s_ref, e_ref), &(s, e)) in tables::MATMUL_THEORETICAL.iter().zip(&computed) {
        assert!((s - s_ref).abs() <= 1e-6, "S({n}) = {s} vs {s_ref}");
        assert!((e - e_ref).abs() <= 1e-6, "E({n}) = {e} vs {e_ref}");
    }
    finish("1/9 matmul-theoretical-table", t0, 1);
}

#[test]
fn a2_lu_theoretical_table() {
    let t0 = Instant::now();
    let computed: Vec<f64> = tables::LU_THEORETICAL
        .iter()
        .map(|&(n, _, _)| oracle::lu_speedup_theoretical(0.01, 100, n).unwrap())
        .collect();
    for (&(n, s_ref, e_ref), &s) in tables::LU_THEORETICAL.iter().zip(&computed) {
        assert!((s - s_ref).abs() <= 1e-5, "S({n}) = {s} vs {s_ref}");
        assert!((s / n as f64 - e_ref).abs() <= 1e-5, "E({n}) vs {e_ref}");
    }
    finish("2/9 lu-theoretical-table", t0, 1);
}

#[test]
fn a3_oracle_tables() {
    let t0 = Instant::now();
    // one unit in the sixth significant digit, with a little slack for the
    // reference values' own rounding
    let close6 = |mine: f64, reference: f64| -> bool {
        let ulp = 10f64.powi(reference.abs().log10().floor() as i32 - 5);
        (mine - reference).abs() <= 0.75 * ulp
    };
    for (z1, table) in [
        (100u64, &tables::LU_COUNTS_Z1_100),
        (1_000, &tables::LU_COUNTS_Z1_1000),
        (10_000, &tables::LU_COUNTS_Z1_10000),
        (100_000, &tables::LU_COUNTS_Z1_100000),
    ] {
        let rows = oracle::emit_table(z1, 20).unwrap();
        assert_eq!(rows.len(), 20);
        for (row, &(i, g_ref, gr_ref, h_ref, hn_ref)) in rows.iter().zip(table.iter()) {
            assert_eq!(row.i, i);
            assert!(close6(row.g_hat as f64, g_ref), "z1={z1} i={i} g_hat {}", row.g_hat);
            assert!(close6(row.g_reduced as f64, gr_ref), "z1={z1} i={i} g_reduced");
            assert!(close6(row.h_hat, h_ref), "z1={z1} i={i} h_hat {} vs {h_ref}", row.h_hat);
            assert!(
                close6(row.h_hat_over_n, hn_ref),
                "z1={z1} i={i} h/N {} vs {hn_ref}",
                row.h_hat_over_n
            );
        }
    }
    finish("3/9 oracle-tables", t0, 5_000);
}

#[test]
fn a4_law_classification() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let finite = |limit: &LimitValue| -> f64 {
        match limit {
            LimitValue::Finite { value, .. } => *value,
            LimitValue::Unbounded { .. } => panic!("expected finite limit"),
        }
    };
    for _ in 0..20 {
        let s: f64 = rng.random_range(0.02..0.98);
        let p = 1.0 - s;

        let c = classify(&laws::amdahl(s).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::B);
        assert!((finite(&c.speedup_limit) - 1.0 / s).abs() <= 1e-9 / s);

        let c = classify(&laws::gustafson(s).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::G);
        assert!((finite(&c.efficiency_limit) - (1.0 - s)).abs() <= 1e-12);

        // the four memory-bound regimes over alpha_g
        let c = classify(&laws::sun_ni(s, 0.0).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::B);
        let c = classify(&laws::sun_ni(s, 1.0).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::G);
        let c = classify(&laws::sun_ni(s, rng.random_range(0.05..0.95)).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::J);
        let c = classify(&laws::sun_ni(s, rng.random_range(1.05..4.0)).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::H);
        assert_eq!(finite(&c.efficiency_limit), 1.0);

        let c = classify(&laws::generalized_scaled(s).unwrap()).unwrap();
        assert_eq!(c.scalability_case, ScalabilityCase::J);

        // the five scaled-model regimes over alpha_g - alpha_f
        let cf: f64 = rng.random_range(0.5..2.0);
        let cg: f64 = rng.random_range(0.5..2.0);
        let af: f64 = rng.random_range(0.2..1.5);
        let scaled = |ag: f64| classify(&laws::scaled_model(s, cf, af, cg, ag).unwrap()).unwrap();
        assert_eq!(scaled(rng.random_range(0.0..af - 0.1)).scalability_case, ScalabilityCase::A);
        let c = scaled(af);
        assert_eq!(c.scalability_case, ScalabilityCase::B);
        assert!(
            (finite(&c.speedup_limit) - (s * cf + p * cg) / (s * cf)).abs() <= 1e-9,
            "scaled beta"
        );
        let c = scaled(af + 1.0);
        assert_eq!(c.scalability_case, ScalabilityCase::G);
        assert!((finite(&c.efficiency_limit) - p * cg / (s * cf + p * cg)).abs() <= 1e-12);
        let c = scaled(af + rng.random_range(1.1..3.0));
        assert_eq!(c.scalability_case, ScalabilityCase::H);
        assert_eq!(finite(&c.efficiency_limit), 1.0);
        assert_eq!(scaled(af + rng.random_range(0.1..0.9)).scalability_case, ScalabilityCase::J);
    }
    finish("4/9 law-classification", t0, 1_000);
}

#[test]
fn a5_oracle_equivalence() {
    let t0 = Instant::now();
    for z in 1..=2000u64 {
        assert_eq!(oracle::g_hat(z).unwrap(), oracle::g_hat_bruteforce(z).unwrap(), "z = {z}");
    }
    for z in 1..=10_000u64 {
        for n in [1, 2, 3, 5, 7, 16, z.saturating_sub(1).max(1), z] {
            assert_eq!(
                oracle::g_reduced(z, n).unwrap(),
                oracle::g_reduced_naive(z, n).unwrap(),
                "z = {z}, n = {n}"
            );
        }
    }
    finish("5/9 oracle-equivalence", t0, 30_000);
}

/// The (speedup, efficiency) case pairs admissible for each scalability
/// case. D carries A_E in addition to the documented pair because its
/// region includes 0 < alpha_g - alpha_f < 1 where efficiency dies before
/// the workload difference reaches one.
fn allowed_pairs(case: ScalabilityCase) -> &'static [(SpeedupCase, EfficiencyCase)] {
    use EfficiencyCase as E;
    use SpeedupCase as S;
    match case {
        ScalabilityCase::A => &[(S::C, E::A)],
        ScalabilityCase::B => &[(S::A, E::A)],
        ScalabilityCase::C => &[(S::B, E::A)],
        ScalabilityCase::D => &[(S::F, E::E), (S::F, E::B), (S::F, E::A)],
        ScalabilityCase::E => &[(S::D, E::E), (S::D, E::B)],
        ScalabilityCase::EExtended => &[(S::D, E::A)],
        ScalabilityCase::F => &[(S::D, E::H)],
        ScalabilityCase::G => &[(S::D, E::C)],
        ScalabilityCase::H => &[(S::D, E::F)],
        ScalabilityCase::I => &[(S::E, E::G)],
        ScalabilityCase::J => &[(S::E, E::A)],
        ScalabilityCase::K => &[(S::E, E::D)],
    }
}

/// Stratified sampler for criterion 6. Exponent differences either sit
/// exactly on a case boundary or keep a healthy distance from it, so the
/// probe at N = 1e6 is inside the asymptotic regime; coefficients stay in
/// a moderate box for the same reason, with c_h >= 1 (the domain where
/// the documented bound directions are meaningful).
fn sample_stratified(stratum: usize, rng: &mut ChaCha8Rng) -> (ScalabilityModel, ScalabilityCase) {
    let s: f64 = rng.random_range(0.3..0.7);
    let cf: f64 = rng.random_range(0.8..1.25);
    let cg: f64 = rng.random_range(0.8..1.25);
    let ch: f64 = rng.random_range(1.0..2.0);
    let base: f64 = rng.random_range(0.0..1.5);

    let (d, ah, case): (f64, f64, ScalabilityCase) = match stratum {
        0 => {
            let d = -rng.random_range(0.5..2.0);
            let ah =
                if rng.random_bool(0.3) { 0.0 } else { rng.random_range(0.5..2.0) };
            (d, ah, ScalabilityCase::A)
        }
        1 => (0.0, rng.random_range(0.5..2.5), ScalabilityCase::B),
        2 => (0.0, 0.0, ScalabilityCase::C),
        3 => {
            let d = match rng.random_range(0..3u32) {
                0 => 0.5,
                1 => 1.0,
                _ => rng.random_range(1.5..2.5),
            };
            (d, 0.0, ScalabilityCase::D)
        }
        4 => {
            let d = if rng.random_bool(0.5) { 1.0 } else { rng.random_range(1.5..3.0) };
            (d, rng.random_range(0.4..0.55), ScalabilityCase::E)
        }
        5 => {
            let d = rng.random_range(0.4..0.55);
            (d, d, ScalabilityCase::EExtended)
        }
        6 => {
            let ah = rng.random_range(1.4..1.8);
            let d = if rng.random_bool(0.5) { ah } else { ah + rng.random_range(0.4..2.0) };
            (d, ah, ScalabilityCase::F)
        }
        7 => (1.0, 1.0, ScalabilityCase::G),
        8 => (rng.random_range(1.5..3.0), 1.0, ScalabilityCase::H),
        9 => {
            let d = rng.random_range(1.4..2.0);
            (d, d + rng.random_range(0.4..1.4), ScalabilityCase::I)
        }
        10 => {
            let d = rng.random_range(0.4..0.55);
            let ah = if rng.random_bool(0.5) { 1.0 } else { rng.random_range(1.4..2.5) };
            (d, ah, ScalabilityCase::J)
        }
        _ => (1.0, rng.random_range(1.5..3.0), ScalabilityCase::K),
    };

    let af = base + (-d).max(0.0); // keep alpha_g = alpha_f + d nonnegative
    (model(s, cf, af, cg, af + d, ch, ah), case)
}

#[test]
fn a6_growth_verification() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let grid: Vec<u64> = (1..=17).map(|k| 1u64 << k).collect();

    for i in 0..1000usize {
        let (m, expected) = sample_stratified(i % 12, &mut rng);
        let c = classify(&m).unwrap();
        assert_eq!(c.scalability_case, expected, "stratum mismatch for {m:?}");
        assert!(
            allowed_pairs(c.scalability_case)
                .contains(&(c.speedup_case, c.efficiency_case)),
            "inconsistent pair {:?}/{:?} for {:?}",
            c.speedup_case,
            c.efficiency_case,
            c.scalability_case
        );

        // growth orders / limit values at the probe
        for (limit, quantity) in [
            (&c.speedup_limit, GrowthQuantity::Speedup),
            (&c.efficiency_limit, GrowthQuantity::Efficiency),
        ] {
            let r = verify_growth(&m, limit, 1_000_000, quantity).unwrap();
            assert!(
                r.passes(1e-2),
                "{quantity:?} deviation {} for {m:?} ({:?})",
                r.relative_deviation,
                c.scalability_case
            );
        }

        // bound directions on the grid
        let (a, b) = (
            m.split().sequential() * m.f().coeff(),
            m.split().parallelizable() * m.g().coeff(),
        );
        let ch = m.h().coeff();
        let ah = m.h().exponent();
        let d = m.g().exponent() - m.f().exponent();
        let speedups: Vec<f64> = grid.iter().map(|&n| m.speedup(n).unwrap()).collect();
        let efficiencies: Vec<f64> = grid.iter().map(|&n| m.efficiency(n).unwrap()).collect();

        if let LimitValue::Finite { value, bound } = c.speedup_limit {
            match c.speedup_case {
                SpeedupCase::A | SpeedupCase::B => {
                    assert_eq!(bound, Bound::UpperBound);
                    for (&n, &s) in grid.iter().zip(&speedups) {
                        assert!(s <= value * (1.0 + 1e-9), "S({n}) = {s} above {value}");
                    }
                }
                SpeedupCase::C => {
                    for (&n, &s) in grid.iter().zip(&speedups) {
                        assert!(s >= value - 1e-9, "S({n}) = {s} below {value}");
                    }
                }
                SpeedupCase::F => {
                    // the limit is approached monotonically
                    let devs: Vec<f64> = speedups.iter().map(|s| (s - value).abs()).collect();
                    for w in devs.windows(2) {
                        assert!(w[1] <= w[0] + 1e-12, "F_S deviation grew: {w:?}");
                    }
                }
                _ => unreachable!("unbounded cases carry no finite limit"),
            }
        }

        if let LimitValue::Finite { value, .. } = c.efficiency_limit {
            match c.efficiency_case {
                EfficiencyCase::A | EfficiencyCase::B | EfficiencyCase::E => {
                    for &e in &efficiencies {
                        assert!(e >= 0.0);
                    }
                }
                EfficiencyCase::C => {
                    for (&n, &e) in grid.iter().zip(&efficiencies) {
                        assert!(e >= value * (1.0 - 1e-12), "E({n}) below the C_E limit");
                    }
                }
                // For D_E and F_E the limit can be approached from either
                // side depending on the parameters; what always holds is
                // that any undershoot sits below the model's own decaying
                // subleading term.
                EfficiencyCase::D => {
                    for (&n, &e) in grid.iter().zip(&efficiencies) {
                        let envelope = (b * b / (ch * a * a)) * (n as f64).powf(1.0 - ah);
                        assert!(e >= value - envelope * (1.0 + 1e-9), "D_E undershoot at {n}");
                    }
                }
                EfficiencyCase::F => {
                    for (&n, &e) in grid.iter().zip(&efficiencies) {
                        let envelope = (a * ch * ch / b) * (n as f64).powf(1.0 - d);
                        assert!(e >= value - envelope * (1.0 + 1e-9), "F_E undershoot at {n}");
                    }
                }
                _ => unreachable!("unbounded cases carry no finite limit"),
            }
        } else if c.efficiency_case == EfficiencyCase::H {
            // superlinear efficiency is capped by c_h·N^(alpha_h - 1) once
            // c_h·N >= 1 (here always, since c_h >= 1)
            for (&n, &e) in grid.iter().zip(&efficiencies) {
                let cap = ch * (n as f64).powf(ah - 1.0);
                assert!(e <= cap * (1.0 + 1e-9), "H_E cap exceeded at {n}");
            }
        }
    }
    finish("6/9 growth-verification", t0, 30_000);
}

#[test]
fn a7_overhead_lemma() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let c_z: f64 = rng.random_range(1e-3..5.0);
        let alpha_z: f64 = rng.random_range(1e-3..5.0);
        let z = OverheadPoly::new(c_z, alpha_z, true).unwrap();
        let r = check_flatt_kennedy(&z, 1 << 20).unwrap();
        assert!(r.all_pass(), "c_z={c_z} alpha_z={alpha_z}: {r:?}");
        let n1 = r.n_one.unwrap();
        let z_at_n1 = c_z * n1.powf(alpha_z) - c_z;
        assert!((z_at_n1 - 1.0).abs() < 1e-9, "z(N1) = {z_at_n1}");
    }

    // the fixed-workload example with linear shifted overhead: exhaustive
    // scan against an independent brute-force loop
    let m = ScalabilityModel::new(
        WorkloadSplit::new(0.0).unwrap(),
        PowerLaw::unit(),
        PowerLaw::unit(),
        PowerLaw::identity(),
    )
    .unwrap();
    let z = OverheadPoly::new(0.01, 1.0, true).unwrap();
    let (n_star, value) = optimal_n(&m, &z, Objective::Time, 1000).unwrap();
    let brute = (1..=1000u64)
        .map(|n| (n, 1.0 / n as f64 + 0.01 * n as f64 - 0.01))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .unwrap();
    assert_eq!(n_star, 10);
    assert_eq!(n_star, brute.0);
    assert!((value - 0.19).abs() < 1e-12);
    finish("7/9 overhead-lemma", t0, 5_000);
}

#[test]
fn a8_estimation_round_trip() {
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let ah: f64 = rng.random_range(0.0..2.5);
        let ag: f64 = ah + rng.random_range(0.0..2.0);
        let af: f64 = rng.random_range(0.0..(ag - ah + 0.5).min(2.0));
        let m = model(
            rng.random_range(0.1..0.9),
            rng.random_range(0.5..2.0),
            af,
            rng.random_range(0.5..2.0),
            ag,
            rng.random_range(0.5..2.0),
            ah,
        );
        // noiseless synthetic timings: one unit executes everything
        // serially, N units follow the closed form
        let mut samples = vec![(1u64, m.serial_time(1))];
        for k in 1..=10 {
            let n = 1u64 << k;
            samples.push((n, m.parallel_time(n).unwrap()));
        }
        let run = TimingRun::new(samples, None).unwrap();
        let inf = infer_h(&run, &m.split(), &m.f(), &m.g()).unwrap();
        assert!(inf.rejected.is_empty());
        let (c_hat, a_hat) = (inf.fit.law.coeff(), inf.fit.law.exponent());
        assert!(
            (c_hat - m.h().coeff()).abs() <= 1e-6 * m.h().coeff(),
            "c_h {c_hat} vs {}",
            m.h().coeff()
        );
        assert!(
            (a_hat - ah).abs() <= 1e-6 * ah.max(1.0),
            "alpha_h {a_hat} vs {ah}"
        );
    }
    finish("8/9 estimation-round-trip", t0, 5_000);
}

#[test]
fn a9_bench_methodology() {
    let t0 = Instant::now();
    #[cfg(feature = "parallel")]
    let cores = std::thread::available_parallelism().map(|c| c.get()).unwrap_or(1);

    // (a) multiply-back correctness at z = 8
    let batch = LuBatch::generate(8, 2, (1, 1000), 90);
    let originals: Vec<Vec<f64>> = (0..2).map(|d| batch.matrix_u(d)).collect();
    let mut work = batch.clone();
    work.decompose(&Workers::new(1).unwrap());
    for (d, original) in originals.iter().enumerate() {
        let product = multiply_square(&work.matrix_l(d), &work.matrix_u(d), 8);
        let worst = product
            .iter()
            .zip(original)
            .map(|(x, y)| (x - y).abs() / y.abs().max(1.0))
            .fold(0.0f64, f64::max);
        assert!(worst <= 1e-6, "multiply-back error {worst}");
    }

    // (b) distributed and sequential elimination agree bitwise on 50 small
    // matrices per worker count
    #[cfg(feature = "parallel")]
    let counts: &[usize] = &[1, 2, 4];
    #[cfg(not(feature = "parallel"))]
    let counts: &[usize] = &[1];
    for &workers in counts {
        let team = Workers::new(workers).unwrap();
        for seed in 0..50u64 {
            let z = 2 + (seed as usize * 7) % 63;
            let batch = LuBatch::generate(z, 1, (1, 1000), 1000 + seed);
            let mut par = batch.clone();
            let mut seq = batch;
            par.decompose(&team);
            seq.decompose_seq();
            assert!(par == seq, "bitwise mismatch at z={z}, workers={workers}");
        }
    }

    // (c) measured speedup at two workers on a multicore host
    #[cfg(feature = "parallel")]
    {
        let mut cfg = parascale::bench::BenchConfig::new(parascale::bench::Experiment::LuVariable);
        cfg.lu = parascale::bench::LuParams { z1: 128, m: 8, s_floor: 0.01 };
        cfg.thread_counts = vec![1, 2, 4];
        cfg.repetitions = 3;
        let res = parascale::bench::run_lu(&cfg).unwrap();
        assert_eq!(res.rows.len(), 3);
        for row in &res.rows {
            assert!(row.s_comp > 0.0 && row.e_comp > 0.0);
        }
        let s2 = res.rows[1].s_comp;
        if cores >= 2 {
            assert!(s2 > 1.1, "S_comp(2) = {s2} on a {cores}-core host");
        } else {
            println!(
                "acceptance 9/9 note: single-core host, S_comp(2) = {s2:.3}; \
                 the > 1.1 check needs >= 2 cores and is skipped"
            );
        }
        // report round-trip on real data
        let csv = parascale::report::result_to_csv(&res).unwrap();
        let doc = parascale::report::parse_csv(&csv).unwrap();
        assert_eq!(doc.to_csv(), csv);
    }

    // (d) the derivation path reproduces the published derived columns
    // from the published raw times (their raw times are printed rounded
    // to whole milliseconds, which perturbs the sixth decimal by up to
    // ~1.3e-6, hence the tolerance)
    let raw: Vec<(usize, f64, f64)> = tables::MATMUL_RAW
        .iter()
        .map(|&(n, t, _, _)| (n as usize, tables::MATMUL_RAW_T1, t))
        .collect();
    let rows = derive_rows(&raw, |_| f64::NAN);
    for (row, &(n, _, s_ref, e_ref)) in rows.iter().zip(tables::MATMUL_RAW.iter()) {
        assert!((row.s_comp - s_ref).abs() <= 1.5e-6, "S_comp({n}) {} vs {s_ref}", row.s_comp);
        assert!((row.e_comp - e_ref).abs() <= 1.5e-6, "E_comp({n}) {} vs {e_ref}", row.e_comp);
    }
    let raw: Vec<(usize, f64, f64)> = tables::LU_RAW
        .iter()
        .map(|&(n, t1, tn, _, _)| (n as usize, t1, tn))
        .collect();
    let rows = derive_rows(&raw, |_| f64::NAN);
    for (row, &(n, _, _, s_ref, e_ref)) in rows.iter().zip(tables::LU_RAW.iter()) {
        assert!((row.s_comp - s_ref).abs() <= 1.5e-6, "S_comp({n}) {} vs {s_ref}", row.s_comp);
        assert!((row.e_comp - e_ref).abs() <= 1.5e-6, "E_comp({n}) {} vs {e_ref}", row.e_comp);
    }

    finish("9/9 bench-methodology", t0, 120_000);
}
