//! Command-line front end: evaluate, classify, list the law presets, fit
//! timings, emit the exact LU workload tables, run the benchmark harness,
//! and search for optimal worker counts.
//!
//! Structured output is JSON (versioned with `"schema": 1`), tabular
//! output is CSV, charts are SVG. All timing values are milliseconds.
//! Exit codes: 0 success, 1 validation error (flags, files, parameter
//! domains), 2 computation error.

use std::fmt::Display;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parascale::asymptotics::{classify, verify_growth, GrowthQuantity};
use parascale::bench::{run_lu, run_matmul, BenchConfig, Experiment};
use parascale::error::Error as CoreError;
use parascale::estimate::{
    estimate_s, fit_power_law, infer_h, parse_split_csv, parse_timing_csv, FitWeighting,
    TimingRun,
};
use parascale::laws;
use parascale::model::ScalabilityModel;
use parascale::oracle;
use parascale::overhead::{check_flatt_kennedy, optimal_n, Objective, OverheadPoly};
use parascale::report;

const MODEL_SCHEMA_HELP: &str = "Model files are JSON documents \
{\"s\": .., \"f\": {\"c\": .., \"alpha\": ..}, \"g\": {..}, \"h\": {..}} with unknown fields \
rejected; an optional \"schema\" field must equal 1.";

#[derive(Parser)]
#[command(
    name = "parascale",
    version,
    about = "Speedup, efficiency, and scalability analysis for parallel programs",
    long_about = "Speedup, efficiency, and scalability analysis for parallel programs.\n\n\
        Structured output is JSON with a \"schema\": 1 version field; tabular output is CSV; \
        charts are SVG. All timing inputs and outputs are in milliseconds.\n\n\
        Exit codes: 0 success, 1 validation error, 2 computation error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate S(N), E(N), and the time components of a model
    #[command(long_about = format!(
        "Evaluate S(N), E(N), and the time components of a model.\n\n{MODEL_SCHEMA_HELP}\n\n\
         Times are in the model's own normalized units. N = 1 is only evaluable when c_h = 1 \
         (and, with an overhead, z(1) = 0)."
    ))]
    Eval {
        /// Model JSON file
        #[arg(long)]
        model: PathBuf,
        /// Worker count to evaluate at
        #[arg(long)]
        n: u64,
        /// Additive overhead: inline JSON {"c_z":..,"alpha_z":..,"shifted":..} or a file path
        #[arg(long)]
        overhead: Option<String>,
    },
    /// Classify a model's asymptotic scalability
    #[command(long_about = format!(
        "Classify a model into its speedup, efficiency, and scalability cases, with limit \
         values and the matched conditions, as JSON.\n\n{MODEL_SCHEMA_HELP}\n\nDegenerate \
         splits (s = 0 or s = 1) yield a flagged report instead of a case assignment."
    ))]
    Classify {
        #[arg(long)]
        model: PathBuf,
        /// Numerically verify the classified limits
        #[arg(long)]
        verify: bool,
        /// Probe point for --verify (doubling-ratio test for growth orders)
        #[arg(long, default_value_t = 1_000_000)]
        nprobe: u64,
    },
    /// Print just the speedup and efficiency limit values of a model
    Limits {
        #[arg(long)]
        model: PathBuf,
    },
    /// Work with the named law presets
    Laws {
        #[command(subcommand)]
        command: LawsCommand,
    },
    /// Fit model parameters from measured timings
    #[command(long_about = format!(
        "Fit model parameters from measured timings.\n\n\
         The timing CSV has header N,t_total with times in milliseconds; the optional split \
         file has header t_seq,t_par and one row, also milliseconds. Without --model the \
         (N, t_total) curve is fitted by a power law. With --model (s, f, g known) the \
         per-N reduction values h are inverted out of the times and fitted, and the full \
         model JSON with the fitted h is emitted.\n\n{MODEL_SCHEMA_HELP}"
    ))]
    Fit {
        /// Timing CSV (header N,t_total; milliseconds)
        #[arg(long)]
        csv: PathBuf,
        /// Single-row t_seq,t_par split CSV measured at N = 1 (milliseconds)
        #[arg(long)]
        split: Option<PathBuf>,
        /// Base model whose h should be inferred from the timings
        #[arg(long)]
        model: Option<PathBuf>,
        /// Floor for the estimated sequential fraction (recorded in output)
        #[arg(long)]
        s_floor: Option<f64>,
    },
    /// Emit the exact LU workload tables as CSV
    #[command(long_about = "Emit the exact LU workload table as CSV: one row per \
        i in 1..=imax with N = 2^i, z = z1*N, the exact counts g_hat and g_reduced, and the \
        reduction factor h_hat = g_hat/g_reduced with h_hat/N.")]
    Oracle {
        /// Matrix rows per worker
        #[arg(long)]
        z1: u64,
        /// Last table row (N = 2^imax)
        #[arg(long)]
        imax: u32,
    },
    /// Run a benchmark experiment and write the CSV report plus SVG chart
    #[command(long_about = "Run a benchmark experiment and write the CSV report (with the \
        environment record as #-comments; milliseconds) plus an SVG speedup chart next to it. \
        The config is a JSON document {\"experiment\", \"thread_counts\", \"matmul\", \"lu\", \
        \"seed\", \"value_range\", \"repetitions\"}; omitted fields take the desk-scale \
        defaults.")]
    Bench {
        /// Which experiment to run
        experiment: BenchKind,
        /// Benchmark config JSON file (defaults are used when omitted)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output CSV path; the SVG chart is written beside it
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for the optimal worker count under an overhead model
    #[command(long_about = "Exhaustive integer search over N in 1..=nmax for the optimum of \
        execution time, speedup, or efficiency under an additive overhead; ties break toward \
        the smaller N.")]
    Optimize {
        #[arg(long)]
        model: PathBuf,
        /// Overhead: inline JSON {"c_z":..,"alpha_z":..,"shifted":..} or a file path
        #[arg(long)]
        overhead: String,
        #[arg(long, value_enum)]
        objective: ObjectiveKind,
        #[arg(long)]
        nmax: u64,
    },
    /// Check an overhead polynomial against the five requirements for a
    /// unique speedup maximum
    #[command(name = "check-overhead")]
    CheckOverhead {
        /// Overhead coefficient c_z
        #[arg(long)]
        cz: f64,
        /// Overhead exponent alpha_z
        #[arg(long)]
        alphaz: f64,
        /// Use the shifted form z(N) = c_z*N^alpha_z - c_z (so z(1) = 0)
        #[arg(long)]
        shifted: bool,
        /// Upper end of the numeric confirmation grid
        #[arg(long, default_value_t = 1 << 16)]
        nmax: u64,
    },
}

#[derive(Subcommand)]
enum LawsCommand {
    /// List the available presets
    List,
    /// Build a preset and emit its model JSON
    Show {
        /// One of: amdahl, gustafson, sun_ni, generalized_scaled, scaled
        name: String,
        /// Sequential fraction, strictly inside (0, 1)
        #[arg(long)]
        s: f64,
        /// sun_ni: parallel-workload exponent
        #[arg(long)]
        alpha_g: Option<f64>,
        #[command(flatten)]
        scaled: ScaledArgs,
    },
}

#[derive(Args)]
struct ScaledArgs {
    /// scaled: sequential-workload coefficient
    #[arg(long, default_value_t = 1.0)]
    cf: f64,
    /// scaled: sequential-workload exponent
    #[arg(long, default_value_t = 0.0)]
    alphaf: f64,
    /// scaled: parallel-workload coefficient
    #[arg(long, default_value_t = 1.0)]
    cg: f64,
    /// scaled: parallel-workload exponent
    #[arg(long, default_value_t = 1.0)]
    alphag: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchKind {
    Matmul,
    Lu,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveKind {
    Time,
    Speedup,
    Efficiency,
}

impl From<ObjectiveKind> for Objective {
    fn from(o: ObjectiveKind) -> Self {
        match o {
            ObjectiveKind::Time => Objective::Time,
            ObjectiveKind::Speedup => Objective::Speedup,
            ObjectiveKind::Efficiency => Objective::Efficiency,
        }
    }
}

/// A failed command, tagged with the exit class.
enum Failure {
    Validation(String),
    Computation(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Computation(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Computation(m) => m,
        }
    }
}

fn validation<E: Display>(e: E) -> Failure {
    Failure::Validation(e.to_string())
}

fn computation(e: CoreError) -> Failure {
    Failure::Computation(e.to_string())
}

type CResult<T> = Result<T, Failure>;

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return 0;
        }
        Err(e) => {
            let _ = e.print();
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cmd: Command) -> CResult<()> {
    match cmd {
        Command::Eval { model, n, overhead } => eval(&model, n, overhead.as_deref()),
        Command::Classify { model, verify, nprobe } => classify_cmd(&model, verify, nprobe),
        Command::Limits { model } => limits_cmd(&model),
        Command::Laws { command } => laws_cmd(command),
        Command::Fit { csv, split, model, s_floor } =>
            fit_cmd(&csv, split.as_deref(), model.as_deref(), s_floor),
        Command::Oracle { z1, imax } => oracle_cmd(z1, imax),
        Command::Bench { experiment, config, out } => bench_cmd(experiment, config.as_deref(), &out),
        Command::Optimize { model, overhead, objective, nmax } =>
            optimize_cmd(&model, &overhead, objective.into(), nmax),
        Command::CheckOverhead { cz, alphaz, shifted, nmax } =>
            check_overhead_cmd(cz, alphaz, shifted, nmax),
    }
}

fn load_model(path: &Path) -> CResult<ScalabilityModel> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| validation(format!("invalid model file {}: {e}", path.display())))
}

/// Inline JSON or a path to a JSON file.
fn load_overhead(arg: &str) -> CResult<OverheadPoly> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| validation(format!("cannot read overhead file {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| validation(format!("invalid overhead: {e}")))
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn eval(model_path: &Path, n: u64, overhead: Option<&str>) -> CResult<()> {
    let m = load_model(model_path)?;
    let z = overhead.map(load_overhead).transpose()?;
    if n == 0 {
        return Err(Failure::Validation("N must be >= 1".into()));
    }

    let serial = m.serial_time(n);
    let (parallel, speedup, efficiency, z_at_n) = match &z {
        None => {
            let p = m.parallel_time(n).map_err(computation_or_domain)?;
            (
                p,
                m.speedup(n).map_err(computation_or_domain)?,
                m.efficiency(n).map_err(computation_or_domain)?,
                None,
            )
        }
        Some(z) => {
            let p = m.parallel_time(n).map_err(computation_or_domain)?;
            (
                p,
                parascale::overhead::overhead_speedup(&m, z, n).map_err(computation_or_domain)?,
                parascale::overhead::overhead_efficiency(&m, z, n)
                    .map_err(computation_or_domain)?,
                Some(z.eval(n)),
            )
        }
    };

    let mut out = json!({
        "schema": 1,
        "n": n,
        "serial_time": serial,
        "parallel_time": parallel,
        "speedup": speedup,
        "efficiency": efficiency,
    });
    if let Some(zv) = z_at_n {
        out["overhead"] = json!(zv);
        out["parallel_time_with_overhead"] = json!(parallel + zv);
    }
    emit(&out);
    Ok(())
}

/// Domain violations of the evaluation preconditions (N = 1 with c_h != 1,
/// invalid user-supplied functions) count as validation; everything else
/// arising mid-computation is a computation error.
fn computation_or_domain(e: CoreError) -> Failure {
    match e {
        CoreError::EvalAtOne { .. }
        | CoreError::InvalidParameter(_)
        | CoreError::DegenerateSplit { .. } => validation(e),
        other => computation(other),
    }
}

fn classify_cmd(model_path: &Path, verify: bool, nprobe: u64) -> CResult<()> {
    let m = load_model(model_path)?;
    match classify(&m) {
        Ok(c) => {
            let mut out = serde_json::to_value(&c).expect("serializable");
            out["schema"] = json!(1);
            if verify {
                let mut reports = Vec::new();
                for (limit, quantity) in [
                    (&c.speedup_limit, GrowthQuantity::Speedup),
                    (&c.efficiency_limit, GrowthQuantity::Efficiency),
                ] {
                    let r = verify_growth(&m, limit, nprobe, quantity)
                        .map_err(computation_or_domain)?;
                    let mut v = serde_json::to_value(&r).expect("serializable");
                    v["passes"] = json!(r.passes(0.01));
                    v["tolerance"] = json!(0.01);
                    reports.push(v);
                }
                out["verification"] = json!(reports);
            }
            emit(&out);
            Ok(())
        }
        Err(CoreError::DegenerateSplit { s }) => {
            // the typology presupposes 0 < s < 1; report the exact behavior
            let behavior = if s == 0.0 {
                if m.h().exponent() > 0.0 {
                    json!({
                        "speedup": "equals h(N) exactly",
                        "kind": "unbounded",
                        "growth_exponent": m.h().exponent(),
                    })
                } else {
                    json!({
                        "speedup": "equals h(N) exactly",
                        "kind": "finite",
                        "value": m.h().coeff(),
                    })
                }
            } else {
                json!({ "speedup": "identically 1 (nothing to parallelize)" })
            };
            emit(&json!({
                "schema": 1,
                "degenerate": format!("s={s}"),
                "note": "asymptotic case formulas divide by s·c_f and p·c_g; \
                         classification is undefined at the endpoints",
                "behavior": behavior,
            }));
            Ok(())
        }
        Err(e) => Err(computation(e)),
    }
}

fn limits_cmd(model_path: &Path) -> CResult<()> {
    let m = load_model(model_path)?;
    let c = classify(&m).map_err(computation_or_domain)?;
    emit(&json!({
        "schema": 1,
        "speedup_limit": c.speedup_limit,
        "efficiency_limit": c.efficiency_limit,
    }));
    Ok(())
}

fn laws_cmd(cmd: LawsCommand) -> CResult<()> {
    match cmd {
        LawsCommand::List => {
            for info in laws::PRESETS {
                let params = if info.parameters.is_empty() {
                    String::new()
                } else {
                    format!(" (extra parameters: {})", info.parameters.join(", "))
                };
                println!("{:<20} {}{params}", info.name, info.summary);
            }
            Ok(())
        }
        LawsCommand::Show { name, s, alpha_g, scaled } => {
            let m = match name.as_str() {
                "amdahl" => laws::amdahl(s),
                "gustafson" => laws::gustafson(s),
                "sun_ni" => {
                    let ag = alpha_g.ok_or_else(|| {
                        Failure::Validation("sun_ni needs --alpha-g".into())
                    })?;
                    laws::sun_ni(s, ag)
                }
                "generalized_scaled" => laws::generalized_scaled(s),
                "scaled" => {
                    laws::scaled_model(s, scaled.cf, scaled.alphaf, scaled.cg, scaled.alphag)
                }
                other => {
                    return Err(Failure::Validation(format!(
                        "unknown preset '{other}'; see `laws list`"
                    )))
                }
            }
            .map_err(validation)?;
            emit(&serde_json::to_value(m).expect("serializable"));
            Ok(())
        }
    }
}

fn fit_cmd(
    csv: &Path,
    split: Option<&Path>,
    model: Option<&Path>,
    s_floor: Option<f64>,
) -> CResult<()> {
    let text = std::fs::read_to_string(csv)
        .map_err(|e| validation(format!("cannot read {}: {e}", csv.display())))?;
    let samples = parse_timing_csv(&text).map_err(validation)?;

    let mut out = json!({ "schema": 1 });

    if let Some(split_path) = split {
        let text = std::fs::read_to_string(split_path)
            .map_err(|e| validation(format!("cannot read {}: {e}", split_path.display())))?;
        let (t_seq, t_par) = parse_split_csv(&text).map_err(validation)?;
        let est = estimate_s(t_seq, t_par).map_err(computation)?;
        let mut s_block = json!({ "measured": est.s });
        if let Some(w) = &est.warning {
            s_block["warning"] = json!(w);
        }
        let mut s_used = est.s;
        if let Some(floor) = s_floor {
            s_block["floor"] = json!(floor);
            if est.s < floor {
                s_used = floor;
            }
        }
        s_block["used"] = json!(s_used);
        out["s"] = s_block;
    }

    match model {
        None => {
            let pts: Vec<(f64, f64)> = samples.iter().map(|&(n, t)| (n as f64, t)).collect();
            let fit = fit_power_law(&pts, FitWeighting::Uniform).map_err(computation)?;
            out["fit"] = serde_json::to_value(fit.law).expect("serializable");
            out["residual"] = json!({
                "rms_log_residual": fit.rms_log_residual,
                "alpha_clamped": fit.alpha_clamped,
            });
        }
        Some(model_path) => {
            let base = load_model(model_path)?;
            let run = TimingRun::new(samples, None).map_err(validation)?;
            let inf = infer_h(&run, &base.split(), &base.f(), &base.g()).map_err(computation)?;
            let fitted = ScalabilityModel::new(base.split(), base.f(), base.g(), inf.fit.law)
                .map_err(computation)?;
            out["model"] = serde_json::to_value(fitted).expect("serializable");
            out["h_samples"] = json!(inf
                .samples
                .iter()
                .map(|h| json!({ "n": h.n, "h_hat": h.h_hat }))
                .collect::<Vec<_>>());
            if !inf.rejected.is_empty() {
                out["rejected"] = json!(inf
                    .rejected
                    .iter()
                    .map(|r| json!({
                        "n": r.n,
                        "normalized_time": r.normalized_time,
                        "sequential_term": r.sequential_term,
                    }))
                    .collect::<Vec<_>>());
            }
            out["residual"] = json!({
                "rms_log_residual": inf.fit.rms_log_residual,
                "alpha_clamped": inf.fit.alpha_clamped,
            });
        }
    }
    emit(&out);
    Ok(())
}

fn oracle_cmd(z1: u64, imax: u32) -> CResult<()> {
    let rows = oracle::emit_table(z1, imax).map_err(computation_or_domain)?;
    print!("{}", oracle::table_csv(&rows));
    Ok(())
}

fn bench_cmd(kind: BenchKind, config: Option<&Path>, out: &Path) -> CResult<()> {
    let experiment = match kind {
        BenchKind::Matmul => Experiment::MatmulFixed,
        BenchKind::Lu => Experiment::LuVariable,
    };
    let cfg = match config {
        None => BenchConfig::new(experiment),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?;
            let cfg: BenchConfig = serde_json::from_str(&text)
                .map_err(|e| validation(format!("invalid config {}: {e}", path.display())))?;
            if cfg.experiment != experiment {
                return Err(Failure::Validation(format!(
                    "config is for {} but the command line asked for {}",
                    cfg.experiment.name(),
                    experiment.name()
                )));
            }
            cfg
        }
    };
    {
        let mut check = cfg.clone();
        check.validate().map_err(validation)?;
    }
    let result = match experiment {
        Experiment::MatmulFixed => run_matmul(&cfg),
        Experiment::LuVariable => run_lu(&cfg),
    }
    .map_err(computation)?;
    let svg = report::write_report(&result, out).map_err(computation)?;
    for row in &result.rows {
        println!(
            "N={:<4} t={:>12.3} ms  S={:>10.6} (theor {:>10.6})  E={:>8.6} (theor {:>8.6})",
            row.n, row.t_total_ms, row.s_comp, row.s_theor, row.e_comp, row.e_theor
        );
    }
    println!("report: {} chart: {}", out.display(), svg.display());
    Ok(())
}

fn optimize_cmd(model_path: &Path, overhead: &str, objective: Objective, nmax: u64) -> CResult<()> {
    let m = load_model(model_path)?;
    let z = load_overhead(overhead)?;
    if nmax < 2 {
        return Err(Failure::Validation("nmax must be >= 2".into()));
    }
    let (n_star, value) = optimal_n(&m, &z, objective, nmax).map_err(computation)?;
    emit(&json!({
        "schema": 1,
        "objective": objective,
        "nmax": nmax,
        "n_star": n_star,
        "value": value,
    }));
    Ok(())
}

fn check_overhead_cmd(cz: f64, alphaz: f64, shifted: bool, nmax: u64) -> CResult<()> {
    let z = OverheadPoly::new(cz, alphaz, shifted).map_err(validation)?;
    if nmax < 2 {
        return Err(Failure::Validation("nmax must be >= 2".into()));
    }
    let r = check_flatt_kennedy(&z, nmax).map_err(computation)?;
    let mut out = serde_json::to_value(&r).expect("serializable");
    out["schema"] = json!(1);
    out["all_pass"] = json!(r.all_pass());
    emit(&out);
    Ok(())
}
