//! Command-line laboratory for the split-merge chain: Monte Carlo
//! simulation, PD(1) reference sampling, exact projection coefficients and
//! the oracle-equivalence suite. Every command emits a UTF-8 CSV with `#`
//! header lines plus a `.json` twin, and runs are byte-reproducible for a
//! fixed seed and config regardless of worker count.
//!
//! Exit codes: 0 success, 1 test failure, 2 usage, 3 size limit.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use splitmerge_core::character::{
    a_q_coefficients, brute_force_shifted_projection, dimension, factorial, format_rational,
    matches_brute_force, project_char_canonical, project_char_general, project_char_shifted,
    tail_cycles_permutation, tau_q_class_function, Rational,
};
use splitmerge_core::partition::{partitions, Partition};
use splitmerge_core::pd::pd1_sample;
use splitmerge_core::perm::{coherence_check, sample_px, shifted_step_via_group};
use splitmerge_core::rng::stream_rng;
use splitmerge_core::simplex::MassPartition;
use splitmerge_core::stats::{chi_square_goodness_of_fit, histogram, ks_two_sample};
use splitmerge_core::CoreError;

const PROGRESS_EVERY: u64 = 10_000;
const REPLICA_CHUNK: u64 = 4_096;
const EXACT_MAX_TOTAL_CELLS: u32 = 60;
const ORACLE_DEGREE_CAP: u32 = 8;
const HIST_BINS: usize = 50;

#[derive(Parser)]
#[command(name = "splitmerge", version, about = "Split-merge chain laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run independent half-step trajectories and emit per-step summaries.
    Simulate(SimulateArgs),
    /// Sample the PD(1) reference law and emit moments and a histogram.
    PdRef(PdRefArgs),
    /// Exact projection coefficients a_q(l), computed by both routes.
    Exact(ExactArgs),
    /// Run the exact oracle-equivalence and sampler-coherence suites.
    OracleCheck(OracleCheckArgs),
}

#[derive(Args)]
struct SimulateArgs {
    /// Initial masses, e.g. --init 1.0 or --init 0.5,0.5
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    init: Vec<f64>,
    /// Number of half steps.
    #[arg(long)]
    steps: u32,
    /// Number of independent trajectories.
    #[arg(long)]
    replicas: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path; a .json twin is written next to it.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct PdRefArgs {
    #[arg(long)]
    replicas: u64,
    /// Stick-breaking residual tolerance.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExactArgs {
    /// Projection degree, 2..=6.
    #[arg(long)]
    n: u32,
    /// Largest half-step count; n + 2*qmax is capped at 60.
    #[arg(long)]
    qmax: u32,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OracleCheckArgs {
    /// Largest degree enumerated by the brute-force oracle (at most 8).
    #[arg(long)]
    nmax: u32,
}

enum AppError {
    Usage(String),
    SizeLimit(String),
    Failure(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 2,
            AppError::SizeLimit(_) => 3,
            AppError::Failure(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::SizeLimit(m) | AppError::Failure(m) => m,
        }
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::SizeLimit(m) => AppError::SizeLimit(m),
            CoreError::InvalidInput(m) => AppError::Usage(m),
            CoreError::IterationCap(m) | CoreError::ConsistencyFailure(m) => AppError::Failure(m),
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Failure(format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => cmd_simulate(args),
        Command::PdRef(args) => cmd_pd_reference(args),
        Command::Exact(args) => cmd_exact(args),
        Command::OracleCheck(args) => cmd_oracle_check(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

/// SPLITMERGE_THREADS caps the rayon pool; results do not depend on it.
fn init_thread_pool() {
    if let Ok(value) = std::env::var("SPLITMERGE_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

struct Progress {
    label: &'static str,
    total: u64,
    done: AtomicU64,
}

impl Progress {
    fn new(label: &'static str, total: u64) -> Self {
        Self {
            label,
            total,
            done: AtomicU64::new(0),
        }
    }

    fn advance(&self, count: u64) {
        let before = self.done.fetch_add(count, Ordering::Relaxed);
        let after = before + count;
        if before / PROGRESS_EVERY != after / PROGRESS_EVERY {
            eprintln!("{}: {}/{} replicas", self.label, after.min(self.total), self.total);
        }
    }
}

fn write_outputs<T: Serialize>(csv_path: &Path, csv: &str, report: &T) -> Result<(), AppError> {
    if let Some(parent) = csv_path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(csv_path, csv)?;
    let json_path = csv_path.with_extension("json");
    let mut json = serde_json::to_string_pretty(report)
        .map_err(|e| AppError::Failure(format!("json encoding failed: {e}")))?;
    json.push('\n');
    std::fs::write(json_path, json)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[derive(Serialize, Clone, Copy, Default)]
struct SimRow {
    q: u32,
    mean_sum_squares: f64,
    stderr_sum_squares: f64,
    mean_x1: f64,
    mean_parts: f64,
}

#[derive(Serialize)]
struct SimulateReport {
    command: &'static str,
    version: u32,
    init: Vec<f64>,
    steps: u32,
    replicas: u64,
    seed: u64,
    rows: Vec<SimRow>,
}

#[derive(Clone, Default)]
struct QAccumulator {
    sum_s2: f64,
    sum_s2_sq: f64,
    sum_x1: f64,
    sum_parts: f64,
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), AppError> {
    if args.replicas == 0 {
        return Err(AppError::Usage("--replicas must be at least 1".into()));
    }
    let init = MassPartition::reorder(&args.init)
        .map_err(|e| AppError::Usage(format!("invalid --init: {e}")))?;

    let levels = args.steps as usize + 1;
    let chunks = args.replicas.div_ceil(REPLICA_CHUNK);
    let progress = Progress::new("simulate", args.replicas);

    // Each chunk accumulates its replicas in order; chunk partials are
    // merged in chunk order, so the output is independent of scheduling.
    let partials: Vec<Vec<QAccumulator>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * REPLICA_CHUNK;
            let hi = (lo + REPLICA_CHUNK).min(args.replicas);
            let mut acc = vec![QAccumulator::default(); levels];
            for replica in lo..hi {
                let mut rng = stream_rng(args.seed, replica);
                let mut state = init.clone();
                for (q, slot) in acc.iter_mut().enumerate() {
                    if q > 0 {
                        state = state.apply_half_step(&mut rng);
                    }
                    let s2 = state.sum_squares();
                    slot.sum_s2 += s2;
                    slot.sum_s2_sq += s2 * s2;
                    slot.sum_x1 += state.largest();
                    slot.sum_parts += state.len() as f64;
                }
            }
            progress.advance(hi - lo);
            acc
        })
        .collect();

    let mut totals = vec![QAccumulator::default(); levels];
    for partial in partials {
        for (total, p) in totals.iter_mut().zip(partial) {
            total.sum_s2 += p.sum_s2;
            total.sum_s2_sq += p.sum_s2_sq;
            total.sum_x1 += p.sum_x1;
            total.sum_parts += p.sum_parts;
        }
    }

    let r = args.replicas as f64;
    let rows: Vec<SimRow> = totals
        .iter()
        .enumerate()
        .map(|(q, acc)| {
            let mean = acc.sum_s2 / r;
            let var = (acc.sum_s2_sq / r - mean * mean).max(0.0);
            SimRow {
                q: q as u32,
                mean_sum_squares: mean,
                stderr_sum_squares: (var / r).sqrt(),
                mean_x1: acc.sum_x1 / r,
                mean_parts: acc.sum_parts / r,
            }
        })
        .collect();

    let mut csv = String::new();
    csv.push_str("# splitmerge simulate v1\n");
    csv.push_str(&format!(
        "# config: init={} steps={} replicas={} seed={}\n",
        join_floats(&args.init),
        args.steps,
        args.replicas,
        args.seed
    ));
    csv.push_str("# columns: q,mean_sum_squares,stderr_sum_squares,mean_x1,mean_parts\n");
    for row in &rows {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            row.q, row.mean_sum_squares, row.stderr_sum_squares, row.mean_x1, row.mean_parts
        ));
    }

    let report = SimulateReport {
        command: "simulate",
        version: 1,
        init: args.init.clone(),
        steps: args.steps,
        replicas: args.replicas,
        seed: args.seed,
        rows,
    };
    write_outputs(&args.out, &csv, &report)
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// pd-ref
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Moments {
    mean_x1: f64,
    stderr_x1: f64,
    mean_sum_squares: f64,
    stderr_sum_squares: f64,
    mean_sum_cubes: f64,
    stderr_sum_cubes: f64,
}

#[derive(Serialize)]
struct HistogramReport {
    lo: f64,
    hi: f64,
    bins: usize,
    counts: Vec<u64>,
}

#[derive(Serialize)]
struct PdRefReport {
    command: &'static str,
    version: u32,
    replicas: u64,
    tol: f64,
    seed: u64,
    moments: Moments,
    histogram: HistogramReport,
}

#[derive(Clone, Default)]
struct PdAccumulator {
    x1: Vec<f64>,
    sum_squares: Vec<f64>,
    sum_cubes: Vec<f64>,
}

fn cmd_pd_reference(args: PdRefArgs) -> Result<(), AppError> {
    if args.replicas == 0 {
        return Err(AppError::Usage("--replicas must be at least 1".into()));
    }
    if !(args.tol > 0.0 && args.tol < 1.0) {
        return Err(AppError::Usage("--tol must lie in (0, 1)".into()));
    }

    let chunks = args.replicas.div_ceil(REPLICA_CHUNK);
    let progress = Progress::new("pd-ref", args.replicas);
    let partials: Vec<PdAccumulator> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let lo = chunk * REPLICA_CHUNK;
            let hi = (lo + REPLICA_CHUNK).min(args.replicas);
            let mut acc = PdAccumulator::default();
            for replica in lo..hi {
                let mut rng = stream_rng(args.seed, replica);
                let x = pd1_sample(&mut rng, args.tol).expect("stick-breaking terminates");
                acc.x1.push(x.largest());
                acc.sum_squares.push(x.sum_squares());
                acc.sum_cubes.push(x.parts().iter().map(|p| p * p * p).sum());
            }
            progress.advance(hi - lo);
            acc
        })
        .collect();

    let mut x1 = Vec::with_capacity(args.replicas as usize);
    let mut squares = Vec::with_capacity(args.replicas as usize);
    let mut cubes = Vec::with_capacity(args.replicas as usize);
    for partial in partials {
        x1.extend(partial.x1);
        squares.extend(partial.sum_squares);
        cubes.extend(partial.sum_cubes);
    }

    let (mean_x1, stderr_x1) = splitmerge_core::stats::mean_and_stderr(&x1);
    let (mean_s2, stderr_s2) = splitmerge_core::stats::mean_and_stderr(&squares);
    let (mean_s3, stderr_s3) = splitmerge_core::stats::mean_and_stderr(&cubes);
    let counts = histogram(&x1, HIST_BINS, 0.0, 1.0);

    let mut csv = String::new();
    csv.push_str("# splitmerge pd-ref v1\n");
    csv.push_str(&format!(
        "# config: replicas={} tol={} seed={}\n",
        args.replicas, args.tol, args.seed
    ));
    csv.push_str("# columns: record,key,value\n");
    csv.push_str(&format!("moment,mean_x1,{mean_x1}\n"));
    csv.push_str(&format!("moment,stderr_x1,{stderr_x1}\n"));
    csv.push_str(&format!("moment,mean_sum_squares,{mean_s2}\n"));
    csv.push_str(&format!("moment,stderr_sum_squares,{stderr_s2}\n"));
    csv.push_str(&format!("moment,mean_sum_cubes,{mean_s3}\n"));
    csv.push_str(&format!("moment,stderr_sum_cubes,{stderr_s3}\n"));
    let width = 1.0 / HIST_BINS as f64;
    for (bin, count) in counts.iter().enumerate() {
        csv.push_str(&format!("hist,{},{count}\n", bin as f64 * width));
    }

    let report = PdRefReport {
        command: "pd-ref",
        version: 1,
        replicas: args.replicas,
        tol: args.tol,
        seed: args.seed,
        moments: Moments {
            mean_x1,
            stderr_x1,
            mean_sum_squares: mean_s2,
            stderr_sum_squares: stderr_s2,
            mean_sum_cubes: mean_s3,
            stderr_sum_cubes: stderr_s3,
        },
        histogram: HistogramReport {
            lo: 0.0,
            hi: 1.0,
            bins: HIST_BINS,
            counts,
        },
    };
    write_outputs(&args.out, &csv, &report)
}

// ---------------------------------------------------------------------------
// exact
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ExactEntry {
    n: u32,
    q: u32,
    coefficients: BTreeMap<String, String>,
}

fn cmd_exact(args: ExactArgs) -> Result<(), AppError> {
    if !(2..=6).contains(&args.n) {
        return Err(AppError::SizeLimit(format!(
            "--n must lie in 2..=6, got {}",
            args.n
        )));
    }
    let total_cells = args.n + 2 * args.qmax;
    if total_cells > EXACT_MAX_TOTAL_CELLS {
        return Err(AppError::SizeLimit(format!(
            "n + 2*qmax = {total_cells} exceeds the cap {EXACT_MAX_TOTAL_CELLS}"
        )));
    }

    let mut entries = Vec::new();
    let mut csv = String::new();
    csv.push_str("# splitmerge exact v1\n");
    csv.push_str(&format!("# config: n={} qmax={}\n", args.n, args.qmax));
    csv.push_str("# columns: n,q,l,coefficient\n");
    for q in 0..=args.qmax {
        // Both routes must agree exactly; a mismatch is a test failure.
        let coeffs = a_q_coefficients(args.n, q)
            .map_err(|e| AppError::Failure(format!("route disagreement: {e}")))?;
        let tau_q = tau_q_class_function(args.n, q)
            .map_err(|e| AppError::Failure(e.to_string()))?;
        if !tau_q
            .is_probability_measure()
            .map_err(|e| AppError::Failure(e.to_string()))?
        {
            return Err(AppError::Failure(format!(
                "projected measure at n={}, q={q} is not a probability measure",
                args.n
            )));
        }
        let mut coefficients = BTreeMap::new();
        for (l, value) in &coeffs {
            csv.push_str(&format!("{},{q},{l},{}\n", args.n, format_rational(value)));
            coefficients.insert(l.to_string(), format_rational(value));
        }
        entries.push(ExactEntry {
            n: args.n,
            q,
            coefficients,
        });
    }
    write_outputs(&args.out, &csv, &entries)
}

// ---------------------------------------------------------------------------
// oracle-check
// ---------------------------------------------------------------------------

struct CheckReport {
    failures: Vec<String>,
}

impl CheckReport {
    fn new() -> Self {
        Self { failures: Vec::new() }
    }

    fn record(&mut self, name: &str, passed: bool, detail: String) {
        if passed {
            println!("ok - {name}");
        } else {
            println!("FAIL - {name}: {detail}");
            self.failures.push(name.to_string());
        }
    }

    fn run(&mut self, name: &str, check: impl FnOnce() -> Result<(bool, String), CoreError>) {
        match check() {
            Ok((passed, detail)) => self.record(name, passed, detail),
            Err(e) => self.record(name, false, e.to_string()),
        }
    }
}

fn cmd_oracle_check(args: OracleCheckArgs) -> Result<(), AppError> {
    if args.nmax > ORACLE_DEGREE_CAP {
        return Err(AppError::SizeLimit(format!(
            "--nmax must be at most {ORACLE_DEGREE_CAP}, got {}",
            args.nmax
        )));
    }
    if args.nmax < 2 {
        return Err(AppError::Usage("--nmax must be at least 2".into()));
    }
    let nmax = args.nmax;
    let mut report = CheckReport::new();

    report.run("projection formulas match brute-force fiber sums", || {
        for big_n in 1..=nmax {
            for lambda in partitions(big_n) {
                for k in 1..=big_n.min(3) {
                    let n = big_n - k;
                    let shifted = project_char_shifted(&lambda, k)?;
                    let g = tail_cycles_permutation(n, &Partition::new(vec![k])?, big_n)?;
                    let oracle = brute_force_shifted_projection(&lambda, &g, n)?;
                    if !matches_brute_force(&shifted, &oracle)? {
                        return Ok((false, format!("shifted projection at {lambda}, k={k}")));
                    }
                    for nu in partitions(k) {
                        let general = project_char_general(&lambda, &nu)?;
                        let g = tail_cycles_permutation(n, &nu, big_n)?;
                        let oracle = brute_force_shifted_projection(&lambda, &g, n)?;
                        if !matches_brute_force(&general, &oracle)? {
                            return Ok((false, format!("general projection at {lambda}, nu={nu}")));
                        }
                    }
                }
            }
        }
        Ok((true, String::new()))
    });

    report.run("single-cell shift reduces to the canonical projection", || {
        for big_n in 1..=(nmax + 1).min(7) {
            for lambda in partitions(big_n) {
                if project_char_shifted(&lambda, 1)? != project_char_canonical(&lambda)? {
                    return Ok((false, format!("mismatch at {lambda}")));
                }
            }
        }
        Ok((true, String::new()))
    });

    report.run("character dimensions satisfy sum-of-squares = n!", || {
        for n in 1..=nmax {
            let mut total = num_bigint::BigInt::from(0);
            for lambda in partitions(n) {
                let d = dimension(&lambda)?;
                total += &d * &d;
            }
            if total != factorial(n) {
                return Ok((false, format!("n={n}")));
            }
        }
        Ok((true, String::new()))
    });

    report.run("projected chain measures are probabilities", || {
        for n in 2..=nmax.min(5) {
            for q in 0..=8 {
                if !tau_q_class_function(n, q)?.is_probability_measure()? {
                    return Ok((false, format!("n={n} q={q}")));
                }
            }
        }
        Ok((true, String::new()))
    });

    report.run("closed-form coefficient identities", || {
        for n in 2..=nmax.min(6) {
            for q in 0..=8 {
                let coeffs = a_q_coefficients(n, q)?;
                if coeffs[&n] != Rational::new(1.into(), factorial(n)) {
                    return Ok((false, format!("a_q(n) at n={n} q={q}")));
                }
            }
        }
        for q in 0..=20u32 {
            let coeffs = a_q_coefficients(2, q)?;
            if coeffs[&1] != -Rational::new(1.into(), (q + 2).into()) {
                return Ok((false, format!("a_q(1) at q={q}")));
            }
        }
        Ok((true, String::new()))
    });

    // Sampler-side checks scale with nmax so small runs stay fast.
    let (degree, mc_samples) = if nmax <= 4 { (1_000, 3_000) } else { (10_000, 10_000) };

    report.run("insertion process is coherent under projection", || {
        let starts = [vec![1.0], vec![0.5, 0.5], vec![0.7, 0.3]];
        for (i, masses) in starts.iter().enumerate() {
            let x = MassPartition::reorder(masses)?;
            let mut rng = stream_rng(900 + i as u64, 0);
            let t = coherence_check(&x, 2, mc_samples * 5, &mut rng)?;
            if t.rejects_at(0.01) {
                return Ok((false, format!("start {masses:?}: p = {}", t.p_value)));
            }
        }
        let x = MassPartition::reorder(&[0.5, 0.3, 0.2])?;
        let mut rng = stream_rng(910, 0);
        let t = coherence_check(&x, 5, mc_samples * 3, &mut rng)?;
        if t.rejects_at(0.01) {
            return Ok((false, format!("start (0.5,0.3,0.2) at n=5: p = {}", t.p_value)));
        }
        Ok((true, String::new()))
    });

    report.run("insertion process matches the exact degree-3 law", || {
        // P(e) = 6e₃(x), each transposition Σxᵢ²(1−xᵢ), each 3-cycle Σxᵢ³/2.
        let x = MassPartition::reorder(&[0.5, 0.3, 0.2])?;
        let p3: f64 = x.parts().iter().map(|m| m * m * m).sum();
        let p_transposition: f64 = x.parts().iter().map(|m| m * m * (1.0 - m)).sum();
        let p_identity = 1.0 - 3.0 * p_transposition - p3;
        let categories: [(Vec<u32>, f64); 6] = [
            (vec![1, 2, 3], p_identity),
            (vec![1, 3, 2], p_transposition),
            (vec![2, 1, 3], p_transposition),
            (vec![2, 3, 1], p3 / 2.0),
            (vec![3, 1, 2], p3 / 2.0),
            (vec![3, 2, 1], p_transposition),
        ];
        let mut counts = vec![0u64; 6];
        let mut rng = stream_rng(940, 0);
        for _ in 0..mc_samples * 10 {
            let w = sample_px(&x, 3, &mut rng)?.permutation.one_line();
            let idx = categories
                .iter()
                .position(|(key, _)| *key == w)
                .expect("one-line form of an S3 element");
            counts[idx] += 1;
        }
        let probabilities: Vec<f64> = categories.iter().map(|&(_, p)| p).collect();
        let t = chi_square_goodness_of_fit(&counts, &probabilities);
        if t.rejects_at(0.01) {
            return Ok((false, format!("stat {} p {}", t.statistic, t.p_value)));
        }
        Ok((true, String::new()))
    });

    report.run("transposition shift agrees with the split-merge step", || {
        let starts = [vec![1.0], vec![0.5, 0.5], vec![0.7, 0.3]];
        for (i, masses) in starts.iter().enumerate() {
            let x = MassPartition::reorder(masses)?;
            let mut rng = stream_rng(920 + i as u64, 0);
            let group: Vec<f64> = (0..mc_samples)
                .map(|_| shifted_step_via_group(&x, degree, &mut rng).map(|y| y.largest()))
                .collect::<Result<_, _>>()?;
            let mut rng = stream_rng(930 + i as u64, 0);
            let operator: Vec<f64> = (0..mc_samples)
                .map(|_| {
                    let realized = sample_px(&x, degree, &mut rng)?
                        .permutation
                        .cycle_profile()
                        .to_mass_partition();
                    Ok(realized.apply_t(&mut rng).largest())
                })
                .collect::<Result<_, CoreError>>()?;
            let ks = ks_two_sample(&group, &operator);
            if ks.rejects_at(0.01) {
                return Ok((
                    false,
                    format!("start {masses:?}: D = {}, p = {}", ks.statistic, ks.p_value),
                ));
            }
        }
        Ok((true, String::new()))
    });

    if report.failures.is_empty() {
        println!("oracle-check: all checks passed (nmax = {nmax})");
        Ok(())
    } else {
        Err(AppError::Failure(format!(
            "{} check(s) failed: {}",
            report.failures.len(),
            report.failures.join("; ")
        )))
    }
}
