//! Command implementations for the `binocont` executable.
//!
//! Every command renders to a `String` and returns an [`Outcome`] so the
//! binary stays a thin shell and the rendering can be tested directly.

pub mod render;

use std::time::Instant;

use binocont_core::identity::{subset_sums, DEFAULT_SUBSET_CAP};
use binocont_core::verify::{run_suite, Bounds, Suite};
use binocont_core::{identity_report, k_poly, ContinuantStrategy, Degree, IdentityReport, IntPoly};
use clap::ValueEnum;

pub use render::OutputFormat;

/// Environment variable overriding the hard bound on grid sizes.
pub const BOUND_ENV: &str = "BINOCONT_MAX_BOUND";
pub const DEFAULT_BOUND: u32 = 64;

/// Largest `n` accepted by `bench` for polynomial strategies.
pub const BENCH_POLY_LIMIT: i64 = 512;
/// Largest `n` accepted by `bench` for the determinant oracle.
pub const BENCH_DETERMINANT_LIMIT: i64 = 64;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Rendered command output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// Non-deterministic diagnostics (timings), kept off stdout.
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, ok: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

type CmdResult = Result<Outcome, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Hard bounds on user-supplied sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub bound: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            bound: DEFAULT_BOUND,
        }
    }
}

impl Limits {
    /// Reads [`BOUND_ENV`], falling back to [`DEFAULT_BOUND`].
    pub fn from_env() -> Result<Self, UsageError> {
        match std::env::var(BOUND_ENV) {
            Err(_) => Ok(Limits::default()),
            Ok(raw) => match raw.trim().parse::<u32>() {
                Ok(bound) if bound >= 1 => Ok(Limits { bound }),
                _ => Err(usage(format!(
                    "{BOUND_ENV} must be a positive integer, got `{raw}`"
                ))),
            },
        }
    }

    fn sum_bound(self) -> u32 {
        self.bound.saturating_mul(16)
    }

    fn k_bound(self) -> u32 {
        self.bound.saturating_mul(2)
    }
}

fn check_range(flag: &str, value: u32, min: u32, max: u32) -> Result<(), UsageError> {
    if value < min || value > max {
        return Err(usage(format!(
            "--{flag} must lie in {min}..={max}, got {value}"
        )));
    }
    Ok(())
}

fn thread_pool(jobs: usize) -> Result<Option<rayon::ThreadPool>, UsageError> {
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    if jobs == 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map(Some)
        .map_err(|e| usage(format!("cannot start {jobs} workers: {e}")))
}

pub fn cmd_sum(n: u32, l: u32, format: OutputFormat, limits: Limits) -> CmdResult {
    check_range("n", n, 0, limits.sum_bound())?;
    check_range("l", l, 0, limits.sum_bound())?;
    let report = identity_report(n, l);
    let ok = report.equal;
    Ok(Outcome::new(render::sum(&report, format), ok))
}

pub fn cmd_table(
    n_max: u32,
    l_max: u32,
    format: OutputFormat,
    jobs: usize,
    limits: Limits,
) -> CmdResult {
    check_range("n-max", n_max, 1, limits.bound)?;
    check_range("l-max", l_max, 1, limits.bound)?;
    let pool = thread_pool(jobs)?;
    let cells: Vec<(u32, u32)> = (1..=l_max)
        .flat_map(|l| (1..=n_max).map(move |n| (n, l)))
        .collect();
    let reports: Vec<IdentityReport> = match pool {
        Some(pool) => {
            use rayon::prelude::*;
            pool.install(|| {
                cells
                    .par_iter()
                    .map(|&(n, l)| identity_report(n, l))
                    .collect()
            })
        }
        None => cells.iter().map(|&(n, l)| identity_report(n, l)).collect(),
    };
    let mut out = Outcome::new(render::table(n_max, l_max, &reports, format), true);
    let mismatched: Vec<&IdentityReport> = reports.iter().filter(|r| !r.equal).collect();
    if !mismatched.is_empty() {
        out.code = EXIT_CHECK_FAILED;
        for r in mismatched {
            out.stderr.push_str(&format!(
                "mismatch at n={} l={}: {} != {}\n",
                r.n, r.l, r.left, r.right
            ));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identity,
    Lemma23,
    Uv,
    Recurrences,
    Continuants,
    Extraction,
    Chebyshev,
    Pascal,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Identity => Suite::Identity,
            SuiteArg::Lemma23 => Suite::Lemma23,
            SuiteArg::Uv => Suite::Uv,
            SuiteArg::Recurrences => Suite::Recurrences,
            SuiteArg::Continuants => Suite::Continuants,
            SuiteArg::Extraction => Suite::Extraction,
            SuiteArg::Chebyshev => Suite::Chebyshev,
            SuiteArg::Pascal => Suite::Pascal,
            SuiteArg::All => Suite::All,
        }
    }
}

pub fn cmd_verify(
    suite: Suite,
    bounds: Bounds,
    format: OutputFormat,
    jobs: usize,
    limits: Limits,
) -> CmdResult {
    if let Some(v) = bounds.n_max {
        check_range("n-max", v, 0, limits.bound)?;
    }
    if let Some(v) = bounds.l_max {
        check_range("l-max", v, 0, limits.bound)?;
    }
    if let Some(v) = bounds.k_max {
        check_range("k-max", v, 1, limits.k_bound())?;
    }
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let summary = run_suite(suite, bounds, jobs).map_err(|e| usage(e.to_string()))?;
    let mut out = Outcome::new(render::verify(&summary, format), summary.passed());
    if format != OutputFormat::Json {
        out.stderr = format!("wall_time_ms: {}\n", summary.wall_time_ms);
    }
    Ok(out)
}

pub fn cmd_subsets(n: u32, l: u32, format: OutputFormat) -> CmdResult {
    let analysis = subset_sums(n, l, DEFAULT_SUBSET_CAP).map_err(|e| usage(e.to_string()))?;
    Ok(Outcome::new(render::subsets(&analysis, format), true))
}

/// One timed strategy in a `bench` run.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub strategy: ContinuantStrategy,
    pub n: i64,
    pub degree: Degree,
    pub reps: u32,
    pub total_ms: f64,
}

fn supports(strategy: ContinuantStrategy, n: i64) -> bool {
    match strategy {
        ContinuantStrategy::DeterminantOracle => n <= BENCH_DETERMINANT_LIMIT,
        _ => n <= BENCH_POLY_LIMIT,
    }
}

pub fn cmd_bench(
    strategy: Option<ContinuantStrategy>,
    n: i64,
    reps: u32,
    format: OutputFormat,
) -> CmdResult {
    if n < 1 {
        return Err(usage(format!("--n must be at least 1, got {n}")));
    }
    if reps == 0 {
        return Err(usage("--reps must be at least 1"));
    }
    let strategies: Vec<ContinuantStrategy> = match strategy {
        Some(s) if !supports(s, n) => {
            let limit = if s == ContinuantStrategy::DeterminantOracle {
                BENCH_DETERMINANT_LIMIT
            } else {
                BENCH_POLY_LIMIT
            };
            return Err(usage(format!(
                "strategy {s} supports n <= {limit}, got {n}"
            )));
        }
        Some(s) => vec![s],
        None if n > BENCH_POLY_LIMIT => {
            return Err(usage(format!("n must be <= {BENCH_POLY_LIMIT}, got {n}")));
        }
        None => ContinuantStrategy::ALL
            .into_iter()
            .filter(|s| supports(*s, n))
            .collect(),
    };

    let mut outputs: Vec<IntPoly> = Vec::new();
    let mut rows = Vec::new();
    for s in strategies {
        let start = Instant::now();
        let mut last = IntPoly::zero();
        for _ in 0..reps {
            last = k_poly(n, s).map_err(|e| usage(e.to_string()))?;
        }
        let total_ms = start.elapsed().as_secs_f64() * 1e3;
        rows.push(BenchRow {
            strategy: s,
            n,
            degree: last.degree(),
            reps,
            total_ms,
        });
        outputs.push(last);
    }
    // The recurrence is the reference even when it was not timed.
    let reference = k_poly(n, ContinuantStrategy::Recurrence).map_err(|e| usage(e.to_string()))?;
    let agree = outputs.iter().all(|p| *p == reference);
    Ok(Outcome::new(render::bench(&rows, agree, format), agree))
}
