//! Exhaustive verification sweeps over bounded parameter grids.
//!
//! Each suite expands into an ordered list of independent checks. Checks may
//! run on a worker pool; results are always reported in list order, so a
//! parallel run and a serial run produce the same summary.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use crate::binomial::{binom, binom_oracle, negative_pascal_holds, sign_pow};
use crate::continuant::{
    chebyshev_u, continuant_general, k_poly, m_general, m_power, m_power_inverse,
    tridiagonal_determinant, ContinuantStrategy, ContinuantTable, ExpStrategy,
};
use crate::error::{domain, Error, Result};
use crate::identity::{
    coeff_extraction_with, identity_report, lemma23_check, partial_signed_sum, u_kn,
    u_recurrence_holds, uv_recurrence_check, v_kn, v_kn_truncated, VRecurrence,
};
use crate::matrix::Mat2;
use crate::poly::IntPoly;

/// Range of `|h|` swept for the vanishing of `v_{k,h}` at negative `h`.
const NEGATIVE_SPAN: i64 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
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

impl Suite {
    /// Concrete suites in the order `All` runs them.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Identity,
        Suite::Lemma23,
        Suite::Uv,
        Suite::Recurrences,
        Suite::Continuants,
        Suite::Extraction,
        Suite::Chebyshev,
        Suite::Pascal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identity => "identity",
            Suite::Lemma23 => "lemma23",
            Suite::Uv => "uv",
            Suite::Recurrences => "recurrences",
            Suite::Continuants => "continuants",
            Suite::Extraction => "extraction",
            Suite::Chebyshev => "chebyshev",
            Suite::Pascal => "pascal",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| domain("suite", format!("unknown verification suite `{s}`")))
    }
}

/// Optional overrides; `None` picks the suite's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub n_max: Option<u32>,
    pub l_max: Option<u32>,
    pub k_max: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub params: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteTally {
    pub suite: Suite,
    pub checked: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub suites: Vec<SuiteTally>,
    pub checked: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: u128,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Everything except the wall time; equal for equal inputs.
    pub fn same_outcome(&self, other: &VerifySummary) -> bool {
        self.suites == other.suites
            && self.checked == other.checked
            && self.failed == other.failed
            && self.failures == other.failures
    }
}

type CheckFn = Box<dyn Fn() -> Result<bool> + Send + Sync>;

struct Check {
    name: &'static str,
    params: String,
    run: CheckFn,
}

fn check(
    name: &'static str,
    params: String,
    run: impl Fn() -> Result<bool> + Send + Sync + 'static,
) -> Check {
    Check {
        name,
        params,
        run: Box::new(run),
    }
}

/// Runs `suite` with `jobs` worker threads (`jobs <= 1` runs inline).
pub fn run_suite(suite: Suite, bounds: Bounds, jobs: usize) -> Result<VerifySummary> {
    let start = Instant::now();
    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| domain("verify", e.to_string()))?,
        )
    } else {
        None
    };

    let mut suites = Vec::new();
    let mut failures = Vec::new();
    for s in suite.expand() {
        let checks = build_checks(s, bounds);
        let outcomes: Vec<bool> = match &pool {
            Some(pool) => pool.install(|| {
                checks
                    .par_iter()
                    .map(|c| matches!((c.run)(), Ok(true)))
                    .collect()
            }),
            None => checks
                .iter()
                .map(|c| matches!((c.run)(), Ok(true)))
                .collect(),
        };
        let mut failed = 0;
        for (c, ok) in checks.iter().zip(&outcomes) {
            if !ok {
                failed += 1;
                failures.push(Failure {
                    check: c.name,
                    params: c.params.clone(),
                });
            }
        }
        suites.push(SuiteTally {
            suite: s,
            checked: checks.len() as u64,
            failed,
        });
    }

    Ok(VerifySummary {
        checked: suites.iter().map(|t| t.checked).sum(),
        failed: failures.len() as u64,
        suites,
        failures,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

fn build_checks(suite: Suite, bounds: Bounds) -> Vec<Check> {
    let pick = |v: Option<u32>, default: u32| i64::from(v.unwrap_or(default));
    match suite {
        Suite::Identity => identity_checks(pick(bounds.n_max, 60), pick(bounds.l_max, 60)),
        Suite::Lemma23 => lemma23_checks(pick(bounds.l_max, 40)),
        Suite::Uv => uv_checks(pick(bounds.k_max, 25), pick(bounds.n_max, 25)),
        Suite::Recurrences => recurrence_checks(pick(bounds.k_max, 15), pick(bounds.n_max, 15)),
        Suite::Continuants => continuant_checks(pick(bounds.n_max, 64)),
        Suite::Extraction => extraction_checks(pick(bounds.n_max, 30)),
        Suite::Chebyshev => chebyshev_checks(pick(bounds.n_max, 64)),
        Suite::Pascal => pascal_checks(pick(bounds.n_max, 60), pick(bounds.k_max, 120)),
        Suite::All => unreachable!("expanded before building"),
    }
}

fn identity_checks(n_max: i64, l_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 0..=n_max as u32 {
        for l in 0..=l_max as u32 {
            out.push(check("identity", format!("n={n} l={l}"), move || {
                Ok(identity_report(n, l).equal)
            }));
        }
    }
    out
}

fn lemma23_checks(l_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for l in 1..=l_max as u32 {
        for n in 0..l {
            out.push(check("boundary_sum", format!("n={n} l={l}"), move || {
                lemma23_check(n, l)
            }));
        }
    }
    out
}

fn uv_checks(k_max: i64, n_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for n in 0..=n_max {
            out.push(check("u_equals_v", format!("k={k} n={n}"), move || {
                Ok(u_kn(k, n)? == v_kn(k, n)?)
            }));
            out.push(check("u_recurrence", format!("k={k} n={n}"), move || {
                u_recurrence_holds(k, n)
            }));
        }
    }
    for n in 0..=n_max {
        out.push(check("v_first_row", format!("n={n}"), move || {
            Ok(v_kn(1, n)? == sign_pow(n))
        }));
    }
    for k in 1..=k_max {
        out.push(check("v_zero_column", format!("k={k}"), move || {
            Ok(v_kn(k, 0)? == BigInt::from(k))
        }));
        for h in -NEGATIVE_SPAN..=-1 {
            out.push(check(
                "v_negative_vanishes",
                format!("k={k} h={h}"),
                move || Ok(v_kn(k, h)?.is_zero()),
            ));
        }
        for n in (-k - NEGATIVE_SPAN)..=-k {
            out.push(check(
                "v_vanishes_below_diagonal",
                format!("k={k} n={n}"),
                move || Ok(v_kn(k, n)?.is_zero()),
            ));
        }
        for n in -NEGATIVE_SPAN..=n_max {
            out.push(check("v_bounds_agree", format!("k={k} n={n}"), move || {
                Ok(v_kn(k, n)? == v_kn_truncated(k, n)?)
            }));
        }
    }
    out
}

fn recurrence_checks(k_max: i64, n_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for n in 0..=n_max {
            out.push(check(
                VRecurrence::Interior.name(),
                format!("k={k} n={n}"),
                move || uv_recurrence_check(VRecurrence::Interior, k, n),
            ));
        }
        out.push(check(
            VRecurrence::ZeroColumn.name(),
            format!("k={k} n=0"),
            move || uv_recurrence_check(VRecurrence::ZeroColumn, k, 0),
        ));
        for n in -n_max..=-1 {
            out.push(check(
                VRecurrence::NegativeColumn.name(),
                format!("k={k} n={n}"),
                move || uv_recurrence_check(VRecurrence::NegativeColumn, k, n),
            ));
        }
    }
    for n in 0..=n_max as u32 {
        for k in 1..=k_max as u32 {
            out.push(check(
                "partial_sum_split",
                format!("n={n} k={k}"),
                move || {
                    let (ni, l) = (i64::from(n), i64::from(n + k));
                    let whole = partial_signed_sum(n, k, 0, l)?;
                    let head = partial_signed_sum(n, k, 0, ni)?;
                    let tail = partial_signed_sum(n, k, ni + 1, l)?;
                    let closed = binom(l, ni + 1);
                    Ok(whole == &head + &tail
                        && head == sign_pow(ni + 1) * &closed
                        && tail == sign_pow(ni) * &closed)
                },
            ));
        }
    }
    out
}

fn continuant_checks(n_max: i64) -> Vec<Check> {
    let table = Arc::new(ContinuantTable::new(n_max.max(1) as usize));
    let mut out = Vec::new();
    for n in 1..=n_max {
        let t = Arc::clone(&table);
        out.push(check("strategies_agree", format!("n={n}"), move || {
            for s in ContinuantStrategy::ALL {
                if &k_poly(n, s)? != t.get(n) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
        let t = Arc::clone(&table);
        out.push(check("determinant_identity", format!("n={n}"), move || {
            let lhs = &(t.get(n - 1) * t.get(n - 1)) - &(t.get(n) * t.get(n - 2));
            Ok(lhs == IntPoly::one())
        }));
        let t = Arc::clone(&table);
        out.push(check("parity_and_monic", format!("n={n}"), move || {
            let k = t.get(n);
            let monic = k.leading_coeff().is_some_and(|c| *c == BigInt::from(1));
            let parity = k
                .coeffs()
                .iter()
                .enumerate()
                .all(|(d, c)| (d as i64 - n) % 2 == 0 || c.is_zero());
            Ok(monic && parity)
        }));
        out.push(check("matrix_power", format!("n={n}"), move || {
            let a = m_power(n, ExpStrategy::RepeatedMultiply)?;
            let b = m_power(n, ExpStrategy::SquareAndMultiply)?;
            let inv = m_power_inverse(n)?;
            Ok(a == b && a.det() == IntPoly::one() && a.mul(&inv) == Mat2::identity())
        }));
    }
    let side = n_max.min(20);
    for a in 1..=side {
        for b in 1..=side {
            out.push(check(
                "matrix_power_multiplicative",
                format!("a={a} b={b}"),
                move || {
                    let lhs = m_power(a + b, ExpStrategy::SquareAndMultiply)?;
                    let rhs = m_power(a, ExpStrategy::SquareAndMultiply)?
                        .mul(&m_power(b, ExpStrategy::SquareAndMultiply)?);
                    Ok(lhs == rhs)
                },
            ));
        }
    }
    for n in 1..=n_max.min(12) {
        let t = Arc::clone(&table);
        out.push(check(
            "general_specialization",
            format!("n={n} x=-3..3"),
            move || {
                for x in -3..=3i64 {
                    let seq = vec![x; n as usize];
                    let xb = BigInt::from(x);
                    let expected = t.get(n).eval(&xb);
                    if continuant_general(&seq) != expected
                        || tridiagonal_determinant(&seq) != expected
                    {
                        return Ok(false);
                    }
                    if m_general(&seq)? != m_power(n, ExpStrategy::SquareAndMultiply)?.eval(&xb) {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        ));
    }
    out
}

fn extraction_checks(n_max: i64) -> Vec<Check> {
    let table = Arc::new(ContinuantTable::new(2 * n_max.max(1) as usize));
    let mut out = Vec::new();
    for n in 1..=n_max as u32 {
        for l in 1..=n {
            let t = Arc::clone(&table);
            out.push(check(
                "coefficient_extraction",
                format!("n={n} l={l}"),
                move || Ok(coeff_extraction_with(&t, n, l)?.holds()),
            ));
        }
    }
    out
}

fn chebyshev_checks(n_max: i64) -> Vec<Check> {
    let table = Arc::new(ContinuantTable::new(n_max.max(1) as usize));
    let mut out = Vec::new();
    for n in 0..=n_max {
        let t = Arc::clone(&table);
        out.push(check("chebyshev_bridge", format!("n={n}"), move || {
            Ok(chebyshev_u(n)? == t.get(n).scale_variable(&BigInt::from(2)))
        }));
    }
    out
}

fn pascal_checks(n_max: i64, k_max: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for n in -n_max..=n_max {
        out.push(check(
            "oracle_agreement",
            format!("n={n} k=0..{k_max}"),
            move || Ok((0..=k_max).all(|k| binom(n, k) == binom_oracle(n, k as u64))),
        ));
    }
    for n in -n_max..=-1 {
        for i in 1..=k_max {
            out.push(check(
                "negative_pascal",
                format!("n={n} i={i}"),
                move || negative_pascal_holds(n, i),
            ));
        }
        out.push(check(
            "negative_sign_law",
            format!("n={n} k=0..{k_max}"),
            move || {
                Ok((0..=k_max).all(|k| {
                    let v = binom(n, k);
                    !v.is_zero() && (v > BigInt::zero()) == (k % 2 == 0)
                }))
            },
        ));
    }
    for n in 1..=n_max {
        out.push(check("classical_pascal", format!("n={n}"), move || {
            Ok((1..=n).all(|k| binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1)))
        }));
    }
    out.push(check("pascal_zero_corner", String::new(), || {
        Ok(binom(0, 0) == binom(-1, 0) + binom(-1, -1))
    }));
    out
}
