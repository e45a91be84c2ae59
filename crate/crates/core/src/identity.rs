//! The two binomial sums
//!
//! ```text
//! L(n, l) = sum_{i=0}^{l} binom(n-i, i)   binom(l+i, 2i+1)
//! R(n, l) = sum_{i=0}^{l} binom(n-i, i-1) binom(l+i, 2i)
//! ```
//!
//! which agree for every pair of nonnegative integers, together with the
//! auxiliary sequences and partial sums that establish the agreement, the
//! coefficient-extraction argument on continuants, and an explorer for
//! sub-sums over index subsets.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};

use crate::binomial::{binom, sign_pow};
use crate::continuant::ContinuantTable;
use crate::error::{domain, Error, Result};
use crate::poly::IntPoly;

fn left_term(n: i64, l: i64, i: i64) -> BigInt {
    binom(n - i, i) * binom(l + i, 2 * i + 1)
}

fn right_term(n: i64, l: i64, i: i64) -> BigInt {
    binom(n - i, i - 1) * binom(l + i, 2 * i)
}

/// `-binom(n-i, i) binom(l+i, 2i+1) + binom(n-i, i-1) binom(l+i, 2i)`.
pub fn signed_term(n: i64, l: i64, i: i64) -> BigInt {
    right_term(n, l, i) - left_term(n, l, i)
}

pub fn left_sum(n: u32, l: u32) -> BigInt {
    let (n, l) = (i64::from(n), i64::from(l));
    (0..=l).map(|i| left_term(n, l, i)).sum()
}

pub fn right_sum(n: u32, l: u32) -> BigInt {
    let (n, l) = (i64::from(n), i64::from(l));
    (0..=l).map(|i| right_term(n, l, i)).sum()
}

/// Both sums at one `(n, l)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: u32,
    pub l: u32,
    pub left: BigInt,
    pub right: BigInt,
    pub equal: bool,
}

pub fn identity_report(n: u32, l: u32) -> IdentityReport {
    let left = left_sum(n, l);
    let right = right_sum(n, l);
    let equal = left == right;
    IdentityReport {
        n,
        l,
        left,
        right,
        equal,
    }
}

/// `sum_{i=0}^{n} signed_term(n, l, i)` for `l > n >= 0`.
pub fn boundary_sum(n: u32, l: u32) -> Result<BigInt> {
    if l <= n {
        return Err(domain(
            "boundary_sum",
            format!("requires l > n, got n={n}, l={l}"),
        ));
    }
    let (n, l) = (i64::from(n), i64::from(l));
    Ok((0..=n).map(|i| signed_term(n, l, i)).sum())
}

/// Checks `boundary_sum(n, l) = (-1)^(n+1) binom(l, n+1)` for `l > n >= 0`.
pub fn lemma23_check(n: u32, l: u32) -> Result<bool> {
    let lhs = boundary_sum(n, l)?;
    let (n, l) = (i64::from(n), i64::from(l));
    Ok(lhs == sign_pow(n + 1) * binom(l, n + 1))
}

/// `u_{k,n} = (-1)^n binom(n+k, n+1)`, `k >= 1`.
pub fn u_kn(k: i64, n: i64) -> Result<BigInt> {
    if k < 1 {
        return Err(domain("u_kn", format!("k must be >= 1, got {k}")));
    }
    Ok(sign_pow(n) * binom(n + k, n + 1))
}

/// `v_{k,n} = sum_{i=n+1}^{n+k} signed_term(n, n+k, i)`, `k >= 1`, with the
/// literal summation bounds.
pub fn v_kn(k: i64, n: i64) -> Result<BigInt> {
    if k < 1 {
        return Err(domain("v_kn", format!("k must be >= 1, got {k}")));
    }
    Ok((n + 1..=n + k).map(|i| signed_term(n, n + k, i)).sum())
}

/// `v_{k,n}` with the lower bound clamped at zero. Terms with `i < 0` vanish,
/// so this always equals [`v_kn`].
pub fn v_kn_truncated(k: i64, n: i64) -> Result<BigInt> {
    if k < 1 {
        return Err(domain("v_kn_truncated", format!("k must be >= 1, got {k}")));
    }
    Ok(((n + 1).max(0)..=n + k)
        .map(|i| signed_term(n, n + k, i))
        .sum())
}

/// Recurrences satisfied by `v_{k,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VRecurrence {
    /// `v_{k+1,n+1} = v_{k,n+1} - v_{k+1,n}` for `n >= 0`.
    Interior,
    /// `v_{k+1,0} = 1 + v_{k,0} - v_{k+1,-1}`.
    ZeroColumn,
    /// `v_{k+1,n} = v_{k,n} - v_{k+1,n-1}` for `n <= -1`.
    NegativeColumn,
}

impl VRecurrence {
    pub const ALL: [VRecurrence; 3] = [
        VRecurrence::Interior,
        VRecurrence::ZeroColumn,
        VRecurrence::NegativeColumn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VRecurrence::Interior => "v_recurrence_interior",
            VRecurrence::ZeroColumn => "v_recurrence_zero_column",
            VRecurrence::NegativeColumn => "v_recurrence_negative_column",
        }
    }
}

/// Evaluates the chosen recurrence at `(k, n)` by direct summation of every
/// `v` involved. For [`VRecurrence::ZeroColumn`], `n` must be 0.
pub fn uv_recurrence_check(kind: VRecurrence, k: i64, n: i64) -> Result<bool> {
    let in_domain = k >= 1
        && match kind {
            VRecurrence::Interior => n >= 0,
            VRecurrence::ZeroColumn => n == 0,
            VRecurrence::NegativeColumn => n <= -1,
        };
    if !in_domain {
        return Err(domain(
            "uv_recurrence_check",
            format!(
                "({}, k={k}, n={n}) outside the recurrence's domain",
                kind.name()
            ),
        ));
    }
    Ok(match kind {
        VRecurrence::Interior => v_kn(k + 1, n + 1)? == v_kn(k, n + 1)? - v_kn(k + 1, n)?,
        VRecurrence::ZeroColumn => v_kn(k + 1, 0)? == 1 + v_kn(k, 0)? - v_kn(k + 1, -1)?,
        VRecurrence::NegativeColumn => v_kn(k + 1, n)? == v_kn(k, n)? - v_kn(k + 1, n - 1)?,
    })
}

/// `u_{k+1,n+1} = u_{k,n+1} - u_{k+1,n}` for `k >= 1`, `n >= 0`.
pub fn u_recurrence_holds(k: i64, n: i64) -> Result<bool> {
    if k < 1 || n < 0 {
        return Err(domain(
            "u_recurrence_holds",
            format!("requires k >= 1 and n >= 0, got k={k}, n={n}"),
        ));
    }
    Ok(u_kn(k + 1, n + 1)? == u_kn(k, n + 1)? - u_kn(k + 1, n)?)
}

/// `S_{a,b} = sum_{i=a}^{b} signed_term(n, n+k, i)` for `0 <= a <= b <= n+k`.
pub fn partial_signed_sum(n: u32, k: u32, a: i64, b: i64) -> Result<BigInt> {
    if k < 1 {
        return Err(domain("partial_signed_sum", "k must be >= 1"));
    }
    let (n, l) = (i64::from(n), i64::from(n) + i64::from(k));
    if a < 0 || a > b || b > l {
        return Err(domain(
            "partial_signed_sum",
            format!("requires 0 <= a <= b <= n+k = {l}, got a={a}, b={b}"),
        ));
    }
    Ok((a..=b).map(|i| signed_term(n, l, i)).sum())
}

/// Outcome of the coefficient-extraction argument at one `(n, l)`,
/// `1 <= l <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffExtraction {
    pub n: u32,
    pub l: u32,
    /// Degree-`(n+1)` coefficient of `K_n K_{2l-1}`.
    pub u: BigInt,
    /// Degree-`(n+1)` coefficient of `K_{n-1} K_{2l}`.
    pub v: BigInt,
    /// `u == (-1)^(l+1) * left_sum(n, l)`.
    pub matches_left: bool,
    /// `v == (-1)^(l+1) * right_sum(n, l)`.
    pub matches_right: bool,
    /// `-K_n K_{2l-1} + K_{n-1} K_{2l}` equals `K_{n-2l-1}` when
    /// `2l+1 <= n`, and `-K_{2l-n-1}` otherwise.
    pub polynomial_identity: bool,
}

impl CoeffExtraction {
    pub fn holds(&self) -> bool {
        self.u == self.v && self.matches_left && self.matches_right && self.polynomial_identity
    }
}

pub fn coeff_extraction_check(n: u32, l: u32) -> Result<CoeffExtraction> {
    let table = ContinuantTable::new(2 * n.max(l) as usize);
    coeff_extraction_with(&table, n, l)
}

/// As [`coeff_extraction_check`], reusing precomputed continuants. The table
/// must reach index `max(n, 2l)`.
pub fn coeff_extraction_with(table: &ContinuantTable, n: u32, l: u32) -> Result<CoeffExtraction> {
    if l < 1 || l > n {
        return Err(domain(
            "coeff_extraction_check",
            format!("requires 1 <= l <= n, got n={n}, l={l}"),
        ));
    }
    let (ni, li) = (i64::from(n), i64::from(l));
    if table.max_index() < ni.max(2 * li) {
        return Err(domain(
            "coeff_extraction_check",
            "continuant table too small",
        ));
    }
    let lhs = table.get(ni) * table.get(2 * li - 1);
    let rhs = table.get(ni - 1) * table.get(2 * li);
    let target = n as usize + 1;
    let u = lhs.coeff(target);
    let v = rhs.coeff(target);
    let sign = sign_pow(li + 1);
    let combined: IntPoly = &rhs - &lhs;
    let expected = if 2 * li < ni {
        table.get(ni - 2 * li - 1).clone()
    } else {
        -table.get(2 * li - ni - 1)
    };
    Ok(CoeffExtraction {
        n,
        l,
        matches_left: u == &sign * left_sum(n, l),
        matches_right: v == &sign * right_sum(n, l),
        polynomial_identity: combined == expected,
        u,
        v,
    })
}

/// One index subset with the restrictions of both sums to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetRecord {
    pub subset: Vec<u32>,
    pub u: BigInt,
    pub v: BigInt,
}

/// A pair `(I, J)` of nonempty subsets with `u_I = v_J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub value: BigInt,
    pub u_subset: Vec<u32>,
    pub v_subset: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetAnalysis {
    pub n: u32,
    pub l: u32,
    /// Nonempty subsets of `{0..l}`, by size then lexicographically.
    pub records: Vec<SubsetRecord>,
    /// Ordered by the `u` subset's record position, then the `v` subset's.
    pub collisions: Vec<Collision>,
    /// Common value of the full sums.
    pub full_value: BigInt,
}

impl SubsetAnalysis {
    pub fn collision_values(&self) -> BTreeSet<BigInt> {
        self.collisions.iter().map(|c| c.value.clone()).collect()
    }

    /// Whether `u_I` matches some `v_J` exactly when `u_I` is zero or the
    /// full common value.
    pub fn only_trivial_collisions(&self) -> bool {
        let v_values: BTreeSet<&BigInt> = self.records.iter().map(|r| &r.v).collect();
        self.records.iter().all(|r| {
            let trivial = r.u.is_zero() || r.u == self.full_value;
            v_values.contains(&r.u) == trivial
        })
    }
}

pub const DEFAULT_SUBSET_CAP: u128 = 4096;

/// Sub-sums of both sides over every nonempty `I` in `{0..l}`.
/// Fails when `2^(l+1)` exceeds `cap`.
pub fn subset_sums(n: u32, l: u32, cap: u128) -> Result<SubsetAnalysis> {
    let needed = 1u128.checked_shl(l + 1).unwrap_or(u128::MAX);
    if l >= 127 || needed > cap {
        return Err(Error::SubsetCap { l, needed, cap });
    }
    let (ni, li) = (i64::from(n), i64::from(l));
    let u_terms: Vec<BigInt> = (0..=li).map(|i| left_term(ni, li, i)).collect();
    let v_terms: Vec<BigInt> = (0..=li).map(|i| right_term(ni, li, i)).collect();

    let records: Vec<SubsetRecord> = (1..=l as usize + 1)
        .flat_map(|size| (0..=l).combinations(size))
        .map(|subset| {
            let u = subset.iter().map(|&i| &u_terms[i as usize]).sum();
            let v = subset.iter().map(|&i| &v_terms[i as usize]).sum();
            SubsetRecord { subset, u, v }
        })
        .collect();

    let mut by_v: HashMap<&BigInt, Vec<usize>> = HashMap::new();
    for (idx, r) in records.iter().enumerate() {
        by_v.entry(&r.v).or_default().push(idx);
    }
    let mut collisions = Vec::new();
    for r in &records {
        if let Some(js) = by_v.get(&r.u) {
            for &j in js {
                collisions.push(Collision {
                    value: r.u.clone(),
                    u_subset: r.subset.clone(),
                    v_subset: records[j].subset.clone(),
                });
            }
        }
    }

    Ok(SubsetAnalysis {
        n,
        l,
        full_value: u_terms.iter().sum(),
        records,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binom_oracle;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    // Falling-factorial based summation, independent of `binom`.
    fn oracle_binom(n: i64, k: i64) -> BigInt {
        if k < 0 {
            BigInt::zero()
        } else {
            binom_oracle(n, k as u64)
        }
    }

    fn oracle_left(n: i64, l: i64) -> BigInt {
        (0..=l)
            .map(|i| oracle_binom(n - i, i) * oracle_binom(l + i, 2 * i + 1))
            .sum()
    }

    fn oracle_right(n: i64, l: i64) -> BigInt {
        (0..=l)
            .map(|i| oracle_binom(n - i, i - 1) * oracle_binom(l + i, 2 * i))
            .sum()
    }

    #[test]
    fn sum_examples() {
        assert_eq!(left_sum(1, 1), b(1));
        assert_eq!(left_sum(0, 0), b(0));
        assert_eq!(right_sum(0, 0), b(0));
        assert_eq!(left_sum(7, 4), b(128));
        assert_eq!(right_sum(7, 4), b(128));
        assert_eq!(right_sum(8, 8), b(7896));
        assert_eq!(right_sum(5, 2), b(6));
    }

    #[test]
    fn report_examples() {
        let r = identity_report(3, 5);
        assert_eq!(
            (r.left.clone(), r.right.clone(), r.equal),
            (b(46), b(46), true)
        );
        let r = identity_report(6, 7);
        assert_eq!(
            (r.left.clone(), r.right.clone(), r.equal),
            (b(1163), b(1163), true)
        );
        let r = identity_report(0, 9);
        assert!(r.equal);
        assert_eq!(r.left, oracle_left(0, 9));
        assert_eq!(r.right, oracle_right(0, 9));
    }

    #[test]
    fn sums_match_oracle() {
        for n in 0..=20 {
            for l in 0..=20 {
                assert_eq!(left_sum(n, l), oracle_left(n.into(), l.into()));
                assert_eq!(right_sum(n, l), oracle_right(n.into(), l.into()));
            }
        }
    }

    #[test]
    fn boundary_sum_examples() {
        assert_eq!(boundary_sum(0, 1), Ok(b(-1)));
        assert_eq!(lemma23_check(0, 1), Ok(true));
        // n = 2, l = 5 summed by hand through the oracle.
        let lhs: BigInt = (0..=2)
            .map(|i| {
                oracle_binom(2 - i, i - 1) * oracle_binom(5 + i, 2 * i)
                    - oracle_binom(2 - i, i) * oracle_binom(5 + i, 2 * i + 1)
            })
            .sum();
        assert_eq!(lhs, -binom_oracle(5, 3));
        assert_eq!(lemma23_check(2, 5), Ok(true));
        assert!(lemma23_check(3, 3).is_err());
        assert!(lemma23_check(4, 2).is_err());
    }

    #[test]
    fn boundary_sum_sweep() {
        for l in 1..=40 {
            for n in 0..l {
                assert_eq!(lemma23_check(n, l), Ok(true), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn uv_examples() {
        for n in 0..=10 {
            assert_eq!(v_kn(1, n).unwrap(), sign_pow(n));
        }
        for k in 1..=10 {
            assert_eq!(v_kn(k, 0).unwrap(), b(k));
        }
        assert_eq!(u_kn(3, 2).unwrap(), b(10));
        for k in 1..=8 {
            for h in -10..=-1 {
                assert_eq!(v_kn(k, h).unwrap(), b(0), "k={k} h={h}");
            }
        }
        assert!(u_kn(0, 1).is_err());
        assert!(v_kn(0, 1).is_err());
    }

    #[test]
    fn literal_and_truncated_bounds_agree() {
        for k in 1..=15 {
            for n in -20..=15 {
                assert_eq!(v_kn(k, n), v_kn_truncated(k, n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn u_equals_v() {
        for k in 1..=25 {
            for n in 0..=25 {
                assert_eq!(u_kn(k, n).unwrap(), v_kn(k, n).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn recurrence_examples_and_domains() {
        assert_eq!(uv_recurrence_check(VRecurrence::Interior, 1, 0), Ok(true));
        assert_eq!(uv_recurrence_check(VRecurrence::ZeroColumn, 3, 0), Ok(true));
        assert_eq!(
            uv_recurrence_check(VRecurrence::NegativeColumn, 2, -1),
            Ok(true)
        );
        assert!(uv_recurrence_check(VRecurrence::Interior, 1, -1).is_err());
        assert!(uv_recurrence_check(VRecurrence::ZeroColumn, 1, 1).is_err());
        assert!(uv_recurrence_check(VRecurrence::NegativeColumn, 1, 0).is_err());
        assert!(uv_recurrence_check(VRecurrence::Interior, 0, 0).is_err());
        for k in 1..=15 {
            for n in 0..=15 {
                assert_eq!(uv_recurrence_check(VRecurrence::Interior, k, n), Ok(true));
            }
            assert_eq!(uv_recurrence_check(VRecurrence::ZeroColumn, k, 0), Ok(true));
            for n in -15..=-1 {
                assert_eq!(
                    uv_recurrence_check(VRecurrence::NegativeColumn, k, n),
                    Ok(true)
                );
            }
        }
        for k in 1..=20 {
            for n in 0..=20 {
                assert_eq!(u_recurrence_holds(k, n), Ok(true));
            }
        }
    }

    #[test]
    fn vanishing_below_the_diagonal() {
        for k in 1..=15 {
            for n in -40..=-k {
                assert!(v_kn(k, n).unwrap().is_zero(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn partial_sums_split() {
        for n in 0..=10u32 {
            for k in 1..=10u32 {
                let l = i64::from(n + k);
                let ni = i64::from(n);
                let whole = partial_signed_sum(n, k, 0, l).unwrap();
                let head = partial_signed_sum(n, k, 0, ni).unwrap();
                let tail = partial_signed_sum(n, k, ni + 1, l).unwrap();
                assert_eq!(whole, &head + &tail);
                if n + k <= 20 {
                    assert_eq!(head, sign_pow(ni + 1) * binom(l, ni + 1));
                    assert_eq!(tail, sign_pow(ni) * binom(l, ni + 1));
                    assert!(whole.is_zero());
                }
            }
        }
        assert!(partial_signed_sum(2, 2, 3, 2).is_err());
        assert!(partial_signed_sum(2, 2, 0, 5).is_err());
        assert!(partial_signed_sum(2, 0, 0, 1).is_err());
    }

    #[test]
    fn coefficient_extraction_examples() {
        // K_3 K_1 = (X^3 - 2X) X, K_2 K_2 = (X^2 - 1)^2; degree-4 coefficients are both 1.
        let c = coeff_extraction_check(3, 1).unwrap();
        assert_eq!((c.u.clone(), c.v.clone()), (b(1), b(1)));
        assert!(c.holds());
        let c = coeff_extraction_check(7, 4).unwrap();
        assert_eq!(c.u, b(-128));
        assert!(c.holds());
        assert!(coeff_extraction_check(3, 0).is_err());
        assert!(coeff_extraction_check(3, 4).is_err());
    }

    #[test]
    fn coefficient_extraction_sweep() {
        let table = ContinuantTable::new(60);
        for n in 1..=30 {
            for l in 1..=n {
                assert!(
                    coeff_extraction_with(&table, n, l).unwrap().holds(),
                    "n={n} l={l}"
                );
            }
        }
    }

    #[test]
    fn subset_tables() {
        let a = subset_sums(7, 4, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(a.records.len(), 31);
        assert_eq!(a.records[1].subset, vec![1]);
        assert_eq!(
            (a.records[1].u.clone(), a.records[1].v.clone()),
            (b(60), b(10))
        );
        let r = a.records.iter().find(|r| r.subset == [0, 1, 2, 3]).unwrap();
        assert_eq!((r.u.clone(), r.v.clone()), (b(128), b(127)));
        assert_eq!(a.full_value, b(128));
        assert_eq!(a.collision_values(), [b(0), b(128)].into_iter().collect());
        assert!(a.only_trivial_collisions());
        assert_eq!(a.collisions.len(), 5);
    }

    #[test]
    fn subset_small_case_and_cap() {
        let a = subset_sums(3, 1, 4).unwrap();
        let subsets: Vec<Vec<u32>> = a.records.iter().map(|r| r.subset.clone()).collect();
        assert_eq!(subsets, vec![vec![0], vec![1], vec![0, 1]]);
        // u_{0} = binom(3,0) binom(1,1) = 1, u_{1} = binom(2,1) binom(2,3) = 0,
        // v_{0} = 0, v_{1} = binom(2,0) binom(2,2) = 1.
        let uv: Vec<(BigInt, BigInt)> = a
            .records
            .iter()
            .map(|r| (r.u.clone(), r.v.clone()))
            .collect();
        assert_eq!(uv, vec![(b(1), b(0)), (b(0), b(1)), (b(1), b(1))]);
        assert!(matches!(subset_sums(3, 1, 3), Err(Error::SubsetCap { .. })));
        assert!(subset_sums(0, 200, u128::MAX).is_err());
    }
}
