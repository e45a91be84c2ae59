//! Continuant polynomials `K_n(X)`, Chebyshev polynomials of the second kind,
//! and the 2x2 matrix products they populate.
//!
//! `K_{-1} = 0`, `K_0 = 1` and `K_n = X K_{n-1} - K_{n-2}`. Equivalently,
//! `K_n` is the determinant of the `n x n` tridiagonal matrix with `X` on
//! the diagonal and `1` on both off-diagonals, and
//!
//! ```text
//! [[X, -1], [1, 0]]^n = [[K_n, -K_{n-1}], [K_{n-1}, -K_{n-2}]]
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

use crate::binomial::{binom, sign_pow};
use crate::determinant::{bareiss_determinant, cofactor_determinant};
use crate::error::{domain, Error, Result};
use crate::matrix::{Mat2, Mat2Int, Mat2Poly};
use crate::poly::IntPoly;

/// Independent ways of computing `K_n(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContinuantStrategy {
    /// Three-term recurrence.
    Recurrence,
    /// Entry `a11` of `[[X, -1], [1, 0]]^n`.
    MatrixPower,
    /// `sum_k (-1)^k binom(n-k, k) X^(n-2k)`.
    ClosedForm,
    /// Cofactor expansion of the tridiagonal determinant.
    DeterminantOracle,
}

impl ContinuantStrategy {
    pub const ALL: [ContinuantStrategy; 4] = [
        ContinuantStrategy::Recurrence,
        ContinuantStrategy::MatrixPower,
        ContinuantStrategy::ClosedForm,
        ContinuantStrategy::DeterminantOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContinuantStrategy::Recurrence => "recurrence",
            ContinuantStrategy::MatrixPower => "matrix_power",
            ContinuantStrategy::ClosedForm => "closed_form",
            ContinuantStrategy::DeterminantOracle => "determinant_oracle",
        }
    }
}

impl fmt::Display for ContinuantStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContinuantStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| domain("strategy", format!("unknown continuant strategy `{s}`")))
    }
}

/// How `m_power` raises the base matrix to the n-th power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpStrategy {
    RepeatedMultiply,
    /// Binary exponentiation, most significant bit first.
    SquareAndMultiply,
}

/// `K_n(X)` for `n >= -1`.
pub fn k_poly(n: i64, strategy: ContinuantStrategy) -> Result<IntPoly> {
    if n < -1 {
        return Err(domain("k_poly", format!("index must be >= -1, got {n}")));
    }
    match n {
        -1 => return Ok(IntPoly::zero()),
        0 => return Ok(IntPoly::one()),
        _ => {}
    }
    Ok(match strategy {
        ContinuantStrategy::Recurrence => k_recurrence(n),
        ContinuantStrategy::MatrixPower => m_power(n, ExpStrategy::SquareAndMultiply)?.a11,
        ContinuantStrategy::ClosedForm => k_closed_form(n),
        ContinuantStrategy::DeterminantOracle => k_determinant(n as usize),
    })
}

fn k_recurrence(n: i64) -> IntPoly {
    let x = IntPoly::x();
    let (mut prev, mut cur) = (IntPoly::zero(), IntPoly::one());
    for _ in 0..n {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn k_closed_form(n: i64) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    // E[n/2] on a nonnegative integer.
    for k in 0..=n / 2 {
        coeffs[(n - 2 * k) as usize] = sign_pow(k) * binom(n - k, k);
    }
    IntPoly::from_coeffs(coeffs)
}

fn k_determinant(n: usize) -> IntPoly {
    let matrix: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => IntPoly::x(),
                    1 => IntPoly::one(),
                    _ => IntPoly::zero(),
                })
                .collect()
        })
        .collect();
    cofactor_determinant(&matrix)
}

/// `[[X, -1], [1, 0]]`.
pub fn base_matrix() -> Mat2Poly {
    Mat2::new(
        IntPoly::x(),
        IntPoly::constant(-1),
        IntPoly::one(),
        IntPoly::zero(),
    )
}

/// `[[X, -1], [1, 0]]^n` for `n >= 1`.
pub fn m_power(n: i64, strategy: ExpStrategy) -> Result<Mat2Poly> {
    if n < 1 {
        return Err(domain("m_power", format!("exponent must be >= 1, got {n}")));
    }
    let base = base_matrix();
    Ok(match strategy {
        ExpStrategy::RepeatedMultiply => {
            let mut acc = base.clone();
            for _ in 1..n {
                acc = acc.mul(&base);
            }
            acc
        }
        ExpStrategy::SquareAndMultiply => {
            let mut acc = Mat2::identity();
            for bit in (0..64 - n.leading_zeros()).rev() {
                acc = acc.mul(&acc);
                if (n >> bit) & 1 == 1 {
                    acc = acc.mul(&base);
                }
            }
            acc
        }
    })
}

/// Inverse of `M_n(X)` in its explicit continuant form
/// `[[-K_{n-2}, K_{n-1}], [-K_{n-1}, K_n]]`, `n >= 1`.
pub fn m_power_inverse(n: i64) -> Result<Mat2Poly> {
    if n < 1 {
        return Err(domain(
            "m_power_inverse",
            format!("exponent must be >= 1, got {n}"),
        ));
    }
    let table = ContinuantTable::new(n as usize);
    Ok(Mat2::new(
        -table.get(n - 2),
        table.get(n - 1).clone(),
        -table.get(n - 1),
        table.get(n).clone(),
    ))
}

/// `[[a_n, -1], [1, 0]] ... [[a_1, -1], [1, 0]]` over the integers.
///
/// Its entries are `[[K_n(a_1..a_n), -K_{n-1}(a_2..a_n)], [K_{n-1}(a_1..a_{n-1}), -K_{n-2}(a_2..a_{n-1})]]`.
pub fn m_general(a: &[i64]) -> Result<Mat2Int> {
    if a.is_empty() {
        return Err(domain("m_general", "sequence must be nonempty"));
    }
    let mut acc = Mat2Int::identity();
    for &ai in a {
        let factor = Mat2::new(
            BigInt::from(ai),
            -BigInt::one(),
            BigInt::one(),
            BigInt::zero(),
        );
        acc = factor.mul(&acc);
    }
    Ok(acc)
}

/// Continuant `K_n(a_1, ..., a_n)` via `K_j = a_j K_{j-1} - K_{j-2}`.
/// The empty sequence gives 1.
pub fn continuant_general(a: &[i64]) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for &ai in a {
        let next = BigInt::from(ai) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// The same continuant as [`continuant_general`], computed as the
/// determinant of the tridiagonal matrix with diagonal `a` and unit
/// off-diagonals by fraction-free elimination.
pub fn tridiagonal_determinant(a: &[i64]) -> BigInt {
    let n = a.len();
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => BigInt::from(a[i]),
                    1 => BigInt::one(),
                    _ => BigInt::zero(),
                })
                .collect()
        })
        .collect();
    bareiss_determinant(&matrix)
}

/// Chebyshev polynomial of the second kind, `U_{n+2} = 2X U_{n+1} - U_n`.
pub fn chebyshev_u(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(domain(
            "chebyshev_u",
            format!("index must be >= 0, got {n}"),
        ));
    }
    let two_x = IntPoly::monomial(2, 1);
    let (mut cur, mut next) = (IntPoly::one(), two_x.clone());
    for _ in 0..n {
        let after = &(&two_x * &next) - &cur;
        cur = std::mem::replace(&mut next, after);
    }
    Ok(cur)
}

/// `K_{-1}, K_0, ..., K_max` precomputed by the recurrence.
#[derive(Debug, Clone)]
pub struct ContinuantTable {
    polys: Vec<IntPoly>,
}

impl ContinuantTable {
    pub fn new(max: usize) -> Self {
        let x = IntPoly::x();
        let mut polys = Vec::with_capacity(max + 2);
        polys.push(IntPoly::zero());
        polys.push(IntPoly::one());
        for j in 2..max + 2 {
            let next = &(&x * &polys[j - 1]) - &polys[j - 2];
            polys.push(next);
        }
        ContinuantTable { polys }
    }

    pub fn max_index(&self) -> i64 {
        self.polys.len() as i64 - 2
    }

    /// # Panics
    ///
    /// Panics if `n < -1` or `n` exceeds the table.
    pub fn get(&self, n: i64) -> &IntPoly {
        assert!(
            (-1..=self.max_index()).contains(&n),
            "continuant index {n} outside table"
        );
        &self.polys[(n + 1) as usize]
    }
}
