//! Exact determinants of square matrices, used as brute-force oracles.

use num_bigint::BigInt;
use std::collections::HashMap;

use crate::ring::Ring;

/// Laplace expansion along the leftmost remaining column, skipping zero
/// entries and memoizing on the set of rows still in play.
///
/// Works over any exact ring. Cost is exponential for dense matrices but
/// polynomial for banded ones such as tridiagonal matrices.
///
/// # Panics
///
/// Panics if `matrix` is not square.
pub fn cofactor_determinant<T: Ring>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    let rows = RowSet::full(n);
    let mut memo = HashMap::new();
    expand(matrix, &rows, 0, &mut memo)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn full(n: usize) -> Self {
        let mut words = vec![0u64; n.div_ceil(64)];
        for r in 0..n {
            words[r / 64] |= 1 << (r % 64);
        }
        RowSet(words)
    }

    fn contains(&self, r: usize) -> bool {
        self.0[r / 64] & (1 << (r % 64)) != 0
    }

    fn without(&self, r: usize) -> Self {
        let mut next = self.clone();
        next.0[r / 64] &= !(1 << (r % 64));
        next
    }
}

fn expand<T: Ring>(
    matrix: &[Vec<T>],
    rows: &RowSet,
    col: usize,
    memo: &mut HashMap<RowSet, T>,
) -> T {
    let n = matrix.len();
    if col == n {
        return T::one();
    }
    if let Some(v) = memo.get(rows) {
        return v.clone();
    }
    let mut acc = T::zero();
    let mut position = 0usize;
    for r in 0..n {
        if !rows.contains(r) {
            continue;
        }
        let entry = &matrix[r][col];
        if !entry.is_zero() {
            let minor = expand(matrix, &rows.without(r), col + 1, memo);
            let term = entry.times(&minor);
            acc = if position.is_multiple_of(2) {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        position += 1;
    }
    memo.insert(rows.clone(), acc.clone());
    acc
}

/// Fraction-free Gaussian elimination (Bareiss) over the integers. O(n^3).
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn small_integer_determinants() {
        let a = int_matrix(&[&[1, 1, 0], &[1, 2, 1], &[0, 1, 3]]);
        assert_eq!(cofactor_determinant(&a), BigInt::from(2));
        assert_eq!(bareiss_determinant(&a), BigInt::from(2));
        let b = int_matrix(&[&[0, 2, 1], &[3, 0, 4], &[5, 6, 0]]);
        // 0 - 2*(0 - 20) + 1*(18 - 0) = 58
        assert_eq!(cofactor_determinant(&b), BigInt::from(58));
        assert_eq!(bareiss_determinant(&b), BigInt::from(58));
        assert_eq!(bareiss_determinant(&[]), BigInt::one());
        let singular = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(bareiss_determinant(&singular), BigInt::zero());
    }

    #[test]
    fn both_routes_agree_on_dense_matrices() {
        // Deterministic pseudo-random entries in [-4, 4].
        let mut state = 12345u64;
        for n in 1..=7 {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            state = state
                                .wrapping_mul(6364136223846793005)
                                .wrapping_add(1442695040888963407);
                            BigInt::from(((state >> 33) % 9) as i64 - 4)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(cofactor_determinant(&m), bareiss_determinant(&m), "n={n}");
        }
    }

    #[test]
    fn polynomial_entries() {
        // det [[X, 1], [1, X]] = X^2 - 1
        let x = IntPoly::x();
        let one = IntPoly::one();
        let m = vec![vec![x.clone(), one.clone()], vec![one, x]];
        assert_eq!(cofactor_determinant(&m), IntPoly::from_i64s(&[-1, 0, 1]));
    }
}
