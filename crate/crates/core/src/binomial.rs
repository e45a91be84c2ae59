//! Binomial coefficients on all of `Z x Z`.
//!
//! Conventions:
//! - `binom(n, k) = 0` for `k < 0`;
//! - `binom(n, k) = (-1)^k binom(k - n - 1, k)` for `n < 0 <= k`;
//! - `binom(n, k) = 0` for `0 <= n < k`;
//! - the factorial quotient otherwise.
//!
//! For every `k >= 0` this agrees with the falling-factorial formula
//! `n (n-1) ... (n-k+1) / k!`, which [`binom_oracle`] evaluates directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, Result};

/// Generalized binomial coefficient. Total on `Z x Z`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        // k - n - 1 >= k >= 0, so this lands in the classical branch.
        let magnitude = classical(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return BigInt::zero();
    }
    classical(n, k)
}

/// `0 <= k <= n`. Multiplicative loop with exact division at every step.
fn classical(n: i64, k: i64) -> BigInt {
    debug_assert!(0 <= k && k <= n);
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc *= n - k + j;
        acc /= j;
    }
    acc
}

/// Falling-factorial evaluation `n (n-1) ... (n-k+1) / k!`.
///
/// # Panics
///
/// Panics if the division by `k!` is not exact, which cannot happen for
/// integer `n`; a panic here means the arithmetic is broken.
pub fn binom_oracle(n: i64, k: u64) -> BigInt {
    let mut numerator = BigInt::one();
    let mut factorial = BigInt::one();
    for j in 0..k {
        numerator *= BigInt::from(n) - j;
        factorial *= j + 1;
    }
    let (q, r) = numerator.div_rem(&factorial);
    assert!(
        r.is_zero(),
        "falling factorial of ({n}, {k}) not divisible by {k}!"
    );
    q
}

/// Checks `binom(n, i) = binom(n+1, i) - binom(n, i-1)` for `n < 0`, `i >= 1`.
pub fn negative_pascal_holds(n: i64, i: i64) -> Result<bool> {
    if n >= 0 || i < 1 {
        return Err(domain(
            "negative_pascal_holds",
            format!("requires n < 0 and i >= 1, got n={n}, i={i}"),
        ));
    }
    Ok(binom(n, i) == binom(n + 1, i) - binom(n, i - 1))
}

/// `(-1)^e` for any integer exponent.
pub fn sign_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn classical_and_zero_conventions() {
        assert_eq!(binom(5, 2), b(10));
        assert_eq!(binom(3, -1), b(0));
        assert_eq!(binom(2, 5), b(0));
        assert_eq!(binom(0, 0), b(1));
        assert_eq!(binom(-3, -2), b(0));
        assert_eq!(
            binom(60, 30),
            "118264581564861424".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn negative_upper_index_matches_oracle_values() {
        let oracle: Vec<BigInt> = (0..=6).map(|k| binom_oracle(-1, k)).collect();
        let expected: Vec<BigInt> = [1, -1, 1, -1, 1, -1, 1].iter().map(|&v| b(v)).collect();
        assert_eq!(oracle, expected);
        let direct: Vec<BigInt> = (0..=6).map(|k| binom(-1, k)).collect();
        assert_eq!(direct, expected);
        assert_eq!(binom_oracle(-2, 1), b(-2));
        assert_eq!(binom(-2, 1), b(-2));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(binom_oracle(7, 3), b(35));
        assert_eq!(binom_oracle(-3, 2), b(6));
        assert_eq!(binom_oracle(0, 0), b(1));
        assert_eq!(binom_oracle(3, 5), b(0));
    }

    #[test]
    fn negative_pascal_examples() {
        assert_eq!(negative_pascal_holds(-1, 1), Ok(true));
        // Both sides through the oracle: (-4 choose 3) = -20, (-3 choose 3) = -10,
        // (-4 choose 2) = 10.
        assert_eq!(binom_oracle(-4, 3), b(-20));
        assert_eq!(binom_oracle(-3, 3) - binom_oracle(-4, 2), b(-20));
        assert_eq!(negative_pascal_holds(-4, 3), Ok(true));
        assert!(negative_pascal_holds(0, 1).is_err());
        assert!(negative_pascal_holds(-2, 0).is_err());
    }

    #[test]
    fn negative_pascal_sweep() {
        for n in -50..=-1 {
            for i in 1..=100 {
                assert_eq!(negative_pascal_holds(n, i), Ok(true), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn oracle_agreement_sweep() {
        for n in -60..=60i64 {
            for k in 0..=120u64 {
                assert_eq!(binom(n, k as i64), binom_oracle(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn classical_pascal_including_zero_corner() {
        for n in 1..=60 {
            for k in 1..=n {
                assert_eq!(binom(n, k), binom(n - 1, k) + binom(n - 1, k - 1));
            }
        }
        assert_eq!(binom(0, 0), binom(-1, 0) + binom(-1, -1));
    }

    #[test]
    fn sign_law_for_negative_upper_index() {
        for n in -60..0 {
            for k in 0..=120 {
                let v = binom(n, k);
                assert!(!v.is_zero());
                assert_eq!(v > BigInt::zero(), k % 2 == 0, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sign_pow_parity() {
        assert_eq!(sign_pow(0), b(1));
        assert_eq!(sign_pow(-3), b(-1));
        assert_eq!(sign_pow(4), b(1));
    }
}
