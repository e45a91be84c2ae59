//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order and kept canonical:
//! the last stored coefficient is never zero, and the zero polynomial has
//! no coefficients at all.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `c * X^d`.
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    /// Coefficient of `X^d`; zero beyond the degree.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Substitutes `X -> c X`, i.e. multiplies the degree-`d` coefficient by `c^d`.
    pub fn scale_variable(&self, c: &BigInt) -> Self {
        let mut power = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Self::from_coeffs(coeffs)
    }

    /// Multiplication by `X`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let zero = BigInt::zero();
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigInt::zero();
            let abs = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("X")?,
                1 => write!(f, "{abs}*X")?,
                _ if unit => write!(f, "X^{d}")?,
                _ => write!(f, "{abs}*X^{d}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        // Integers have no zero divisors, so the leading term survives.
        IntPoly { coeffs }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    // Schoolbook oracle on plain machine integers.
    fn oracle_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn oracle_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
        (0..a.len().max(b.len()))
            .map(|i| a.get(i).unwrap_or(&0) - b.get(i).unwrap_or(&0))
            .collect()
    }

    fn is_canonical(q: &IntPoly) -> bool {
        q.coeffs().last().is_none_or(|c| !c.is_zero())
    }

    #[test]
    fn constructors() {
        assert!(IntPoly::constant(0).coeffs().is_empty());
        assert_eq!(IntPoly::constant(5), p(&[5]));
        assert_eq!(IntPoly::x().coeffs(), p(&[0, 1]).coeffs());
        assert_eq!(IntPoly::x().coeffs().len(), 2);
        assert_eq!(IntPoly::monomial(3, 2), p(&[0, 0, 3]));
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p(&[0, 1]) + &p(&[1]), p(&[1, 1]));
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1]), p(&[0, 0, 1]));
        let expected = oracle_sub(&[0, 0, 1], &[1]);
        assert_eq!(expected, vec![-1, 0, 1]);
        assert_eq!(&p(&[0, 0, 1]) - &p(&[1]), p(&expected));
        assert!((&p(&[1, 2]) - &p(&[1, 2])).is_zero());
    }

    #[test]
    fn coefficient_access_and_degree() {
        let q = p(&[-1, 0, 1]);
        assert_eq!(q.coeff(2), BigInt::from(1));
        assert_eq!(q.coeff(5), BigInt::zero());
        assert_eq!(p(&[0, 1]).degree(), Degree::Finite(1));
        assert_eq!(IntPoly::zero().degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn eval_and_scale() {
        let q = p(&[0, -2, 0, 1]);
        assert_eq!(q.eval(&BigInt::from(3)), BigInt::from(21));
        assert_eq!(q.scale_variable(&BigInt::from(2)), p(&[0, -4, 0, 8]));
        assert_eq!(q.shift_up(), p(&[0, 0, -2, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "X^3 - 2*X");
        assert_eq!(p(&[-1, 1]).to_string(), "X - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn exhaustive_small_products_match_oracle() {
        let vals = [-2i64, 0, 3];
        for a0 in vals {
            for a1 in vals {
                for b0 in vals {
                    for b1 in vals {
                        for b2 in vals {
                            let a = [a0, a1];
                            let b = [b0, b1, b2];
                            assert_eq!(&p(&a) * &p(&b), p(&oracle_mul(&a, &b)));
                            assert_eq!(&p(&a) - &p(&b), p(&oracle_sub(&a, &b)));
                        }
                    }
                }
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 0..=9)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            let (a, b, c) = (p(&a), p(&b), p(&c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn operations_stay_canonical(a in small_poly(), b in small_poly()) {
            let (a, b) = (p(&a), p(&b));
            prop_assert!(is_canonical(&a));
            prop_assert!(is_canonical(&(&a + &b)));
            prop_assert!(is_canonical(&(&a - &b)));
            prop_assert!(is_canonical(&(&a * &b)));
            prop_assert!(is_canonical(&-&a));
        }

        #[test]
        fn degree_is_additive(a in small_poly(), b in small_poly()) {
            let (a, b) = (p(&a), p(&b));
            if let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) {
                prop_assert_eq!((&a * &b).degree(), Degree::Finite(da + db));
            } else {
                prop_assert_eq!((&a * &b).degree(), Degree::NegInfinity);
            }
        }

        #[test]
        fn multiplication_matches_oracle(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&p(&a) * &p(&b), p(&oracle_mul(&a, &b)));
        }
    }
}
