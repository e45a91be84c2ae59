//! 2x2 matrices over an exact ring.

use num_bigint::BigInt;

use crate::poly::IntPoly;
use crate::ring::Ring;

/// Row-major 2x2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

pub type Mat2Poly = Mat2<IntPoly>;
pub type Mat2Int = Mat2<BigInt>;

impl<T: Ring> Mat2<T> {
    pub fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a11: self.a11.times(&rhs.a11).plus(&self.a12.times(&rhs.a21)),
            a12: self.a11.times(&rhs.a12).plus(&self.a12.times(&rhs.a22)),
            a21: self.a21.times(&rhs.a11).plus(&self.a22.times(&rhs.a21)),
            a22: self.a21.times(&rhs.a12).plus(&self.a22.times(&rhs.a22)),
        }
    }

    pub fn det(&self) -> T {
        self.a11.times(&self.a22).minus(&self.a12.times(&self.a21))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2 {
            a11: f(&self.a11),
            a12: f(&self.a12),
            a21: f(&self.a21),
            a22: f(&self.a22),
        }
    }
}

impl Mat2Poly {
    /// Evaluates every entry at `X = x`.
    pub fn eval(&self, x: &BigInt) -> Mat2Int {
        self.map(|p| p.eval(x))
    }
}
