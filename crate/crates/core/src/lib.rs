//! Exact arithmetic for continuant polynomials and generalized binomial
//! coefficients, with brute-force oracles and verification sweeps for the
//! binomial identity
//!
//! ```text
//! sum_{i=0}^{l} binom(n-i, i) binom(l+i, 2i+1) = sum_{i=0}^{l} binom(n-i, i-1) binom(l+i, 2i)
//! ```
//!
//! valid for all nonnegative `n` and `l`.

pub mod binomial;
pub mod continuant;
pub mod determinant;
pub mod error;
pub mod identity;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod verify;

pub use binomial::{binom, binom_oracle, negative_pascal_holds};
pub use continuant::{
    chebyshev_u, continuant_general, k_poly, m_general, m_power, ContinuantStrategy,
    ContinuantTable, ExpStrategy,
};
pub use error::{Error, Result};
pub use identity::{
    identity_report, left_sum, right_sum, subset_sums, IdentityReport, SubsetAnalysis, SubsetRecord,
};
pub use matrix::{Mat2, Mat2Int, Mat2Poly};
pub use num_bigint::BigInt;
pub use poly::{Degree, IntPoly};
pub use verify::{run_suite, Bounds, Suite, VerifySummary};
