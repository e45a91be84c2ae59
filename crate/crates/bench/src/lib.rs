//! Benchmark fixtures shared by the criterion targets.

use binocont_core::ContinuantStrategy;

/// Degrees used when comparing continuant strategies.
pub const DEGREES: [i64; 4] = [16, 32, 64, 128];

/// Largest degree the determinant oracle is benchmarked at.
pub const DETERMINANT_LIMIT: i64 = 64;

pub fn strategies_for(n: i64) -> impl Iterator<Item = ContinuantStrategy> {
    ContinuantStrategy::ALL
        .into_iter()
        .filter(move |s| *s != ContinuantStrategy::DeterminantOracle || n <= DETERMINANT_LIMIT)
}
