//! The σ-sequence: anti-diagonal sums of the σ-matrix, their upper/lower
//! decompositions, and the interval form of the partial-sum law.
//!
//! σ(n) = Σ_{j=0}^{n} σ_j(n − j). The production path never materializes
//! the matrix and never consults divisor counts (that would be circular
//! with the divisor engine): it enumerates the supports (pentagonal g,
//! column j, lace step t) with g + (t + 1)·j = n, which is exactly the set
//! of nonzero lacing summands on the anti-diagonal.
//!
//! Two split conventions are provided because the source definitions of
//! the "upper" sequence disagree under every natural reading; both are
//! computed, both satisfy upper + lower = σ, and the comparison against
//! the partial-sum interval law is reported by the verify front end rather
//! than asserted.

use crate::error::{Error, Result};
use crate::pentagonal::{pentagonal_terms_up_to, sigma0, SignSequence};

/// σ(0..N) as anti-diagonal sums of the σ-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSequence {
    values: SignSequence,
}

impl SigmaSequence {
    /// Wrap precomputed values. Exposed so tests and callers can feed the
    /// divisor engine hand-built (possibly deliberately corrupted) input.
    pub fn from_values(values: Vec<i64>) -> Self {
        SigmaSequence {
            values: SignSequence::new(values),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn at(&self, n: i64) -> i64 {
        self.values.at(n)
    }

    pub fn values(&self) -> &[i64] {
        self.values.values()
    }
}

/// How to split the anti-diagonal sum into "upper" and "lower" parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitConvention {
    /// upper(n) sums the terms with n > 2j; lower(n) the rest (n ≤ 2j).
    PaperLiteral,
    /// upper(n) sums the cells tagged Upper (j > n − j); lower(n) the rest.
    RegionBased,
}

/// An upper/lower decomposition of σ; upper(n) + lower(n) = σ(n) under
/// either convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaSplit {
    pub convention: SplitConvention,
    pub upper: SignSequence,
    pub lower: SignSequence,
}

/// σ(0..N) via pentagonal-support enumeration.
///
/// The j = 0 column contributes σ₀(n); every other nonzero summand is
/// σ₀(g) landing at n = g + (t + 1)·j, so for each pentagonal term the
/// inner loops walk all multiples of every stride. Runs in
/// O(√N · N log N) additions with O(N) memory.
pub fn sigma_up_to(n: usize) -> Result<SigmaSequence> {
    let mut values: Vec<i64> = Vec::new();
    values
        .try_reserve_exact(n + 1)
        .map_err(|_| Error::Resource(format!("cannot allocate {} sigma values", n + 1)))?;
    values.resize(n + 1, 0);
    for term in pentagonal_terms_up_to(n as i64) {
        let g = term.value as usize;
        values[g] += term.sign;
        let reach = n - g;
        for j in 1..=reach {
            for m in (j..=reach).step_by(j) {
                values[g + m] += term.sign;
            }
        }
    }
    Ok(SigmaSequence {
        values: SignSequence::new(values),
    })
}

/// σ(0..N) by streaming the matrix columns: column j's recursion state is
/// one O(N) buffer, accumulated into σ(i + j). O(N²) time, O(N) memory.
/// Kept as an independent route for cross-checking the support
/// enumeration.
#[allow(dead_code)]
pub(crate) fn sigma_up_to_streaming(n: usize) -> SigmaSequence {
    let sigma_col: Vec<i64> = (0..=n).map(|i| sigma0(i as i64)).collect();
    let mut values = vec![0i64; n + 1];
    let mut column = vec![0i64; n + 1];
    for m in 0..=n {
        values[m] += sigma_col[m]; // j = 0
    }
    for j in 1..=n {
        let height = n - j;
        for i in 0..=height {
            column[i] = if i == 0 {
                1
            } else if i >= j {
                sigma_col[i] + column[i - j]
            } else {
                sigma_col[i]
            };
            values[i + j] += column[i];
        }
    }
    SigmaSequence {
        values: SignSequence::new(values),
    }
}

/// Decompose σ(0..N) under the chosen convention.
pub fn split_sigma(n: usize, convention: SplitConvention) -> SigmaSplit {
    let sigma_col: Vec<i64> = (0..=n).map(|i| sigma0(i as i64)).collect();
    let mut upper = vec![0i64; n + 1];
    let mut lower = vec![0i64; n + 1];
    let mut column = vec![0i64; n + 1];
    for m in 0..=n {
        // j = 0 cell (i = m): never in the upper triangle, and m > 2j
        // fails only at m = 0.
        let is_upper = match convention {
            SplitConvention::PaperLiteral => m > 0,
            SplitConvention::RegionBased => false,
        };
        if is_upper {
            upper[m] += sigma_col[m];
        } else {
            lower[m] += sigma_col[m];
        }
    }
    for j in 1..=n {
        let height = n - j;
        for i in 0..=height {
            column[i] = if i == 0 {
                1
            } else if i >= j {
                sigma_col[i] + column[i - j]
            } else {
                sigma_col[i]
            };
            let m = i + j;
            let is_upper = match convention {
                SplitConvention::PaperLiteral => m > 2 * j,
                SplitConvention::RegionBased => j > i,
            };
            if is_upper {
                upper[m] += column[i];
            } else {
                lower[m] += column[i];
            }
        }
    }
    SigmaSplit {
        convention,
        upper: SignSequence::new(upper),
        lower: SignSequence::new(lower),
    }
}

/// The interval form of the partial-sum law, evaluated directly: 1 on
/// [6k²+k, 6k²+5k+1), −1 on [6k²+7k+2, 6k²+11k+5), 0 on the two gaps
/// between consecutive same-signed pentagonal numbers. The four families
/// tile [0, ∞) — consecutive blocks meet at 6(k+1)² − (k+1) = 6k² + 11k + 5
/// — so exactly one interval contains n. Equals the partial sums S(n).
#[allow(clippy::int_plus_one)] // the bounds mirror the interval endpoints verbatim
pub fn sigma_u_intervals(n: u64) -> i64 {
    let n = n as u128;
    // k ≈ √(n/6); the tiling guarantees a hit within ±2 of the estimate.
    let estimate = (n / 6).isqrt();
    let lo = estimate.saturating_sub(2);
    for k in lo..=estimate + 2 {
        let base = 6 * k * k;
        if base.saturating_sub(k) <= n && n < base + k {
            return 0;
        }
        if base + k <= n && n < base + 5 * k + 1 {
            return 1;
        }
        if base + 5 * k + 1 <= n && n < base + 7 * k + 2 {
            return 0;
        }
        if base + 7 * k + 2 <= n && n < base + 11 * k + 5 {
            return -1;
        }
    }
    unreachable!("the interval families tile the nonnegative integers")
}
