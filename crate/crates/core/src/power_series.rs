//! Exact truncated formal power series over arbitrary-precision integers.
//!
//! This module is the independent oracle for the identities the rest of
//! the crate relies on:
//!
//! - [`euler_function`]: ∏_{m=1}^{N}(1 − x^m), built by literal factor
//!   multiplication (never from the pentagonal shortcut — that equivalence
//!   is something the tests check, not something we assume)
//! - [`geometric`]: the correction factor 1 + x^j + x^{2j} + ⋯
//! - [`euler_omit`]: ∏_{m≠j}(1 − x^m)
//! - [`sigma_function_series`]: Σ_h x^h ∏_{m≠h}(1 − x^m)
//! - [`rho_series_oracle`]: 1 + Σ_{k≥1} x^k/(1 − x^k), whose coefficient
//!   at n ≥ 1 is the divisor count d(n)
//!
//! All arithmetic is exact; all operations share one degree bound and
//! refuse to mix bounds. Multiplication is the naive O(N²) schoolbook
//! product, which is plenty at oracle scale (N ≤ 2000).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer polynomial c₀ + c₁x + ⋯ + c_N x^N representing a formal power
/// series mod x^(N+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series with the given coefficients; the degree bound is implied by
    /// the length (which must be ≥ 1).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores c0..cN");
        TruncatedSeries { coeffs }
    }

    /// The constant series 1 at degree bound n.
    pub fn one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { coeffs }
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as i64, if they all fit.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(i64::try_from)
            .map(|r| r.ok())
            .collect()
    }
}

/// Exact product of two series sharing one degree bound, truncated there.
pub fn multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    if a.degree_bound() != b.degree_bound() {
        return Err(Error::Usage(format!(
            "degree bounds differ: {} vs {}",
            a.degree_bound(),
            b.degree_bound()
        )));
    }
    let n = a.degree_bound();
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().take(n + 1 - i).enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    Ok(TruncatedSeries::from_coeffs(out))
}

/// ∏_{m=1}^{N}(1 − x^m) mod x^(N+1), by multiplying the factors in one at
/// a time. Each binomial factor is a subtract-shifted pass, so the whole
/// expansion is O(N²).
pub fn euler_function(n: usize) -> TruncatedSeries {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    for m in 1..=n {
        for i in (m..=n).rev() {
            let (head, tail) = c.split_at_mut(i);
            tail[0] -= &head[i - m];
        }
    }
    TruncatedSeries::from_coeffs(c)
}

/// The correction factor 1 + x^j + x^{2j} + ⋯ mod x^(N+1) (j ≥ 1).
pub fn geometric(j: usize, n: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::Usage(
            "geometric series requires j >= 1; the h = 0 term omits no factor".into(),
        ));
    }
    let mut c = vec![BigInt::zero(); n + 1];
    for m in (0..=n).step_by(j) {
        c[m] = BigInt::one();
    }
    Ok(TruncatedSeries::from_coeffs(c))
}

/// In-place multiplication by 1 + x^j + x^{2j} + ⋯ (equivalently, exact
/// division by 1 − x^j): c'ₙ = cₙ + c'ₙ₋ⱼ.
fn geometric_fold(coeffs: &mut [BigInt], j: usize) {
    debug_assert!(j >= 1);
    for i in j..coeffs.len() {
        let (head, tail) = coeffs.split_at_mut(i);
        tail[0] += &head[i - j];
    }
}

/// ∏_{m=1, m≠j}(1 − x^m) mod x^(N+1); for j = 0 no factor is omitted and
/// the result is [`euler_function`].
///
/// Equals multiply(geometric(j, N), euler_function(N)) — computed with the
/// stride-j fold, which is the same multiplication exploiting the sparsity
/// of the geometric factor.
pub fn euler_omit(j: usize, n: usize) -> TruncatedSeries {
    let mut series = euler_function(n);
    if j >= 1 {
        geometric_fold(&mut series.coeffs, j);
    }
    series
}

/// Σ_{h=0}^{N} x^h ∏_{m≠h}(1 − x^m), truncated at N.
///
/// One Euler-function expansion is shared across all h; each term is a
/// fold plus a shifted accumulation, keeping the whole sum O(N²).
pub fn sigma_function_series(n: usize) -> TruncatedSeries {
    let euler = euler_function(n);
    // h = 0 term: x^0 · euler_function.
    let mut acc = euler.coeffs.clone();
    let mut omit = vec![BigInt::zero(); n + 1];
    for h in 1..=n {
        // Only coefficients up to n − h survive the shift by h.
        let keep = n - h;
        omit[..=keep].clone_from_slice(&euler.coeffs[..=keep]);
        geometric_fold(&mut omit[..=keep], h);
        for m in 0..=keep {
            acc[h + m] += &omit[m];
        }
    }
    TruncatedSeries::from_coeffs(acc)
}

/// 1 + Σ_{k=1}^{N} x^k/(1 − x^k) mod x^(N+1): each rational term expands
/// to Σ_{t≥1} x^{tk}, so coefficient n ≥ 1 counts the divisors of n.
pub fn rho_series_oracle(n: usize) -> TruncatedSeries {
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    for k in 1..=n {
        for m in (k..=n).step_by(k) {
            c[m] += 1;
        }
    }
    TruncatedSeries::from_coeffs(c)
}
