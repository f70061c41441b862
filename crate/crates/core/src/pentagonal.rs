//! Generalized pentagonal numbers and the pentagonal number theorem
//! sequence σ₀.
//!
//! The generalized pentagonal numbers are g(i) = (3i² + i)/2 for integer i
//! (0, 1, 2, 5, 7, 12, 15, 22, 26, …). The pentagonal number theorem says
//! ∏_{m≥1}(1 − x^m) = Σ_i (−1)^i x^{g(i)}, so the coefficient sequence σ₀
//! is ±1 at pentagonal positions and 0 elsewhere:
//! {1, −1, −1, 0, 0, 1, 0, 1, 0, 0, 0, 0, −1, 0, 0, −1, …}.
//!
//! All membership tests run on exact integer arithmetic (integer square
//! root of 24n + 1 plus a residue check); no floating point anywhere in
//! the decision path.

use crate::error::{Error, Result};

/// One term of the pentagonal number theorem series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonalTerm {
    /// The generating index i (may be negative).
    pub index: i64,
    /// g = (3i² + i)/2, always nonnegative.
    pub value: i64,
    /// (−1)^i, so +1 for even i.
    pub sign: i64,
}

/// Classification of a nonnegative integer against the four pentagonal
/// families, with the witness k:
///
/// - `EiMinus`: g = 6k² − k (even generating index −2k)
/// - `EiPlus`:  g = 6k² + k (even generating index 2k)
/// - `OiMinus`: g = 6k² + 5k + 1 (odd generating index −(2k+1))
/// - `OiPlus`:  g = 6k² + 7k + 2 (odd generating index 2k+1)
///
/// σ₀ is +1 exactly on the two even-indexed families and −1 on the two
/// odd-indexed ones. g = 0 satisfies both even families at k = 0; it is
/// classified `EiMinus` so the answer is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentClass {
    EiMinus { k: i64 },
    EiPlus { k: i64 },
    OiMinus { k: i64 },
    OiPlus { k: i64 },
    NotPentagonal,
}

impl PentClass {
    /// True for the counterimages of +1 (the even-indexed families).
    pub fn is_even_indexed(self) -> bool {
        matches!(self, PentClass::EiMinus { .. } | PentClass::EiPlus { .. })
    }

    /// True for the counterimages of −1 (the odd-indexed families).
    pub fn is_odd_indexed(self) -> bool {
        matches!(self, PentClass::OiMinus { .. } | PentClass::OiPlus { .. })
    }

    pub fn witness(self) -> Option<i64> {
        match self {
            PentClass::EiMinus { k }
            | PentClass::EiPlus { k }
            | PentClass::OiMinus { k }
            | PentClass::OiPlus { k } => Some(k),
            PentClass::NotPentagonal => None,
        }
    }
}

/// A finite prefix of an integer sequence indexed from 0.
///
/// Indexing below 0 yields 0, matching the convention σ₀(n) = 0 for n < 0
/// used by every recurrence in this crate. Indexing past the stored prefix
/// is a caller bug and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence {
    values: Vec<i64>,
}

impl SignSequence {
    pub fn new(values: Vec<i64>) -> Self {
        SignSequence { values }
    }

    /// Number of stored values (N + 1 for a prefix indexed 0..N).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at n, with the n < 0 ↦ 0 convention.
    pub fn at(&self, n: i64) -> i64 {
        if n < 0 {
            0
        } else {
            self.values[n as usize]
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

impl std::ops::Index<usize> for SignSequence {
    type Output = i64;

    fn index(&self, n: usize) -> &i64 {
        &self.values[n]
    }
}

/// g(i) = (3i² + i)/2, checked against the i64 range.
pub fn generalized_pentagonal(i: i64) -> Result<i64> {
    let wide = i as i128;
    let out_of_range = || Error::Range(format!("pentagonal number for index {i} exceeds i64"));
    let value = wide
        .checked_mul(wide)
        .and_then(|sq| sq.checked_mul(3))
        .and_then(|t| t.checked_add(wide))
        .ok_or_else(out_of_range)?
        / 2;
    i64::try_from(value).map_err(|_| out_of_range())
}

/// All pentagonal terms with value ≤ max, ascending by value.
///
/// Both indices ±i appear whenever their values differ (they coincide only
/// at i = 0). The ascending order falls out of interleaving −k before +k:
/// g(−k) < g(k) < g(−k−1).
pub fn pentagonal_terms_up_to(max: i64) -> Vec<PentagonalTerm> {
    let mut terms = Vec::new();
    if max < 0 {
        return terms;
    }
    terms.push(PentagonalTerm {
        index: 0,
        value: 0,
        sign: 1,
    });
    let mut k = 1i64;
    loop {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let wide = k as i128;
        // g(−k) = (3k² − k)/2
        let lower = (3 * wide * wide - wide) / 2;
        if lower > max as i128 {
            break;
        }
        terms.push(PentagonalTerm {
            index: -k,
            value: lower as i64,
            sign,
        });
        let upper = (3 * wide * wide + wide) / 2;
        if upper <= max as i128 {
            terms.push(PentagonalTerm {
                index: k,
                value: upper as i64,
                sign,
            });
        }
        k += 1;
    }
    terms
}

fn exact_isqrt(n: u128) -> Option<u128> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// σ₀(n): (−1)^i if n = (3i² + i)/2 for some integer i, else 0.
/// Returns 0 for n < 0.
///
/// n is pentagonal iff 24n + 1 is a perfect square r² with r ≡ ±1 (mod 6);
/// then 6i + 1 = ±r recovers the index, and only its parity matters.
pub fn sigma0(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let disc = 24 * n as u128 + 1;
    let Some(r) = exact_isqrt(disc) else {
        return 0;
    };
    let index = match r % 6 {
        1 => (r - 1) / 6, // i = (r − 1)/6 ≥ 0
        5 => (r + 1) / 6, // i = −(r + 1)/6; parity of |i| is what counts
        _ => return 0,
    };
    if index % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Classify g against the four pentagonal families of [`PentClass`].
///
/// 24g + 1 = (12k ∓ 1)² for the even-indexed families and (12k + 5)² /
/// (12k + 7)² for the odd-indexed ones, so the residue of √(24g+1) mod 12
/// picks the family and the witness. g = 0 is reported as `EiMinus` with
/// k = 0. Negative g is not pentagonal.
pub fn classify_pentagonal(g: i64) -> PentClass {
    if g < 0 {
        return PentClass::NotPentagonal;
    }
    if g == 0 {
        return PentClass::EiMinus { k: 0 };
    }
    let disc = 24 * g as u128 + 1;
    let Some(r) = exact_isqrt(disc) else {
        return PentClass::NotPentagonal;
    };
    match r % 12 {
        11 => PentClass::EiMinus {
            k: ((r + 1) / 12) as i64,
        },
        1 => PentClass::EiPlus {
            k: ((r - 1) / 12) as i64,
        },
        5 => PentClass::OiMinus {
            k: ((r - 5) / 12) as i64,
        },
        7 => PentClass::OiPlus {
            k: ((r - 7) / 12) as i64,
        },
        // r² ≡ 1 (mod 24) forces r coprime to 6, i.e. r ≡ 1, 5, 7, 11 (mod 12).
        _ => unreachable!("square root of 24g+1 must be ±1, ±5 mod 12"),
    }
}

/// Partial sums S(n) = Σ_{m=0}^{n} σ₀(m) for n = 0..N.
pub fn partial_sum_sigma0(n: usize) -> SignSequence {
    let mut values = Vec::with_capacity(n + 1);
    let mut acc = 0i64;
    for m in 0..=n {
        acc += sigma0(m as i64);
        values.push(acc);
    }
    SignSequence::new(values)
}
