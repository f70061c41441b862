//! The pentagonal algorithm: recovering ρ(n) — the number of partitions of
//! n with all parts equal, i.e. the divisor count for n ≥ 1 — from the
//! σ-sequence, plus Euler's partition recurrence, the Euler matrix, its
//! inverse, and prime extraction.
//!
//! Unfolding Σ_i (−1)^i ρ(n − g(i)) = σ(n) row by row gives a triangular
//! system whose matrix is lower-triangular Toeplitz with first column σ₀
//! (the Euler matrix E). Its exact inverse is the same shape with first
//! column the partition numbers, so ρ can be computed two ways: by the
//! recurrence, or as E⁻¹ applied to σ. Both are implemented; their
//! agreement is a test, not an assumption. Euler's own recurrence is the
//! same identity with the constant sequence (1, 0, 0, …) in place of σ.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::pentagonal::{pentagonal_terms_up_to, sigma0, PentagonalTerm, SignSequence};
use crate::sigma_sequence::SigmaSequence;

/// ρ(0..N): ρ(0) = 1, and ρ(n) for n ≥ 1 is the divisor count of n once
/// the input σ is consistent. ρ(n) = 2 exactly at the primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoSequence {
    values: SignSequence,
}

impl RhoSequence {
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

/// p(0..N), the partition numbers; arbitrary precision because p(n)
/// outgrows 64 bits near n ≈ 400.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSequence {
    values: Vec<BigUint>,
}

impl PartitionSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn at(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// A lower-triangular Toeplitz matrix stored as its first column:
/// entry(r, c) = first_column[r − c] for r ≥ c, else 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToeplitzLower {
    first_column: Vec<BigInt>,
}

impl ToeplitzLower {
    pub fn from_first_column(first_column: Vec<BigInt>) -> Self {
        assert!(!first_column.is_empty());
        ToeplitzLower { first_column }
    }

    /// Matrix order (n + 1 for a window covering 0..n).
    pub fn order(&self) -> usize {
        self.first_column.len()
    }

    pub fn first_column(&self) -> &[BigInt] {
        &self.first_column
    }

    pub fn entry(&self, r: usize, c: usize) -> BigInt {
        if r >= c {
            self.first_column[r - c].clone()
        } else {
            BigInt::zero()
        }
    }
}

fn signed_terms_excluding_origin(n: usize) -> Vec<PentagonalTerm> {
    pentagonal_terms_up_to(n as i64)
        .into_iter()
        .filter(|t| t.index != 0)
        .collect()
}

/// Recover ρ(0..N) from σ via the pentagonal recurrence
/// ρ(n) = σ(n) − Σ_{i≠0, g(i) ≤ n} (−1)^i ρ(n − g(i)).
///
/// σ(0) ≠ 1 or any negative intermediate ρ(n) means the σ input is
/// corrupted and yields a hard inconsistency error — divisor counts are
/// never negative, so there is nothing sensible to clamp to.
pub fn rho_up_to(n: usize, sigma: &SigmaSequence) -> Result<RhoSequence> {
    if sigma.len() < n + 1 {
        return Err(Error::Usage(format!(
            "sigma covers 0..{} but 0..{} is required",
            sigma.len().saturating_sub(1),
            n
        )));
    }
    if sigma.at(0) != 1 {
        return Err(Error::Inconsistency(format!(
            "sigma(0) = {} but the identity forces rho(0) = sigma(0) = 1",
            sigma.at(0)
        )));
    }
    let terms = signed_terms_excluding_origin(n);
    let mut rho = vec![0i64; n + 1];
    rho[0] = 1;
    for m in 1..=n {
        let mut value = sigma.at(m as i64);
        for term in terms.iter().take_while(|t| t.value as usize <= m) {
            value -= term.sign * rho[m - term.value as usize];
        }
        if value < 0 {
            return Err(Error::Inconsistency(format!(
                "rho({m}) = {value} < 0; the sigma input is corrupted"
            )));
        }
        rho[m] = value;
    }
    Ok(RhoSequence {
        values: SignSequence::new(rho),
    })
}

/// p(0..N) by Euler's recurrence: the same pentagonal identity with the
/// constant sequence 1, 0, 0, … in place of σ.
pub fn partition_up_to(n: usize) -> PartitionSequence {
    let terms = signed_terms_excluding_origin(n);
    let mut partitions: Vec<BigUint> = Vec::with_capacity(n + 1);
    partitions.push(BigUint::one());
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for term in terms.iter().take_while(|t| t.value as usize <= m) {
            let prev = BigInt::from(partitions[m - term.value as usize].clone());
            if term.sign > 0 {
                acc -= prev;
            } else {
                acc += prev;
            }
        }
        partitions.push(acc.to_biguint().expect("partition numbers are nonnegative"));
    }
    PartitionSequence { values: partitions }
}

/// The (n+1)×(n+1) Euler matrix: lower-triangular Toeplitz with first
/// column σ₀(0..n).
pub fn euler_matrix(n: usize) -> ToeplitzLower {
    ToeplitzLower::from_first_column((0..=n).map(|i| BigInt::from(sigma0(i as i64))).collect())
}

/// The exact inverse of [`euler_matrix`]: the same Toeplitz shape with
/// first column p(0..n), so each row reads the partition numbers written
/// backward. Constructed directly from the partition recurrence; the
/// inverse identity E·E⁻¹ = I is checked by tests, not used to build it.
pub fn euler_inverse(n: usize) -> ToeplitzLower {
    ToeplitzLower::from_first_column(
        partition_up_to(n)
            .values()
            .iter()
            .map(|p| BigInt::from(p.clone()))
            .collect(),
    )
}

/// Exact triangular matrix-vector product out[r] = Σ_{c≤r} fc[r−c]·v[c].
///
/// Works off the first column only (never a dense grid) and skips its zero
/// entries, which makes application of the Euler matrix O(N √N).
pub fn apply(matrix: &ToeplitzLower, v: &[BigInt]) -> Result<Vec<BigInt>> {
    if matrix.order() != v.len() {
        return Err(Error::Usage(format!(
            "matrix order {} does not match vector length {}",
            matrix.order(),
            v.len()
        )));
    }
    let nonzero: Vec<(usize, &BigInt)> = matrix
        .first_column()
        .iter()
        .enumerate()
        .filter(|(_, value)| !value.is_zero())
        .collect();
    let mut out = vec![BigInt::zero(); v.len()];
    for (offset, coeff) in nonzero {
        for r in offset..v.len() {
            out[r] += coeff * &v[r - offset];
        }
    }
    Ok(out)
}

/// The n with ρ(n) = 2 in 2..=N, ascending — the primes, since only a
/// prime has exactly the two equal-part partitions 1·n and n·1.
pub fn primes_up_to(n: usize, rho: &RhoSequence) -> Result<Vec<u64>> {
    if rho.len() < n + 1 {
        return Err(Error::Usage(format!(
            "rho covers 0..{} but 0..{} is required",
            rho.len().saturating_sub(1),
            n
        )));
    }
    Ok((2..=n)
        .filter(|&m| rho.at(m as i64) == 2)
        .map(|m| m as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sigma_sequence::sigma_up_to;

    #[test]
    fn rho_base_case() {
        let sigma = sigma_up_to(0).unwrap();
        let rho = rho_up_to(0, &sigma).unwrap();
        assert_eq!(rho.values(), &[1]);
    }

    #[test]
    fn rho_five_from_the_unfolded_row() {
        // ρ(0) − ρ(3) − ρ(4) + ρ(5) = σ(5) = −2 ⇒ ρ(5) = 2.
        let sigma = sigma_up_to(5).unwrap();
        assert_eq!(sigma.at(5), -2);
        let rho = rho_up_to(5, &sigma).unwrap();
        assert_eq!(rho.at(5), 2);
        assert_eq!(sigma.at(5), rho.at(0) - rho.at(3) - rho.at(4) + rho.at(5));
    }

    #[test]
    fn rho_twelve() {
        let sigma = sigma_up_to(12).unwrap();
        assert_eq!(sigma.at(12), 3);
        let rho = rho_up_to(12, &sigma).unwrap();
        // ρ(12) = σ(12) + ρ(11) + ρ(10) − ρ(7) − ρ(5) + ρ(0).
        assert_eq!(rho.at(12), 3 + 2 + 4 - 2 - 2 + 1);
        assert_eq!(rho.at(12), 6);
    }

    #[test]
    fn rho_prefix_is_divisor_counts() {
        let sigma = sigma_up_to(26).unwrap();
        let rho = rho_up_to(26, &sigma).unwrap();
        assert_eq!(
            rho.values(),
            &[1, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6, 2, 4, 4, 5, 2, 6, 2, 6, 4, 4, 2, 8, 3, 4]
        );
    }

    #[test]
    fn rho_rejects_bad_sigma_head() {
        let sigma = SigmaSequence::from_values(vec![2, 0, 0]);
        assert!(matches!(rho_up_to(2, &sigma), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn rho_rejects_negative_intermediate() {
        // σ(1) = −5 forces ρ(1) = σ(1) + ρ(0) = −4.
        let sigma = SigmaSequence::from_values(vec![1, -5, 0]);
        assert!(matches!(rho_up_to(2, &sigma), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn rho_rejects_short_sigma() {
        let sigma = sigma_up_to(4).unwrap();
        assert!(matches!(rho_up_to(10, &sigma), Err(Error::Usage(_))));
    }

    #[test]
    fn partition_prefix() {
        let p = partition_up_to(20);
        let expected = [
            1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297,
        ];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(p.at(n), &BigUint::from(*want), "n = {n}");
        }
        assert_eq!(p.at(20), &BigUint::from(627u64));
    }

    #[test]
    fn partitions_strictly_increase_from_two() {
        let p = partition_up_to(200);
        for n in 2..200 {
            assert!(p.at(n) < p.at(n + 1));
        }
    }

    #[test]
    fn euler_matrix_structure() {
        let e = euler_matrix(5);
        let col: Vec<BigInt> = e.first_column().to_vec();
        assert_eq!(col, [1, -1, -1, 0, 0, 1].map(BigInt::from).to_vec());
        assert_eq!(e.entry(4, 2), BigInt::from(-1));
        assert_eq!(e.entry(2, 4), BigInt::zero());
        assert_eq!(euler_matrix(0).first_column(), &[BigInt::from(1)]);
    }

    #[test]
    fn euler_inverse_column_is_partitions() {
        let inv = euler_inverse(17);
        let p = partition_up_to(17);
        for n in 0..=17 {
            assert_eq!(inv.first_column()[n], BigInt::from(p.at(n).clone()));
        }
    }

    #[test]
    fn inverse_identity_small_dense() {
        // Dense product as the readable oracle at small order.
        let n = 40;
        let e = euler_matrix(n);
        let inv = euler_inverse(n);
        for r in 0..=n {
            for c in 0..=n {
                let mut acc = BigInt::zero();
                for k in 0..=n {
                    acc += e.entry(r, k) * inv.entry(k, c);
                }
                let want = if r == c {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                assert_eq!(acc, want, "({r}, {c})");
            }
        }
    }

    #[test]
    fn apply_identity_matrix() {
        let mut col = vec![BigInt::zero(); 6];
        col[0] = BigInt::one();
        let identity = ToeplitzLower::from_first_column(col);
        let v: Vec<BigInt> = (0..6).map(BigInt::from).collect();
        assert_eq!(apply(&identity, &v).unwrap(), v);
    }

    #[test]
    fn apply_euler_to_partitions_gives_unit_vector() {
        let n = 60;
        let e = euler_matrix(n);
        let p: Vec<BigInt> = partition_up_to(n)
            .values()
            .iter()
            .map(|x| BigInt::from(x.clone()))
            .collect();
        let out = apply(&e, &p).unwrap();
        assert_eq!(out[0], BigInt::one());
        for value in &out[1..] {
            assert_eq!(value, &BigInt::zero());
        }
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let e = euler_matrix(4);
        let v = vec![BigInt::one(); 3];
        assert!(matches!(apply(&e, &v), Err(Error::Usage(_))));
    }

    #[test]
    fn euler_times_rho_returns_sigma() {
        let n = 500;
        let sigma = sigma_up_to(n).unwrap();
        let rho = rho_up_to(n, &sigma).unwrap();
        let rho_vec: Vec<BigInt> = rho.values().iter().map(|&v| BigInt::from(v)).collect();
        let back = apply(&euler_matrix(n), &rho_vec).unwrap();
        for (m, value) in back.iter().enumerate() {
            assert_eq!(value, &BigInt::from(sigma.at(m as i64)), "m = {m}");
        }
    }

    #[test]
    fn inverse_path_matches_recurrence() {
        let n = 300;
        let sigma = sigma_up_to(n).unwrap();
        let rho = rho_up_to(n, &sigma).unwrap();
        let sigma_vec: Vec<BigInt> = sigma.values().iter().map(|&v| BigInt::from(v)).collect();
        let via_matrix = apply(&euler_inverse(n), &sigma_vec).unwrap();
        for (m, value) in via_matrix.iter().enumerate() {
            assert_eq!(value, &BigInt::from(rho.at(m as i64)), "m = {m}");
        }
    }

    #[test]
    fn primes_examples() {
        let sigma = sigma_up_to(30).unwrap();
        let rho = rho_up_to(30, &sigma).unwrap();
        assert_eq!(primes_up_to(1, &rho).unwrap(), Vec::<u64>::new());
        assert_eq!(
            primes_up_to(30, &rho).unwrap(),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
    }

    #[test]
    fn primes_rejects_short_rho() {
        let sigma = sigma_up_to(5).unwrap();
        let rho = rho_up_to(5, &sigma).unwrap();
        assert!(matches!(primes_up_to(10, &rho), Err(Error::Usage(_))));
    }
}
