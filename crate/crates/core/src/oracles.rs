//! Independent classical baselines: trial division, divisor-count and
//! prime sieves, and brute-force partition enumeration.
//!
//! Deliberately naive and completely separate from the pentagonal
//! machinery they validate — nothing here touches σ₀, the σ-sequence, or
//! any recurrence.

use crate::error::{Error, Result};

/// Maximum n accepted by [`partition_count_bruteforce`].
pub const BRUTEFORCE_PARTITION_BOUND: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    DivisorCounts,
    Primes,
    Partitions,
}

/// A table of oracle values up to a bound.
///
/// For `DivisorCounts` the table is indexed by n (slot 0 unused); for
/// `Primes` it lists the primes in order; for `Partitions` it is p(0..N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTable {
    pub kind: OracleKind,
    pub bound: u64,
    pub values: Vec<u64>,
}

/// d(n) by trial division up to √n. n = 0 is a usage error: ρ(0) = 1 is a
/// convention, not a divisor count.
pub fn divisor_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Usage("divisor_count requires n >= 1".into()));
    }
    let mut count = 0;
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    Ok(count)
}

/// d(1..N) by the multiple-marking sweep: every d increments all its
/// multiples, an O(N log N) pass.
pub fn divisor_counts_sieve(n: usize) -> Result<OracleTable> {
    if n < 1 {
        return Err(Error::Usage("divisor_counts_sieve requires N >= 1".into()));
    }
    let mut values = vec![0u64; n + 1];
    for d in 1..=n {
        for multiple in (d..=n).step_by(d) {
            values[multiple] += 1;
        }
    }
    Ok(OracleTable {
        kind: OracleKind::DivisorCounts,
        bound: n as u64,
        values,
    })
}

/// All primes ≤ N by the sieve of Eratosthenes.
pub fn primes_sieve(n: usize) -> Result<OracleTable> {
    if n < 2 {
        return Err(Error::Usage("primes_sieve requires N >= 2".into()));
    }
    let mut composite = vec![false; n + 1];
    let mut p = 2usize;
    while p * p <= n {
        if !composite[p] {
            for multiple in ((p * p)..=n).step_by(p) {
                composite[multiple] = true;
            }
        }
        p += 1;
    }
    let values = (2..=n)
        .filter(|&m| !composite[m])
        .map(|m| m as u64)
        .collect();
    Ok(OracleTable {
        kind: OracleKind::Primes,
        bound: n as u64,
        values,
    })
}

fn count_partitions(remaining: usize, max_part: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    (1..=max_part.min(remaining))
        .map(|part| count_partitions(remaining - part, part))
        .sum()
}

/// p(n) by exhaustive enumeration of partitions with nonincreasing parts.
/// Exponential-ish by design; bounded at n ≤ 60.
pub fn partition_count_bruteforce(n: usize) -> Result<u64> {
    if n > BRUTEFORCE_PARTITION_BOUND {
        return Err(Error::Usage(format!(
            "brute-force partition counting is bounded at n <= {BRUTEFORCE_PARTITION_BOUND}"
        )));
    }
    Ok(count_partitions(n, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_count_examples() {
        assert_eq!(divisor_count(1).unwrap(), 1);
        assert_eq!(divisor_count(6).unwrap(), 4);
        assert_eq!(divisor_count(12).unwrap(), 6);
        assert_eq!(divisor_count(97).unwrap(), 2);
        assert!(matches!(divisor_count(0), Err(Error::Usage(_))));
    }

    #[test]
    fn sieve_matches_trial_division() {
        let table = divisor_counts_sieve(2000).unwrap();
        assert_eq!(&table.values[1..=5], &[1, 2, 2, 3, 2]);
        assert_eq!(table.values[12], 6);
        for n in 1..=2000u64 {
            assert_eq!(
                table.values[n as usize],
                divisor_count(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn primes_sieve_examples() {
        assert_eq!(primes_sieve(2).unwrap().values, vec![2]);
        let p30 = primes_sieve(30).unwrap().values;
        assert_eq!(p30.len(), 10);
        assert_eq!(p30.last(), Some(&29));
        assert!(matches!(primes_sieve(1), Err(Error::Usage(_))));
    }

    #[test]
    fn primes_are_the_two_divisor_numbers() {
        let d = divisor_counts_sieve(500).unwrap();
        let primes = primes_sieve(500).unwrap();
        let two_divisors: Vec<u64> = (2..=500u64)
            .filter(|&n| d.values[n as usize] == 2)
            .collect();
        assert_eq!(primes.values, two_divisors);
    }

    #[test]
    fn bruteforce_partition_examples() {
        assert_eq!(partition_count_bruteforce(0).unwrap(), 1);
        assert_eq!(partition_count_bruteforce(7).unwrap(), 15);
        assert_eq!(partition_count_bruteforce(17).unwrap(), 297);
        assert!(matches!(
            partition_count_bruteforce(61),
            Err(Error::Usage(_))
        ));
    }
}
