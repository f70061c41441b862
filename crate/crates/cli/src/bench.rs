//! Wall-clock timings for the main computations. Reported as data only —
//! no pass/fail judgment is attached to the comparison.

use std::time::Instant;

use pentasigma::{partition_up_to, primes_sieve, rho_up_to, sigma_up_to, Result};

use crate::output::BenchRow;

fn timed<T>(work: impl FnOnce() -> T) -> (T, f64) {
    let started = Instant::now();
    let value = work();
    (value, started.elapsed().as_secs_f64())
}

/// Times, in order: Euler's partition recurrence, the ρ recurrence given a
/// precomputed σ, the σ computation itself, ρ including the σ computation,
/// and the sieve baseline.
pub fn run(n: usize) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();

    let (_, partition_secs) = timed(|| partition_up_to(n));
    rows.push(BenchRow {
        task: "partition".into(),
        seconds: partition_secs,
    });

    let sigma = sigma_up_to(n)?;
    let (rho, rho_given_sigma_secs) = timed(|| rho_up_to(n, &sigma));
    rho?;
    rows.push(BenchRow {
        task: "rho_given_sigma".into(),
        seconds: rho_given_sigma_secs,
    });

    let (fresh_sigma, sigma_secs) = timed(|| sigma_up_to(n));
    fresh_sigma?;
    rows.push(BenchRow {
        task: "sigma".into(),
        seconds: sigma_secs,
    });

    let (with_sigma, rho_including_sigma_secs) = timed(|| {
        let sigma = sigma_up_to(n)?;
        rho_up_to(n, &sigma)
    });
    with_sigma?;
    rows.push(BenchRow {
        task: "rho_including_sigma".into(),
        seconds: rho_including_sigma_secs,
    });

    let (sieve, sieve_secs) = timed(|| primes_sieve(n));
    sieve?;
    rows.push(BenchRow {
        task: "sieve".into(),
        seconds: sieve_secs,
    });

    Ok(rows)
}
