//! Verification suites: each runs one family of invariants against an
//! independent oracle and reports violations. Ambiguous-reading findings
//! (the split-convention comparison, the literal near-diagonal and
//! even/even readings) are structurally separated under `report_only` and
//! never affect the exit status, so CI can gate on the assertable suites
//! alone.

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use pentasigma::{
    apply, build_window, divisor_counts_sieve, euler_function, euler_matrix, euler_omit,
    laced_sigma, multiply, p2_7_boundary_rows, p2_9_literal_violations, partial_sum_sigma0,
    primes_sieve, primes_up_to, rho_series_oracle, rho_up_to, scan_property, sigma_function_series,
    sigma_u_intervals, sigma_up_to, split_sigma, Error, PropertyId, Result, SplitConvention,
};

/// Report-only record lists are truncated at this many entries.
const RECORD_CAP: usize = 50;
/// Violation lists are truncated at this many entries per suite.
const VIOLATION_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteId {
    /// Product identity: euler_function × rho_series_oracle = sigma series.
    Identity14,
    /// Lacing sums equal the omitted-factor product coefficients.
    Lacing21,
    /// σ-matrix property scanners on an n×n window.
    Properties,
    /// Split completeness plus the interval law for partial sums.
    Splits,
    /// σ → ρ → σ round trip and divisor-count recovery.
    Roundtrip,
    /// Prime extraction against the Eratosthenes oracle.
    Primes,
}

impl SuiteId {
    pub const ALL: [SuiteId; 6] = [
        SuiteId::Identity14,
        SuiteId::Lacing21,
        SuiteId::Properties,
        SuiteId::Splits,
        SuiteId::Roundtrip,
        SuiteId::Primes,
    ];

    fn name(self) -> &'static str {
        match self {
            SuiteId::Identity14 => "identity14",
            SuiteId::Lacing21 => "lacing21",
            SuiteId::Properties => "properties",
            SuiteId::Splits => "splits",
            SuiteId::Roundtrip => "roundtrip",
            SuiteId::Primes => "primes",
        }
    }

    /// Documented per-suite bound caps; exceeding one is a resource error.
    fn cap(self) -> u64 {
        match self {
            SuiteId::Identity14 => 4_000,
            SuiteId::Lacing21 => 512,
            SuiteId::Properties => 1_024,
            SuiteId::Splits => 4_000,
            SuiteId::Roundtrip => 250_000,
            SuiteId::Primes => 250_000,
        }
    }
}

#[derive(Serialize)]
pub struct ViolationRecord {
    pub location: String,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub bound: u64,
    pub pass: bool,
    pub violations: Vec<ViolationRecord>,
}

#[derive(Serialize)]
pub struct Finding {
    pub finding: String,
    pub description: String,
    pub records: Vec<serde_json::Value>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub bound: u64,
    pub pass: bool,
    pub suites: Vec<SuiteOutcome>,
    pub report_only: Vec<Finding>,
}

fn push_violation(violations: &mut Vec<ViolationRecord>, location: String, detail: String) {
    if violations.len() < VIOLATION_CAP {
        violations.push(ViolationRecord { location, detail });
    }
}

fn outcome(suite: SuiteId, bound: u64, violations: Vec<ViolationRecord>) -> SuiteOutcome {
    SuiteOutcome {
        suite: suite.name().to_string(),
        bound,
        pass: violations.is_empty(),
        violations,
    }
}

fn identity14(n: usize) -> Result<SuiteOutcome> {
    let lhs = multiply(&euler_function(n), &rho_series_oracle(n))?;
    let rhs = sigma_function_series(n);
    let mut violations = Vec::new();
    for m in 0..=n {
        if lhs.coeff(m) != rhs.coeff(m) {
            push_violation(
                &mut violations,
                format!("n={m}"),
                format!("product side {} vs sum side {}", lhs.coeff(m), rhs.coeff(m)),
            );
        }
    }
    Ok(outcome(SuiteId::Identity14, n as u64, violations))
}

fn lacing21(n: usize) -> SuiteOutcome {
    let mut violations = Vec::new();
    for j in 0..=n {
        let series = euler_omit(j, n);
        for i in 0..=n {
            let laced = BigInt::from(laced_sigma(j as i64, i as i64));
            if &laced != series.coeff(i) {
                push_violation(
                    &mut violations,
                    format!("j={j},i={i}"),
                    format!("lacing sum {} vs coefficient {}", laced, series.coeff(i)),
                );
            }
        }
    }
    outcome(SuiteId::Lacing21, n as u64, violations)
}

fn properties(n: usize, report_only: &mut Vec<Finding>) -> Result<SuiteOutcome> {
    let window = build_window(n, n)?;
    let mut violations = Vec::new();
    for property in [
        PropertyId::P2_4,
        PropertyId::P2_5,
        PropertyId::P2_6,
        PropertyId::P2_7,
        PropertyId::P2_9,
    ] {
        let report = scan_property(&window, property);
        for violation in &report.violations {
            push_violation(
                &mut violations,
                format!("{} at ({},{})", property.label(), violation.i, violation.j),
                format!("entry {} expected {}", violation.entry, violation.expected),
            );
        }
    }

    report_only.push(Finding {
        finding: "p2_7_literal".into(),
        description: "Literal near-diagonal reading: its hypothesis ('i not a multiple of a \
                      generalized pentagonal number') excludes every i >= 1 because 1 is \
                      pentagonal, so nothing is assertable; the boundary rows i <= 4 are \
                      recorded here. At i = 4 the stride-2 lace wraps to the constant term \
                      and the triple reads (0, -1, 1)."
            .into(),
        records: p2_7_boundary_rows(&window)
            .into_iter()
            .take(RECORD_CAP)
            .map(|(i, j, entry)| json!({"i": i, "j": j, "entry": entry}))
            .collect(),
    });
    report_only.push(Finding {
        finding: "p2_9_literal_even_even".into(),
        description: "Literal reading demanding an even-indexed pentagonal witness for \
                      entries <= -2; falsified on real cells (recorded, not asserted)."
            .into(),
        records: p2_9_literal_violations(&window)
            .into_iter()
            .take(RECORD_CAP)
            .map(|v| json!({"i": v.i, "j": v.j, "entry": v.entry}))
            .collect(),
    });
    Ok(outcome(SuiteId::Properties, n as u64, violations))
}

fn splits(n: usize, report_only: &mut Vec<Finding>) -> Result<SuiteOutcome> {
    let sigma = sigma_up_to(n)?;
    let sums = partial_sum_sigma0(n);
    let mut violations = Vec::new();
    let paper = split_sigma(n, SplitConvention::PaperLiteral);
    let region = split_sigma(n, SplitConvention::RegionBased);
    for (convention, split) in [("paper_literal", &paper), ("region_based", &region)] {
        for m in 0..=n as i64 {
            if split.upper.at(m) + split.lower.at(m) != sigma.at(m) {
                push_violation(
                    &mut violations,
                    format!("{convention} n={m}"),
                    format!(
                        "upper {} + lower {} != sigma {}",
                        split.upper.at(m),
                        split.lower.at(m),
                        sigma.at(m)
                    ),
                );
            }
        }
    }
    for m in 0..=n as u64 {
        let interval = sigma_u_intervals(m);
        if interval != sums.at(m as i64) {
            push_violation(
                &mut violations,
                format!("interval n={m}"),
                format!(
                    "interval value {} vs partial sum {}",
                    interval,
                    sums.at(m as i64)
                ),
            );
        }
    }

    let rows: Vec<serde_json::Value> = (0..=(n as i64).min(RECORD_CAP as i64 - 1))
        .map(|m| {
            json!({
                "n": m,
                "paper_literal_upper": paper.upper.at(m),
                "region_based_upper": region.upper.at(m),
                "partial_sum": sums.at(m),
            })
        })
        .collect();
    report_only.push(Finding {
        finding: "upper_sequence_candidates".into(),
        description: "Three candidate 'upper' series side by side: the two split conventions \
                      and the interval formulas (which equal the partial sums exactly). They \
                      pairwise disagree — e.g. n = 7 gives 0 / -1 / 1 — so no identification \
                      is asserted."
            .into(),
        records: rows,
    });
    Ok(outcome(SuiteId::Splits, n as u64, violations))
}

fn roundtrip(n: usize) -> Result<SuiteOutcome> {
    let sigma = sigma_up_to(n)?;
    let rho = rho_up_to(n, &sigma)?;
    let mut violations = Vec::new();
    if rho.at(0) != 1 {
        push_violation(
            &mut violations,
            "n=0".into(),
            format!("rho(0) = {}", rho.at(0)),
        );
    }
    let oracle = divisor_counts_sieve(n)?;
    for m in 1..=n {
        if rho.at(m as i64) as u64 != oracle.values[m] {
            push_violation(
                &mut violations,
                format!("n={m}"),
                format!(
                    "rho {} vs divisor count {}",
                    rho.at(m as i64),
                    oracle.values[m]
                ),
            );
        }
    }
    let rho_vec: Vec<BigInt> = rho.values().iter().map(|&v| BigInt::from(v)).collect();
    let back = apply(&euler_matrix(n), &rho_vec)?;
    for (m, value) in back.iter().enumerate() {
        if value != &BigInt::from(sigma.at(m as i64)) {
            push_violation(
                &mut violations,
                format!("n={m}"),
                format!("E*rho gives {} vs sigma {}", value, sigma.at(m as i64)),
            );
        }
    }
    Ok(outcome(SuiteId::Roundtrip, n as u64, violations))
}

fn primes(n: usize) -> Result<SuiteOutcome> {
    let sigma = sigma_up_to(n)?;
    let rho = rho_up_to(n, &sigma)?;
    let recovered = primes_up_to(n, &rho)?;
    let oracle = primes_sieve(n)?;
    let mut violations = Vec::new();
    if recovered != oracle.values {
        let missing: Vec<u64> = oracle
            .values
            .iter()
            .filter(|p| !recovered.contains(p))
            .copied()
            .take(VIOLATION_CAP)
            .collect();
        let spurious: Vec<u64> = recovered
            .iter()
            .filter(|p| !oracle.values.contains(p))
            .copied()
            .take(VIOLATION_CAP)
            .collect();
        push_violation(
            &mut violations,
            "prime set".into(),
            format!("missing {missing:?}, spurious {spurious:?}"),
        );
    }
    Ok(outcome(SuiteId::Primes, n as u64, violations))
}

/// Run the selected suites at bound n and assemble the report.
pub fn run(n: u64, selected: &[SuiteId]) -> Result<VerifyReport> {
    for suite in selected {
        if n > suite.cap() {
            return Err(Error::Resource(format!(
                "suite {} is capped at n <= {}, got {n}",
                suite.name(),
                suite.cap()
            )));
        }
    }
    let bound = n as usize;
    let mut suites = Vec::new();
    let mut report_only = Vec::new();
    for suite in selected {
        let result = match suite {
            SuiteId::Identity14 => identity14(bound)?,
            SuiteId::Lacing21 => lacing21(bound),
            SuiteId::Properties => properties(bound, &mut report_only)?,
            SuiteId::Splits => splits(bound, &mut report_only)?,
            SuiteId::Roundtrip => roundtrip(bound)?,
            SuiteId::Primes => primes(bound)?,
        };
        suites.push(result);
    }
    let pass = suites.iter().all(|s| s.pass);
    Ok(VerifyReport {
        bound: n,
        pass,
        suites,
        report_only,
    })
}
