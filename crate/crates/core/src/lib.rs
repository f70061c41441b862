//! Pentagonal-number-theorem machinery for the sequence ρ(n) of integer
//! partitions with all parts equal (equivalently, divisor counts).
//!
//! The toolkit is built around one identity: multiplying the generating
//! function Σ ρ(n)xⁿ = 1 + Σ_{k≥1} x^k/(1−x^k) by Euler's function
//! ∏(1−x^m) yields Σ_h x^h ∏_{m≠h}(1−x^m), the σ-function. Unfolding that
//! identity coefficientwise gives a pentagonal recurrence that recovers
//! ρ(n) — and hence the primes, the n with ρ(n) = 2 — from the σ-sequence
//! in the same number of operations Euler's recurrence needs for the
//! partition function.
//!
//! Modules:
//! - [`pentagonal`]: generalized pentagonal numbers, the sign sequence σ₀,
//!   index classification, partial sums
//! - [`power_series`]: exact truncated integer power series; the
//!   independent oracle for every identity used elsewhere
//! - [`sigma_matrix`]: the σ-matrix of j-laced sequences, region
//!   classification, and empirical property scanners
//! - [`sigma_sequence`]: the σ-sequence (anti-diagonal sums of the
//!   σ-matrix) and its upper/lower decompositions
//! - [`divisor_engine`]: the pentagonal recurrence for ρ(n), Euler's
//!   partition recurrence, the Euler matrix and its inverse, prime
//!   extraction
//! - [`oracles`]: deliberately naive classical baselines (trial division,
//!   sieves, brute-force partition enumeration) used only for verification
//!   and benchmarking

pub mod divisor_engine;
pub mod error;
pub mod oracles;
pub mod pentagonal;
pub mod power_series;
pub mod sigma_matrix;
pub mod sigma_sequence;

pub use divisor_engine::{
    apply, euler_inverse, euler_matrix, partition_up_to, primes_up_to, rho_up_to,
    PartitionSequence, RhoSequence, ToeplitzLower,
};
pub use error::{Error, Result};
pub use oracles::{
    divisor_count, divisor_counts_sieve, partition_count_bruteforce, primes_sieve, OracleKind,
    OracleTable,
};
pub use pentagonal::{
    classify_pentagonal, generalized_pentagonal, partial_sum_sigma0, pentagonal_terms_up_to,
    sigma0, PentClass, PentagonalTerm, SignSequence,
};
pub use power_series::{
    euler_function, euler_omit, geometric, multiply, rho_series_oracle, sigma_function_series,
    TruncatedSeries,
};
pub use sigma_matrix::{
    build_window, laced_sigma, p2_7_boundary_rows, p2_9_literal_violations, region_of,
    scan_property, PropertyId, PropertyReport, Region, RegionTag, SigmaMatrixWindow, Violation,
};
pub use sigma_sequence::{
    sigma_u_intervals, sigma_up_to, split_sigma, SigmaSequence, SigmaSplit, SplitConvention,
};
