//! Counting partitions of `n` with parts in a finite set `A` of positive
//! integers (the classical *denumerant*), exactly and asymptotically.
//!
//! - [`partset`]: canonical part sets, gcd reduction, and the inductive
//!   one-step split.
//! - [`count`]: three independent exact counters — generating-function DP,
//!   the memoized class-decomposition recursion, and capped enumeration.
//! - [`asym`]: the exact-rational leading term `n^(k-1) / (prod A * (k-1)!)`,
//!   per-target error reports, and log-log error-exponent fitting.
//! - [`frobenius`]: Apéry sets, the largest non-representable target, and the
//!   representability threshold.
//!
//! Counts are arbitrary-precision ([`BigUint`]); leading terms and error
//! bounds are exact rationals ([`BigRational`]). Floating point appears only
//! in diagnostic ratios and fitted slopes. All values are immutable after
//! construction and all operations are pure functions, so everything here is
//! safe to share across threads.

pub mod asym;
pub mod count;
pub mod error;
pub mod frobenius;
pub mod partset;

pub use asym::{
    alternating_binomial_check, erdos_lehner_coefficient, error_slope, leading_coefficient,
    leading_term, leading_term_reduced, power_sum_check, report, report_with_count,
    AsymptoticReport, SlopeFit,
};
pub use count::{
    count_any, count_dp, count_recursive, enumerate_partitions, residue_reduction, CountTable,
    Method, RecursiveCounter, ResidueReduction, ENUMERATION_BOUND, ENUMERATION_CAP,
};
pub use error::Error;
pub use frobenius::{
    apery_set, frobenius, is_representable, representable_by_counting, FrobeniusResult,
};
pub use partset::{GcdSplit, PartSet};

pub use num_bigint::BigUint;
pub use num_rational::BigRational;
