use thiserror::Error;

/// Errors reported by part-set construction and the counting/asymptotic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A part set must contain at least one part.
    #[error("part set is empty")]
    EmptySet,

    /// Parts must be positive; zero and negative inputs are rejected rather
    /// than silently dropped.
    #[error("part {value} is not a positive integer")]
    NonPositivePart { value: i64 },

    /// The inductive split removes one part, so it needs at least two.
    #[error("need at least two parts, got {len}")]
    NeedsTwoParts { len: usize },

    /// The operation is only defined for sets whose parts have gcd 1.
    #[error("parts share a common factor {gcd} > 1")]
    NotCoprime { gcd: u64 },

    /// More partitions exist than the enumeration cap allows; count instead
    /// of listing.
    #[error("more than {cap} partitions exist; use a counting routine instead")]
    CapExceeded { cap: usize },

    /// Enumeration is a test oracle, deliberately restricted to small targets.
    #[error("enumeration target {n} exceeds the safety bound {bound}")]
    EnumerationBound { n: u64, bound: u64 },

    /// The slope-fit preconditions on the window geometry were violated.
    #[error("invalid fit range: {0}")]
    FitRange(&'static str),

    /// Fewer than two windows carried a nonzero error, so no slope can be fit.
    #[error("degenerate fit: only {nonzero_windows} window(s) with nonzero error")]
    DegenerateFit { nonzero_windows: usize },
}
