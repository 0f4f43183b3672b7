//! Canonical finite sets of positive integer parts, gcd reduction, and the
//! one-step split that drives the inductive counting recursion.

use crate::error::Error;

/// A finite set of positive integer parts, stored strictly increasing, with
/// the gcd of all parts cached at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartSet {
    parts: Vec<u64>,
    gcd: u64,
}

/// The one-step reduction of a coprime part set: one distinguished part is
/// removed, the gcd of the remainder is factored out, and the remainder is
/// scaled down by it.
///
/// For a coprime source set, `gcd(rest_gcd, removed) = 1` and
/// `scaled_rest` is again coprime with one part fewer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSplit {
    /// gcd of the parts that remain after deleting `removed`.
    pub rest_gcd: u64,
    /// The distinguished part deleted from the set.
    pub removed: u64,
    /// The remaining parts, each divided by `rest_gcd`; gcd 1 by construction.
    pub scaled_rest: PartSet,
}

impl PartSet {
    /// Builds a canonical part set from raw integers: duplicates are removed,
    /// parts are sorted ascending, and the gcd is cached.
    ///
    /// Fails with [`Error::EmptySet`] on empty input and
    /// [`Error::NonPositivePart`] if any element is zero or negative.
    pub fn new(raw: &[i64]) -> Result<Self, Error> {
        Self::from_raw(raw).map(|(set, _)| set)
    }

    /// Like [`PartSet::new`], additionally reporting how many duplicate
    /// entries were dropped, so a front end can surface that diagnostic.
    pub fn from_raw(raw: &[i64]) -> Result<(Self, usize), Error> {
        if raw.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&value) = raw.iter().find(|&&v| v <= 0) {
            return Err(Error::NonPositivePart { value });
        }
        let mut parts: Vec<u64> = raw.iter().map(|&v| v as u64).collect();
        parts.sort_unstable();
        parts.dedup();
        let removed = raw.len() - parts.len();
        let gcd = parts.iter().fold(0u64, |acc, &p| num_integer::gcd(acc, p));
        Ok((PartSet { parts, gcd }, removed))
    }

    /// The parts in strictly increasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, `k` in the asymptotic `n^(k-1)` exponent.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a PartSet is nonempty by construction
    }

    /// gcd of all parts; 1 means the set is coprime.
    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn is_coprime(&self) -> bool {
        self.gcd == 1
    }

    pub fn min_part(&self) -> u64 {
        self.parts[0]
    }

    pub fn max_part(&self) -> u64 {
        *self.parts.last().unwrap()
    }

    /// Divides every part by the common gcd, returning the coprime set and
    /// the factor taken out. Identity (factor 1) when already coprime.
    pub fn reduce_gcd(&self) -> (PartSet, u64) {
        let g = self.gcd;
        if g == 1 {
            return (self.clone(), 1);
        }
        let parts: Vec<u64> = self.parts.iter().map(|&p| p / g).collect();
        (PartSet { parts, gcd: 1 }, g)
    }

    /// Splits off the largest part. The maximum is chosen because it
    /// minimizes the number of multiplicity classes the recursion sums over;
    /// any choice that leaves a nonempty remainder would be equally valid.
    pub fn split(&self) -> Result<GcdSplit, Error> {
        self.split_at(self.parts.len() - 1)
    }

    /// Splits off the part at `idx` instead of the maximum. Used to check
    /// that counts do not depend on which part is distinguished.
    ///
    /// Requires a coprime set with at least two parts; panics if `idx` is out
    /// of bounds.
    pub fn split_at(&self, idx: usize) -> Result<GcdSplit, Error> {
        if self.parts.len() < 2 {
            return Err(Error::NeedsTwoParts {
                len: self.parts.len(),
            });
        }
        if self.gcd != 1 {
            return Err(Error::NotCoprime { gcd: self.gcd });
        }
        let removed = self.parts[idx];
        let rest: Vec<u64> = self
            .parts
            .iter()
            .copied()
            .filter(|&p| p != removed)
            .collect();
        let rest_gcd = rest.iter().fold(0u64, |acc, &p| num_integer::gcd(acc, p));
        let scaled: Vec<u64> = rest.iter().map(|&p| p / rest_gcd).collect();
        Ok(GcdSplit {
            rest_gcd,
            removed,
            scaled_rest: PartSet {
                parts: scaled,
                gcd: 1,
            },
        })
    }
}

impl std::fmt::Display for PartSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
