//! Exact counting of partitions with parts in a finite set.
//!
//! Three independent routes to the same numbers:
//! - [`count_dp`]: generating-function expansion by dynamic programming,
//!   `O(k * max_n)` big-integer additions — the workhorse.
//! - [`count_recursive`]: the inductive class-decomposition recursion, which
//!   groups partitions by the multiplicity of one distinguished part and
//!   reduces to a set with one part fewer.
//! - [`enumerate_partitions`]: capped exhaustive listing, the trust anchor
//!   for small targets.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::partset::{GcdSplit, PartSet};

/// Which exact counting algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Generating-function dynamic programming.
    Dp,
    /// Class-decomposition recursion with memoization.
    Recursive,
}

/// The full table of counts `p_A(0), p_A(1), ..., p_A(max_n)` for one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    set: PartSet,
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn set(&self) -> &PartSet {
        &self.set
    }

    pub fn max_n(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    pub fn get(&self, n: u64) -> &BigUint {
        &self.counts[n as usize]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }
}

/// Expands the product generating function `prod_{a in A} 1/(1 - x^a)` up to
/// degree `max_n` by the standard unbounded-knapsack sweep. Works for any
/// valid set; no coprimality is assumed. `counts[0] = 1` always: the empty
/// partition is the unique partition of 0.
pub fn count_dp(a: &PartSet, max_n: u64) -> CountTable {
    let len = max_n as usize + 1;
    let mut counts = vec![BigUint::zero(); len];
    counts[0] = BigUint::one();
    for &p in a.parts() {
        let p = p as usize;
        if p >= len {
            continue;
        }
        for i in p..len {
            let (done, rest) = counts.split_at_mut(i);
            rest[0] += &done[i - p];
        }
    }
    CountTable {
        set: a.clone(),
        counts,
    }
}

/// The residue data that fixes which multiplicities of the distinguished part
/// can occur in a partition of `n`.
///
/// With `d = rest_gcd` and `a_k = removed`, every partition of `n` uses
/// `base_multiplicity + l*d` copies of `a_k` for some `l` in
/// `0..=class_max`, because the rest of the partition is a multiple of `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueReduction {
    pub n: u64,
    /// The unique `u` in `[0, d)` with `n ≡ u * a_k (mod d)`.
    pub base_multiplicity: u64,
    /// `m = (n - u * a_k) / d`, exact; negative when `n < u * a_k`.
    pub reduced_target: i128,
    /// `floor(m / a_k)` when `m >= 0`, else `-1` (no class exists).
    pub class_max: i128,
}

/// Solves `n ≡ u * a_k (mod d)` for the unique `u` in `[0, d)` and derives
/// the reduced target and the number of multiplicity classes.
///
/// Requires `gcd(d, a_k) = 1`, which every [`GcdSplit`] of a coprime set
/// guarantees.
pub fn residue_reduction(n: u64, split: &GcdSplit) -> ResidueReduction {
    let d = split.rest_gcd;
    let a_k = split.removed;
    debug_assert_eq!(num_integer::gcd(d, a_k), 1);
    let u = if d == 1 {
        0
    } else {
        let inv = mod_inverse(a_k % d, d);
        (n % d) * inv % d
    };
    let m = (n as i128 - u as i128 * a_k as i128) / d as i128;
    let r = if m < 0 { -1 } else { m / a_k as i128 };
    ResidueReduction {
        n,
        base_multiplicity: u,
        reduced_target: m,
        class_max: r,
    }
}

/// Inverse of `a` modulo `m` for coprime `a`, `m` with `m >= 2`.
fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid on (a, m)
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

/// Memoizing evaluator for the class-decomposition recursion.
///
/// The cache persists across calls, so sweeping one set over many targets
/// shares all sub-problem counts. Confine one counter per thread; the
/// routines it calls are pure.
#[derive(Debug, Default)]
pub struct RecursiveCounter {
    memo: HashMap<Box<[u64]>, HashMap<u64, BigUint>>,
}

impl RecursiveCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counts partitions of `n` with parts in the coprime set `a` by class
    /// decomposition: split off the largest part `a_k`, group partitions by
    /// how many copies of `a_k` they contain (`u + l*d` for `l = 0..=r`),
    /// and recurse on the scaled remainder set for each class:
    ///
    /// ```text
    /// p_A(n) = sum_{l=0}^{r} p_A'(m - l * a_k)
    /// ```
    ///
    /// The sum is empty (count 0) when `m < 0`, which extends the recursion
    /// to all `n >= 0`. Callers with a non-coprime set reduce by the gcd
    /// first; see [`count_any`].
    pub fn count(&mut self, a: &PartSet, n: u64) -> Result<BigUint, Error> {
        if !a.is_coprime() {
            return Err(Error::NotCoprime { gcd: a.gcd() });
        }
        Ok(self.eval(a, n))
    }

    fn eval(&mut self, a: &PartSet, n: u64) -> BigUint {
        if a.len() == 1 {
            // coprime singleton is {1}; every n has exactly the all-ones partition
            return BigUint::one();
        }
        if let Some(hit) = self.memo.get(a.parts()).and_then(|by_n| by_n.get(&n)) {
            return hit.clone();
        }
        let split = a.split().expect("coprime set with >= 2 parts");
        let rr = residue_reduction(n, &split);
        let mut acc = BigUint::zero();
        let mut sub_target = rr.reduced_target;
        while sub_target >= 0 {
            acc += self.eval(&split.scaled_rest, sub_target as u64);
            sub_target -= split.removed as i128;
        }
        self.memo
            .entry(a.parts().into())
            .or_default()
            .insert(n, acc.clone());
        acc
    }
}

/// One-shot [`RecursiveCounter::count`] with a fresh cache.
pub fn count_recursive(a: &PartSet, n: u64) -> Result<BigUint, Error> {
    RecursiveCounter::new().count(a, n)
}

/// Enumeration refuses targets above this bound; listing is a test oracle,
/// not a counting algorithm.
pub const ENUMERATION_BOUND: u64 = 200;

/// Default cap on the number of listed partitions.
pub const ENUMERATION_CAP: usize = 1_000_000;

/// Lists every partition of `n` with parts in `a`, as non-decreasing part
/// sequences in lexicographic order.
///
/// Fails with [`Error::EnumerationBound`] for `n > 200` and
/// [`Error::CapExceeded`] as soon as more than `cap` partitions are found —
/// the signal to count instead of list.
pub fn enumerate_partitions(a: &PartSet, n: u64, cap: usize) -> Result<Vec<Vec<u64>>, Error> {
    if n > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    dfs(a.parts(), 0, n, &mut stack, &mut out, cap)?;
    Ok(out)
}

fn dfs(
    parts: &[u64],
    from: usize,
    remaining: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
    cap: usize,
) -> Result<(), Error> {
    if remaining == 0 {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(stack.clone());
        return Ok(());
    }
    for idx in from..parts.len() {
        let p = parts[idx];
        if p > remaining {
            break;
        }
        stack.push(p);
        let res = dfs(parts, idx, remaining - p, stack, out, cap);
        stack.pop();
        res?;
    }
    Ok(())
}

/// Front door for counting with any valid set: a common factor `g > 1` makes
/// `p_A(n)` zero unless `g | n`, and otherwise equal to the reduced set's
/// count at `n / g`.
pub fn count_any(a: &PartSet, n: u64, method: Method) -> BigUint {
    let (reduced, g) = a.reduce_gcd();
    if !n.is_multiple_of(g) {
        return BigUint::zero();
    }
    let target = n / g;
    match method {
        Method::Dp => {
            let table = count_dp(&reduced, target);
            table.counts.into_iter().next_back().unwrap()
        }
        Method::Recursive => {
            count_recursive(&reduced, target).expect("reduced set is coprime")
        }
    }
}
