//! Representability: which targets have at least one partition, and the
//! exact threshold beyond which every target does.
//!
//! For a coprime set the Apéry set with respect to the smallest part — for
//! each residue class, the least representable target in it — answers both
//! questions: `n` is representable iff `n >= apery[n mod min(A)]`, and the
//! largest non-representable target is `max(apery) - min(A)`.

use num_traits::Zero;

use crate::count::count_dp;
use crate::error::Error;
use crate::partset::PartSet;

/// The representability threshold data of a coprime set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusResult {
    pub set: PartSet,
    /// Largest non-representable target; `-1` when every `n >= 0` is
    /// representable (exactly the sets containing 1).
    pub frobenius: i64,
    /// `frobenius + 1`: the least `n0` with `p_A(n) >= 1` for all `n >= n0`.
    pub threshold: u64,
    /// `apery[s]` = least representable target congruent to `s` mod `min(A)`.
    pub apery: Vec<u64>,
}

/// Computes the Apéry set with respect to `min(A)` by round-robin
/// relaxation: residues are vertices, the other parts are edge weights, and
/// `apery[s]` is the shortest-path distance from 0 in the cyclic graph.
/// Each full pass is `O(min(A) * k)`; passes repeat until a fixpoint.
pub fn apery_set(a: &PartSet) -> Result<Vec<u64>, Error> {
    if !a.is_coprime() {
        return Err(Error::NotCoprime { gcd: a.gcd() });
    }
    let a_min = a.min_part();
    let mut apery = vec![u64::MAX; a_min as usize];
    apery[0] = 0;
    loop {
        let mut changed = false;
        for s in 0..a_min as usize {
            for &p in &a.parts()[1..] {
                let Some(candidate) = apery[s].checked_add(p) else {
                    continue; // unreached residue, nothing to relax yet
                };
                let t = (candidate % a_min) as usize;
                if candidate < apery[t] {
                    apery[t] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(apery.iter().all(|&v| v != u64::MAX));
    Ok(apery)
}

/// Largest non-representable target and the threshold past which every
/// target is representable.
///
/// Only coprime sets have a threshold: with `gcd(A) = g > 1` every target
/// not divisible by `g` is non-representable, so there are infinitely many
/// and the error says so.
pub fn frobenius(a: &PartSet) -> Result<FrobeniusResult, Error> {
    let apery = apery_set(a)?;
    let frobenius = *apery.iter().max().unwrap() as i64 - a.min_part() as i64;
    Ok(FrobeniusResult {
        set: a.clone(),
        frobenius,
        threshold: (frobenius + 1) as u64,
        apery,
    })
}

/// Whether `n` has at least one partition with parts in `a`. Defined for any
/// valid set: a common factor `g > 1` reduces the question to the scaled set
/// when `g | n` and answers no otherwise.
pub fn is_representable(a: &PartSet, n: u64) -> bool {
    let (reduced, g) = a.reduce_gcd();
    if !n.is_multiple_of(g) {
        return false;
    }
    let target = n / g;
    let apery = apery_set(&reduced).expect("reduced set is coprime");
    target >= apery[(target % reduced.min_part()) as usize]
}

/// Brute-force representability over a whole range via the counting table;
/// the oracle the Apéry route is validated against.
pub fn representable_by_counting(a: &PartSet, max_n: u64) -> Vec<bool> {
    let table = count_dp(a, max_n);
    table.counts().iter().map(|c| !c.is_zero()).collect()
}
