//! Brute-force ground truth for predicates of known modulus.
//!
//! A predicate reading only bits `0..m` cannot tell apart two sequences with
//! the same `m`-prefix. Every member of `ℕ∞` has the `m`-prefix of exactly
//! one of `0̄, 1̄, …, m̄` (`ω` and everything from `m̄` up share the all-ones
//! prefix). So evaluating on those `m + 1` values decides the predicate
//! everywhere. This never touches the selection functional.

use alloc::vec::Vec;

use crate::budget::FuelExhausted;
use crate::conat::CoNat;
use crate::search::Predicate;

/// `0̄, 1̄, …, m̄`.
#[derive(Debug, Clone)]
pub struct RepresentativeSet {
    pub modulus: u64,
    pub members: Vec<CoNat>,
}

pub fn representatives(m: u64) -> RepresentativeSet {
    RepresentativeSet {
        modulus: m,
        members: (0..=m).map(CoNat::finite).collect(),
    }
}

/// Whether `q` holds on every `n̄` with `n ≤ m`.
///
/// Equals universal quantification over `ℕ∞` when `q` reads no bit at or
/// beyond `m`.
pub fn brute_force_forall(q: &Predicate, m: u64) -> Result<bool, FuelExhausted> {
    Ok(least_failure(q, m)?.is_none())
}

/// The least `n ≤ m` with `q(n̄)` false.
pub fn least_failure(q: &Predicate, m: u64) -> Result<Option<u64>, FuelExhausted> {
    for n in 0..=m {
        if !q.eval(&CoNat::finite(n))? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
