//! The selection functional `ε` and the quantifiers built on it.
//!
//! For a predicate `Q`, bit `n` of `ε(Q)` is 1 iff `Q(k̄)` holds for every
//! `k ≤ n`. The resulting sequence is lazy: it is a running AND over the
//! values `Q(0̄), Q(1̄), …`, computed only as far as somebody reads it. When
//! `Q` itself is evaluated on `ε(Q)` it reads finitely many bits, which in
//! turn forces finitely many `Q(k̄)`, so the whole thing terminates for any
//! predicate that inspects finitely many bits of its argument.
//!
//! If `Q(ε(Q))` holds then `Q` holds on every element of `ℕ∞`; otherwise
//! `ε(Q)` is itself a counterexample.

use alloc::sync::Arc;
use core::cell::OnceCell;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::budget::FuelExhausted;
use crate::conat::{Classification, CoNat, ReadTap};

/// Classification fuel used when the predicate declares no modulus.
pub const DEFAULT_CLASSIFY_FUEL: u64 = 1024;

type Eval = dyn Fn(&CoNat) -> Result<bool, FuelExhausted> + Send + Sync;

/// A decidable predicate on `ℕ∞`.
///
/// The function must be pure and must read only finitely many bits of its
/// argument. This is a contract: it cannot be checked, but the step budget
/// in [`crate::budget`] bounds the damage when it is violated.
///
/// `declared_modulus`, when present, promises that only bits `0..m` are ever
/// read.
#[derive(Clone)]
pub struct Predicate {
    eval: Arc<Eval>,
    modulus: Option<u64>,
}

impl Predicate {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&CoNat) -> Result<bool, FuelExhausted> + Send + Sync + 'static,
    {
        Predicate {
            eval: Arc::new(f),
            modulus: None,
        }
    }

    pub fn constant(value: bool) -> Self {
        Predicate::new(move |_| Ok(value)).with_modulus(0)
    }

    pub fn with_modulus(mut self, m: u64) -> Self {
        self.modulus = Some(m);
        self
    }

    pub fn declared_modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn eval(&self, p: &CoNat) -> Result<bool, FuelExhausted> {
        (self.eval)(p)
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Predicate")
            .field("declared_modulus", &self.modulus)
            .finish_non_exhaustive()
    }
}

/// Answer to "does `Q` hold on all of `ℕ∞`?".
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    HoldsEverywhere,
    /// `Q(witness)` is false. `classification` says how far the witness was
    /// resolved within the classification fuel.
    Counterexample {
        witness: CoNat,
        classification: Classification,
    },
}

impl SearchOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, SearchOutcome::HoldsEverywhere)
    }
}

/// Counters for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Calls of the predicate, including the final check on `ε(Q)`.
    pub predicate_evals: u64,
    /// Bits the predicate read from its arguments.
    pub bit_reads: u64,
}

#[derive(Default)]
struct Counters {
    evals: AtomicU64,
    tap: Arc<ReadTap>,
}

/// One quantifier query over `ℕ∞`.
///
/// Holds `ε(Q)` together with its memo, so each `Q(k̄)` is evaluated at most
/// once no matter how the result is inspected afterwards.
pub struct Search {
    predicate: Predicate,
    witness: CoNat,
    counters: Arc<Counters>,
    verdict: OnceCell<bool>,
}

impl Search {
    pub fn new(predicate: &Predicate) -> Self {
        let counters = Arc::new(Counters::default());
        let q = predicate.clone();
        let c = counters.clone();
        let witness = CoNat::from_fallible_fn(move |n| {
            c.evals.fetch_add(1, Ordering::Relaxed);
            q.eval(&CoNat::finite(n).tapped(c.tap.clone()))
        });
        Search {
            predicate: predicate.clone(),
            witness,
            counters,
            verdict: OnceCell::new(),
        }
    }

    /// `ε(Q)`.
    pub fn witness(&self) -> &CoNat {
        &self.witness
    }

    /// `Q(ε(Q))`, i.e. whether `Q` holds everywhere.
    pub fn holds(&self) -> Result<bool, FuelExhausted> {
        if let Some(&v) = self.verdict.get() {
            return Ok(v);
        }
        self.counters.evals.fetch_add(1, Ordering::Relaxed);
        let v = self
            .predicate
            .eval(&self.witness.tapped(self.counters.tap.clone()))?;
        let _ = self.verdict.set(v);
        Ok(v)
    }

    /// Classifies a counterexample with the default fuel: twice the declared
    /// modulus, or [`DEFAULT_CLASSIFY_FUEL`] when none is declared.
    pub fn outcome(&self) -> Result<SearchOutcome, FuelExhausted> {
        self.outcome_with_fuel(default_classify_fuel(&self.predicate))
    }

    pub fn outcome_with_fuel(&self, fuel: u64) -> Result<SearchOutcome, FuelExhausted> {
        if self.holds()? {
            return Ok(SearchOutcome::HoldsEverywhere);
        }
        Ok(SearchOutcome::Counterexample {
            witness: self.witness.clone(),
            classification: self.witness.classify(fuel)?,
        })
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            predicate_evals: self.counters.evals.load(Ordering::Relaxed),
            bit_reads: self.counters.tap.reads(),
        }
    }
}

/// Twice the declared modulus (at least 1), else [`DEFAULT_CLASSIFY_FUEL`].
pub fn default_classify_fuel(q: &Predicate) -> u64 {
    match q.declared_modulus() {
        Some(m) => m.saturating_mul(2).max(1),
        None => DEFAULT_CLASSIFY_FUEL,
    }
}

/// The selection functional. Nothing is evaluated until bits are read.
pub fn epsilon(q: &Predicate) -> CoNat {
    Search::new(q).witness
}

/// Decides whether `q` holds on every element of `ℕ∞`.
pub fn forall(q: &Predicate) -> Result<bool, FuelExhausted> {
    Search::new(q).holds()
}

/// Decides whether `q` holds everywhere, producing `ε(q)` as the
/// counterexample when it does not.
pub fn find_counterexample(q: &Predicate) -> Result<SearchOutcome, FuelExhausted> {
    Search::new(q).outcome()
}

/// Universal quantification over a finite, fully enumerated domain.
pub fn finite_forall<T, I, F>(domain: I, mut pred: F) -> bool
where
    I: IntoIterator<Item = T>,
    F: FnMut(&T) -> bool,
{
    domain.into_iter().all(|v| pred(&v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityError {
    FuelExhausted,
    /// The bound is below the predicate's declared modulus, so the finite
    /// check would not cover every distinguishable case.
    BoundBelowModulus {
        bound: u64,
        modulus: u64,
    },
}

impl From<FuelExhausted> for DensityError {
    fn from(_: FuelExhausted) -> Self {
        DensityError::FuelExhausted
    }
}

impl fmt::Display for DensityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityError::FuelExhausted => FuelExhausted.fmt(f),
            DensityError::BoundBelowModulus { bound, modulus } => {
                write!(f, "bound {bound} is below the declared modulus {modulus}")
            }
        }
    }
}

impl core::error::Error for DensityError {}

/// Checks `Q(ω)` and `Q(n̄)` for every `n ≤ bound`.
///
/// A predicate true on `ω` and on every `n̄` is true everywhere; for a
/// predicate of modulus `m ≤ bound` the finite check already sees every
/// case, so the result equals [`forall`].
pub fn check_density(q: &Predicate, bound: u64) -> Result<bool, DensityError> {
    if let Some(m) = q.declared_modulus() {
        if bound < m {
            return Err(DensityError::BoundBelowModulus { bound, modulus: m });
        }
    }
    if !q.eval(&CoNat::omega())? {
        return Ok(false);
    }
    for n in 0..=bound {
        if !q.eval(&CoNat::finite(n))? {
            return Ok(false);
        }
    }
    Ok(true)
}
