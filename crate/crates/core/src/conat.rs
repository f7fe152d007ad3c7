//! Conatural numbers as lazily computed, memoized non-increasing bit streams.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::budget::{self, FuelExhausted};

const UNKNOWN: u64 = u64::MAX;

type Generator = dyn Fn(u64) -> Result<bool, FuelExhausted> + Send + Sync;

/// An element of `ℕ∞`: an infinite non-increasing sequence of bits.
///
/// Values are cheap to clone (reference counted) and safe to share between
/// threads. Nothing is evaluated at construction; bits are computed on
/// demand by [`CoNat::bit_at`] and remembered.
///
/// Because the sequence is non-increasing, the memo is just two numbers:
/// how many leading ones have been confirmed, and where the first zero is
/// (once seen). Both are published with `fetch_max`/`fetch_min`, so racing
/// readers can only ever agree.
#[derive(Clone)]
pub struct CoNat(Arc<Node>);

struct Node {
    source: Source,
    ones: AtomicU64,
    zero_at: AtomicU64,
}

enum Source {
    Finite(u64),
    Omega,
    Succ(CoNat),
    Tail(CoNat),
    Generated(Arc<Generator>),
    Tapped(CoNat, Arc<ReadTap>),
}

/// Result of a fuel-bounded attempt to tell `n̄` from `ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// The first zero bit is at index `n`, so the value is exactly `n̄`.
    Finite(u64),
    /// The first `fuel` bits are all ones; nothing more is known.
    AtLeast(u64),
}

impl CoNat {
    fn from_source(source: Source) -> Self {
        CoNat(Arc::new(Node {
            source,
            ones: AtomicU64::new(0),
            zero_at: AtomicU64::new(UNKNOWN),
        }))
    }

    /// `n̄`: `n` ones followed by zeros.
    pub fn finite(n: u64) -> Self {
        Self::from_source(Source::Finite(n))
    }

    /// `ω`: all ones.
    pub fn omega() -> Self {
        Self::from_source(Source::Omega)
    }

    /// Prepends a one: bit 0 is 1, bit `n + 1` is bit `n` of `self`.
    pub fn succ(&self) -> Self {
        Self::from_source(Source::Succ(self.clone()))
    }

    /// Drops bit 0. `tail(succ(p))` agrees with `p`, and `tail(0̄)` is `0̄`.
    pub fn tail(&self) -> Self {
        Self::from_source(Source::Tail(self.clone()))
    }

    /// Builds a member of `ℕ∞` from an arbitrary bit stream.
    ///
    /// Bit `n` of the result is the AND of `f(0)..=f(n)`, so any input is
    /// accepted and non-increasing inputs come back unchanged.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(u64) -> bool + Send + Sync + 'static,
    {
        Self::from_fallible_fn(move |n| Ok(f(n)))
    }

    /// Like [`CoNat::from_fn`] for generators that can run out of fuel.
    pub fn from_fallible_fn<F>(f: F) -> Self
    where
        F: Fn(u64) -> Result<bool, FuelExhausted> + Send + Sync + 'static,
    {
        Self::from_source(Source::Generated(Arc::new(f)))
    }

    /// A view of `self` that records every bit read into `tap`.
    pub fn tapped(&self, tap: Arc<ReadTap>) -> Self {
        Self::from_source(Source::Tapped(self.clone(), tap))
    }

    /// Bit `n` of the sequence.
    ///
    /// Evaluates at most bits `0..=n` of the underlying generator, each at
    /// most once per value (modulo races between threads, which recompute
    /// the same bits).
    pub fn bit_at(&self, n: u64) -> Result<bool, FuelExhausted> {
        let node = &*self.0;
        match &node.source {
            Source::Finite(k) => {
                budget::charge()?;
                Ok(n < *k)
            }
            Source::Omega => {
                budget::charge()?;
                Ok(true)
            }
            Source::Tapped(inner, tap) => {
                tap.record(n);
                inner.bit_at(n)
            }
            _ => node.memoized_bit(n),
        }
    }

    /// True iff the first `m` bits of `self` and `other` agree.
    ///
    /// This is the only equality offered; equality of whole sequences is
    /// not decidable.
    pub fn eq_upto(&self, other: &CoNat, m: u64) -> Result<bool, FuelExhausted> {
        for k in 0..m {
            if self.bit_at(k)? != other.bit_at(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Looks for the first zero among the first `fuel` bits.
    pub fn classify(&self, fuel: u64) -> Result<Classification, FuelExhausted> {
        for k in 0..fuel {
            if !self.bit_at(k)? {
                return Ok(Classification::Finite(k));
            }
        }
        Ok(Classification::AtLeast(fuel))
    }

    /// The first `m` bits.
    pub fn prefix(&self, m: u64) -> Result<Vec<bool>, FuelExhausted> {
        (0..m).map(|k| self.bit_at(k)).collect()
    }

    /// The first `m` bits as `'0'`/`'1'` characters, index 0 first.
    pub fn prefix_string(&self, m: u64) -> Result<String, FuelExhausted> {
        (0..m)
            .map(|k| self.bit_at(k).map(|b| if b { '1' } else { '0' }))
            .collect()
    }
}

impl Node {
    fn raw_bit(&self, n: u64) -> Result<bool, FuelExhausted> {
        match &self.source {
            Source::Succ(p) => {
                if n == 0 {
                    budget::charge()?;
                    Ok(true)
                } else {
                    p.bit_at(n - 1)
                }
            }
            Source::Tail(p) => p.bit_at(n + 1),
            Source::Generated(g) => {
                budget::charge()?;
                g(n)
            }
            Source::Finite(_) | Source::Omega | Source::Tapped(..) => {
                unreachable!("served without memo")
            }
        }
    }

    fn memoized_bit(&self, n: u64) -> Result<bool, FuelExhausted> {
        let ones = self.ones.load(Ordering::Acquire);
        if n < ones {
            return Ok(true);
        }
        if self.zero_at.load(Ordering::Acquire) <= n {
            return Ok(false);
        }
        // Running AND: the first zero at or below n decides.
        for k in ones..=n {
            if !self.raw_bit(k)? {
                self.zero_at.fetch_min(k, Ordering::AcqRel);
                return Ok(false);
            }
            self.ones.fetch_max(k + 1, Ordering::AcqRel);
        }
        Ok(true)
    }
}

impl fmt::Debug for CoNat {
    /// Shows only what has already been computed; never forces bits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let node = &*self.0;
        match &node.source {
            Source::Finite(n) => write!(f, "CoNat::finite({n})"),
            Source::Omega => f.write_str("CoNat::omega()"),
            Source::Tapped(inner, _) => f.debug_tuple("Tapped").field(inner).finish(),
            _ => {
                let zero_at = node.zero_at.load(Ordering::Relaxed);
                f.debug_struct("CoNat")
                    .field("known_ones", &node.ones.load(Ordering::Relaxed))
                    .field("first_zero", &(zero_at != UNKNOWN).then_some(zero_at))
                    .finish()
            }
        }
    }
}

/// Counts reads through a [`CoNat::tapped`] view.
#[derive(Debug)]
pub struct ReadTap {
    reads: AtomicU64,
    // one past the largest index read, 0 if nothing was read
    extent: AtomicU64,
}

impl ReadTap {
    pub fn new() -> Self {
        ReadTap {
            reads: AtomicU64::new(0),
            extent: AtomicU64::new(0),
        }
    }

    fn record(&self, n: u64) {
        self.reads.fetch_add(1, Ordering::Relaxed);
        self.extent
            .fetch_max(n.saturating_add(1), Ordering::Relaxed);
    }

    /// Number of `bit_at` calls seen.
    pub fn reads(&self) -> u64 {
        self.reads.load(Ordering::Relaxed)
    }

    /// One more than the largest index read; 0 when nothing was read.
    pub fn extent(&self) -> u64 {
        self.extent.load(Ordering::Relaxed)
    }
}

impl Default for ReadTap {
    fn default() -> Self {
        Self::new()
    }
}
