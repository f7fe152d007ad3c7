//! Process-wide step budget.
//!
//! Every generator evaluation performed by a [`CoNat`](crate::conat::CoNat)
//! charges one step. The budget is unlimited unless someone installs a
//! limit with [`set_step_budget`]; once it reaches zero every further
//! evaluation fails with [`FuelExhausted`] until the budget is reset.
//!
//! The budget is a single global counter shared by every thread.

use core::fmt;
use core::sync::atomic::{AtomicU64, Ordering};

const UNLIMITED: u64 = u64::MAX;

static REMAINING: AtomicU64 = AtomicU64::new(UNLIMITED);

/// The step budget ran out before the computation finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FuelExhausted;

impl fmt::Display for FuelExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("step budget exhausted")
    }
}

impl core::error::Error for FuelExhausted {}

/// Installs a step budget, or removes it with `None`.
///
/// `Some(u64::MAX)` is indistinguishable from `None`.
pub fn set_step_budget(steps: Option<u64>) {
    REMAINING.store(steps.unwrap_or(UNLIMITED), Ordering::SeqCst);
}

/// Steps left, or `None` when unlimited.
pub fn remaining() -> Option<u64> {
    match REMAINING.load(Ordering::SeqCst) {
        UNLIMITED => None,
        n => Some(n),
    }
}

/// Consumes one step.
pub(crate) fn charge() -> Result<(), FuelExhausted> {
    REMAINING
        .fetch_update(Ordering::AcqRel, Ordering::Acquire, |left| match left {
            UNLIMITED => Some(UNLIMITED),
            0 => None,
            n => Some(n - 1),
        })
        .map(|_| ())
        .map_err(|_| FuelExhausted)
}
