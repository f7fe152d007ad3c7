//! Exhaustive search over the conatural numbers.
//!
//! `ℕ∞` is the set of non-increasing infinite bit sequences: `n̄` has exactly
//! `n` leading ones, `ω` is all ones. Although the set is infinite, every
//! decidable predicate over it that inspects finitely many bits can be
//! quantified over in finite time. The trick is the selection functional
//! [`search::epsilon`], which builds (lazily) a candidate counterexample `ε(Q)`
//! such that `Q` holds everywhere iff `Q(ε(Q))` holds.
//!
//! ```
//! use omnisearch::{conat::CoNat, dsl, search};
//!
//! // "p is not 6̄" fails exactly at 6̄.
//! let q = dsl::compile(&dsl::parse("!(bit(5) & !bit(6))").unwrap());
//! assert!(!search::forall(&q).unwrap());
//!
//! let w = search::epsilon(&q);
//! assert!(w.eq_upto(&CoNat::finite(6), 64).unwrap());
//! ```
//!
//! The crate is `no_std` and only needs `alloc` plus 64-bit atomics.
//!
//! Modules:
//!
//! - [`conat`]: the lazily memoized sequence type [`CoNat`].
//! - [`budget`]: the process-wide step budget that turns runaway
//!   (non-continuous) predicates into [`FuelExhausted`] errors.
//! - [`search`]: `ε`, universal quantification, counterexample search.
//! - [`taboo`]: the injections into and out of `A + ℕ∞`, the
//!   surjection-decides-inhabitation combinator and the bounded `ℕ` search
//!   that contrasts with it.
//! - [`dsl`]: a tiny boolean language for building predicates with a
//!   statically known modulus of continuity.
//! - [`oracle`]: a brute-force decision procedure used as ground truth.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod budget;
pub mod conat;
pub mod dsl;
pub mod oracle;
pub mod search;
pub mod taboo;

pub use budget::FuelExhausted;
pub use conat::{Classification, CoNat};
pub use search::{Predicate, SearchOutcome};
pub use taboo::{Decision, Sum, SumElem};
