//! The computational gadgets behind "Cantor–Bernstein implies excluded
//! middle".
//!
//! A proposition is modelled as a subsingleton `A`, and `A + ℕ∞` as
//! [`SumElem`]: `Left` means "an element of `A` was reached". Whether `A` is
//! inhabited is never assumed decidable; what *is* decidable is whether a
//! given continuous map `ℕ∞ → A + ℕ∞` ever lands on `Left`, because `ℕ∞`
//! is searchable. Over `ℕ` the same question is only semi-decidable, which
//! [`bounded_lpo`] makes concrete.

use crate::budget::FuelExhausted;
use crate::conat::CoNat;
use crate::search::{find_counterexample, Predicate, SearchOutcome};

/// Disjoint union `A + R` where `A` has at most one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sum<R> {
    Left,
    Right(R),
}

/// `A + ℕ∞`.
pub type SumElem = Sum<CoNat>;

impl SumElem {
    /// Same variant, and `Right` payloads agree on their first `m` bits.
    pub fn eq_upto(&self, other: &SumElem, m: u64) -> Result<bool, FuelExhausted> {
        match (self, other) {
            (Sum::Left, Sum::Left) => Ok(true),
            (Sum::Right(p), Sum::Right(q)) => p.eq_upto(q, m),
            _ => Ok(false),
        }
    }
}

/// Whether the subsingleton is reached.
#[derive(Debug, Clone)]
pub enum Decision {
    /// The map sends `witness` to `Left`.
    Inhabited(CoNat),
    /// No point of `ℕ∞` is sent to `Left`.
    Empty,
}

/// `x ↦ inr(x)`.
pub fn f_inject(x: CoNat) -> SumElem {
    Sum::Right(x)
}

/// `inl ↦ 0̄`, `inr(x) ↦ succ(x)`. Images are told apart by bit 0.
pub fn g_embed(s: &SumElem) -> CoNat {
    match s {
        Sum::Left => CoNat::finite(0),
        Sum::Right(x) => x.succ(),
    }
}

/// `n ↦ inr(n)`: the `ℕ` analogue of [`f_inject`].
pub fn nat_inject(n: u64) -> Sum<u64> {
    Sum::Right(n)
}

/// `inl ↦ 0`, `inr(n) ↦ n + 1`: the `ℕ` analogue of [`g_embed`].
pub fn nat_embed(s: &Sum<u64>) -> u64 {
    match s {
        Sum::Left => 0,
        Sum::Right(n) => n + 1,
    }
}

/// The predicate that is false exactly where `h` lands on `Left`.
pub fn left_indicator<H>(h: H) -> Predicate
where
    H: Fn(&CoNat) -> Result<SumElem, FuelExhausted> + Send + Sync + 'static,
{
    Predicate::new(move |x| Ok(matches!(h(x)?, Sum::Right(_))))
}

/// Decides whether `h` ever hits `Left`.
///
/// `h` must be pure and read finitely many bits of its argument. If `h` is
/// moreover surjective onto `A + ℕ∞` (unverifiable, so not checked), then
/// `Empty` means `A` is empty and `Inhabited` exhibits an element.
pub fn sur_decides<H>(h: H) -> Result<Decision, FuelExhausted>
where
    H: Fn(&CoNat) -> Result<SumElem, FuelExhausted> + Send + Sync + 'static,
{
    Ok(match find_counterexample(&left_indicator(h))? {
        SearchOutcome::HoldsEverywhere => Decision::Empty,
        SearchOutcome::Counterexample { witness, .. } => Decision::Inhabited(witness),
    })
}

/// With `y = h(x)`, whether `f(x) = y` or `x = g(y)`.
pub fn cbbb_check<X, Y, H, F, G>(h: H, f: F, g: G, x: &X) -> bool
where
    X: PartialEq,
    Y: PartialEq,
    H: Fn(&X) -> Y,
    F: Fn(&X) -> Y,
    G: Fn(&Y) -> X,
{
    let y = h(x);
    f(x) == y || g(&y) == *x
}

/// [`cbbb_check`] over `ℕ∞`, comparing values on their first `bound` bits.
pub fn cbbb_check_upto<H, F, G>(
    h: H,
    f: F,
    g: G,
    x: &CoNat,
    bound: u64,
) -> Result<bool, FuelExhausted>
where
    H: Fn(&CoNat) -> SumElem,
    F: Fn(&CoNat) -> SumElem,
    G: Fn(&SumElem) -> CoNat,
{
    let y = h(x);
    if f(x).eq_upto(&y, bound)? {
        return Ok(true);
    }
    g(&y).eq_upto(x, bound)
}

/// Outcome of a fuel-bounded search for a zero over `ℕ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpoOutcome {
    /// The least zero.
    Found(u64),
    /// No zero below the fuel. Says nothing about larger indices.
    Unknown,
}

/// Searches `p(0), p(1), …, p(fuel - 1)` for a zero.
pub fn bounded_lpo<P>(mut p: P, fuel: u64) -> LpoOutcome
where
    P: FnMut(u64) -> bool,
{
    (0..fuel)
        .find(|&n| !p(n))
        .map_or(LpoOutcome::Unknown, LpoOutcome::Found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conat::Classification;

    #[test]
    fn f_inject_examples() {
        match f_inject(CoNat::finite(0)) {
            Sum::Right(p) => assert!(p.eq_upto(&CoNat::finite(0), 32).unwrap()),
            Sum::Left => panic!(),
        }
        match f_inject(CoNat::omega()) {
            Sum::Right(p) => assert!(p.eq_upto(&CoNat::omega(), 32).unwrap()),
            Sum::Left => panic!(),
        }
        let a = f_inject(CoNat::finite(2));
        let b = f_inject(CoNat::finite(3));
        assert!(!a.eq_upto(&b, 4).unwrap());
    }

    #[test]
    fn g_embed_examples() {
        assert!(g_embed(&Sum::Left).eq_upto(&CoNat::finite(0), 32).unwrap());
        assert!(g_embed(&Sum::Right(CoNat::finite(1)))
            .eq_upto(&CoNat::finite(2), 32)
            .unwrap());
        for p in [CoNat::finite(0), CoNat::finite(9), CoNat::omega()] {
            assert!(g_embed(&Sum::Right(p)).bit_at(0).unwrap());
        }
        assert!(!g_embed(&Sum::Left).bit_at(0).unwrap());
    }

    #[test]
    fn all_right_is_empty() {
        let d = sur_decides(|p| Ok(Sum::Right(p.clone()))).unwrap();
        assert!(matches!(d, Decision::Empty));
    }

    #[test]
    fn left_at_zero_is_inhabited_by_zero() {
        let d = sur_decides(|p| {
            Ok(if !p.bit_at(0)? {
                Sum::Left
            } else {
                Sum::Right(p.tail())
            })
        })
        .unwrap();
        match d {
            Decision::Inhabited(w) => assert!(w.eq_upto(&CoNat::finite(0), 1).unwrap()),
            Decision::Empty => panic!("expected inhabited"),
        }
    }

    #[test]
    fn left_at_four_is_inhabited_by_four() {
        let h = |p: &CoNat| {
            Ok(if p.bit_at(3)? && !p.bit_at(4)? {
                Sum::Left
            } else {
                Sum::Right(p.clone())
            })
        };
        match sur_decides(h).unwrap() {
            Decision::Inhabited(w) => {
                assert_eq!(w.classify(1024).unwrap(), Classification::Finite(4));
                assert!(matches!(h(&w).unwrap(), Sum::Left));
            }
            Decision::Empty => panic!("expected inhabited"),
        }
    }

    #[test]
    fn cbbb_shift_examples() {
        let shift = |n: &u64| Sum::Right(*n);
        let f = |n: &u64| nat_inject(*n);
        assert!(cbbb_check(shift, f, nat_embed, &5));

        let h0 = |n: &u64| if *n == 0 { Sum::Left } else { Sum::Right(*n) };
        assert!(cbbb_check(h0, f, nat_embed, &0));

        let h3 = |_: &u64| Sum::Right(7);
        assert!(!cbbb_check(h3, f, nat_embed, &3));
    }

    #[test]
    fn cbbb_shift_holds_up_to_1000() {
        let shift = |n: &u64| Sum::Right(*n);
        assert!((0..=1000u64).all(|n| cbbb_check(shift, |m: &u64| nat_inject(*m), nat_embed, &n)));
    }

    #[test]
    fn cbbb_over_conat() {
        let f = |x: &CoNat| f_inject(x.clone());
        // h = f: first disjunct always holds.
        assert!(cbbb_check_upto(f, f, g_embed, &CoNat::finite(3), 16).unwrap());
        // h(x) = Left at x = 0̄: g(Left) = 0̄ = x.
        assert!(cbbb_check_upto(|_| Sum::Left, f, g_embed, &CoNat::finite(0), 16).unwrap());
        // h(x) = Left at x = 2̄: neither disjunct.
        assert!(!cbbb_check_upto(|_| Sum::Left, f, g_embed, &CoNat::finite(2), 16).unwrap());
        // h(x) = inr(tail x) at x = succ(1̄): g(y) = succ(tail x) = x.
        let back = |x: &CoNat| Sum::Right(x.tail());
        assert!(cbbb_check_upto(back, f, g_embed, &CoNat::finite(2), 16).unwrap());
    }

    #[test]
    fn bounded_lpo_examples() {
        assert_eq!(bounded_lpo(|_| true, 1000), LpoOutcome::Unknown);
        assert_eq!(bounded_lpo(|n| n != 17, 1000), LpoOutcome::Found(17));
        assert_eq!(bounded_lpo(|n| n != 1_000_000, 1000), LpoOutcome::Unknown);
        assert_eq!(bounded_lpo(|n| n != 3, 0), LpoOutcome::Unknown);
    }
}
