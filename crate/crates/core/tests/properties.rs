use std::sync::Arc;

use omnisearch::conat::{CoNat, ReadTap};
use omnisearch::dsl::{self, Expr, Index};
use omnisearch::oracle;
use omnisearch::search::{self, Search, SearchOutcome};
use proptest::prelude::*;

const VARS: [&str; 3] = ["i", "j", "k"];

fn raw_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u64..32).prop_map(Expr::bit),
        (0usize..3).prop_map(|v| Expr::bit_var(VARS[v])),
        Just(Expr::ConstTrue),
        Just(Expr::ConstFalse),
        (0u64..=32).prop_map(Expr::IsAtLeast),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::or(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::implies(l, r)),
            (0u64..=32, 0usize..3, inner)
                .prop_map(|(b, v, body)| Expr::all_below(b, VARS[v], body)),
        ]
    })
}

// Replaces variables that no enclosing quantifier binds with literals.
fn close(e: Expr, scope: &mut Vec<String>) -> Expr {
    match e {
        Expr::BitAt(Index::Var(v)) if !scope.contains(&v) => Expr::bit(v.len() as u64 + 7),
        Expr::Not(x) => Expr::not(close(*x, scope)),
        Expr::And(l, r) => Expr::and(close(*l, scope), close(*r, scope)),
        Expr::Or(l, r) => Expr::or(close(*l, scope), close(*r, scope)),
        Expr::Implies(l, r) => Expr::implies(close(*l, scope), close(*r, scope)),
        Expr::AllBelow { bound, var, body } => {
            scope.push(var.clone());
            let body = close(*body, scope);
            scope.pop();
            Expr::AllBelow {
                bound,
                var,
                body: Box::new(body),
            }
        }
        other => other,
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    raw_expr().prop_map(|e| close(e, &mut Vec::new()))
}

fn bit_stream() -> impl Strategy<Value = Vec<bool>> {
    prop::collection::vec(any::<bool>(), 0..300)
}

// Arbitrary bit source: the vector, then a fixed tail pattern.
fn stream_fn(bits: Vec<bool>, tail: bool) -> impl Fn(u64) -> bool + Send + Sync + 'static {
    move |n| bits.get(n as usize).copied().unwrap_or(tail)
}

fn member() -> impl Strategy<Value = CoNat> {
    prop_oneof![
        (0u64..300).prop_map(CoNat::finite),
        Just(CoNat::omega()),
        (bit_stream(), any::<bool>()).prop_map(|(b, t)| CoNat::from_fn(stream_fn(b, t))),
        (0u64..100).prop_map(|n| CoNat::finite(n).succ()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constructor_prefixes_are_nonincreasing(p in member(), m in 0u64..=256) {
        let bits = p.prefix(m).unwrap();
        prop_assert!(bits.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn from_fn_is_running_and(bits in bit_stream(), tail in any::<bool>()) {
        let f = stream_fn(bits, tail);
        let p = CoNat::from_fn(stream_fn(
            (0..256).map(&f).collect(), tail,
        ));
        let mut acc = true;
        for n in 0..256u64 {
            acc &= f(n);
            prop_assert_eq!(p.bit_at(n).unwrap(), acc);
        }
    }

    #[test]
    fn from_fn_fixes_members(p in member()) {
        let prefix = p.prefix(256).unwrap();
        let last = *prefix.last().unwrap();
        let q = CoNat::from_fn(stream_fn(prefix, last));
        prop_assert!(q.eq_upto(&p, 256).unwrap());
    }

    #[test]
    fn succ_is_prefix_injective(p in member(), q in member(), m in 0u64..200) {
        if p.succ().eq_upto(&q.succ(), m + 1).unwrap() {
            prop_assert!(p.eq_upto(&q, m).unwrap());
        }
        prop_assert!(p.succ().bit_at(0).unwrap());
    }

    #[test]
    fn epsilon_is_a_member(e in expr(), m in 0u64..=128) {
        let w = search::epsilon(&dsl::compile(&e));
        let bits = w.prefix(m).unwrap();
        prop_assert!(bits.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn forall_agrees_with_oracle(e in expr()) {
        let m = dsl::modulus(&e);
        prop_assert!(m <= 32);
        let q = dsl::compile(&e);
        prop_assert_eq!(
            search::forall(&q).unwrap(),
            oracle::brute_force_forall(&q, m).unwrap()
        );
    }

    #[test]
    fn selection_fixed_point(e in expr()) {
        let q = dsl::compile(&e);
        let w = search::epsilon(&q);
        prop_assert_eq!(search::forall(&q).unwrap(), q.eval(&w).unwrap());
    }

    #[test]
    fn counterexamples_are_valid_and_least(e in expr()) {
        let m = dsl::modulus(&e);
        let q = dsl::compile(&e);
        match search::find_counterexample(&q).unwrap() {
            SearchOutcome::HoldsEverywhere => {
                prop_assert_eq!(oracle::least_failure(&q, m).unwrap(), None);
            }
            SearchOutcome::Counterexample { witness, .. } => {
                prop_assert!(!q.eval(&witness).unwrap());
                let n = oracle::least_failure(&q, m).unwrap().expect("oracle also fails");
                prop_assert!(witness.eq_upto(&CoNat::finite(n), m).unwrap());
            }
        }
    }

    #[test]
    fn density_matches_forall(e in expr()) {
        let m = dsl::modulus(&e);
        let q = dsl::compile(&e);
        prop_assert_eq!(search::check_density(&q, m).unwrap(), search::forall(&q).unwrap());
    }

    #[test]
    fn evaluation_count_within_modulus_plus_two(e in expr()) {
        let m = dsl::modulus(&e);
        let s = Search::new(&dsl::compile(&e));
        s.holds().unwrap();
        prop_assert!(s.stats().predicate_evals <= m + 2);
    }

    #[test]
    fn print_parse_round_trip(e in expr()) {
        let text = dsl::print(&e);
        prop_assert_eq!(dsl::parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn modulus_is_sound(e in expr(), p in member()) {
        let tap = Arc::new(ReadTap::new());
        dsl::compile(&e).eval(&p.tapped(tap.clone())).unwrap();
        prop_assert!(tap.extent() <= dsl::modulus(&e));
    }

    #[test]
    fn equal_prefixes_give_equal_values(e in expr(), p in member(), q in member()) {
        let m = dsl::modulus(&e);
        if p.eq_upto(&q, m).unwrap() {
            let pred = dsl::compile(&e);
            prop_assert_eq!(pred.eval(&p).unwrap(), pred.eval(&q).unwrap());
        }
    }
}

#[test]
fn equal_prefix_pairs_are_exercised() {
    // The random members above rarely share long prefixes; check the
    // boundary pairs directly.
    let e = dsl::parse("all k < 6. bit(k) | !bit(k)").unwrap();
    let q = dsl::compile(&e);
    let m = dsl::modulus(&e);
    assert_eq!(
        q.eval(&CoNat::finite(m)).unwrap(),
        q.eval(&CoNat::omega()).unwrap()
    );
    let e = dsl::parse("bit(5) & !bit(6) | atleast(9)").unwrap();
    let q = dsl::compile(&e);
    let m = dsl::modulus(&e);
    assert_eq!(
        q.eval(&CoNat::finite(m)).unwrap(),
        q.eval(&CoNat::omega()).unwrap()
    );
}
