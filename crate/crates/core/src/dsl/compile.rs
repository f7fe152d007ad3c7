use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{modulus, Expr, Index};
use crate::budget::FuelExhausted;
use crate::conat::CoNat;
use crate::search::Predicate;

// Quantifier-free form: bounded quantifiers are unrolled and variables
// substituted, so evaluation is a plain tree walk.
enum Node {
    Const(bool),
    Bit(u64),
    Not(Arc<Node>),
    And(Arc<Node>, Arc<Node>),
    Or(Arc<Node>, Arc<Node>),
    Implies(Arc<Node>, Arc<Node>),
    All(Vec<Arc<Node>>),
}

impl Node {
    fn eval(&self, p: &CoNat) -> Result<bool, FuelExhausted> {
        Ok(match self {
            Node::Const(b) => *b,
            Node::Bit(k) => p.bit_at(*k)?,
            Node::Not(e) => !e.eval(p)?,
            Node::And(l, r) => l.eval(p)? && r.eval(p)?,
            Node::Or(l, r) => l.eval(p)? || r.eval(p)?,
            Node::Implies(l, r) => !l.eval(p)? || r.eval(p)?,
            Node::All(items) => {
                for item in items {
                    if !item.eval(p)? {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }
}

/// Turns `e` into a [`Predicate`] whose declared modulus is [`modulus`]`(e)`.
///
/// `true` maps to bit 1. Evaluation short-circuits left to right.
///
/// # Panics
///
/// If `e` has an unbound variable, which [`super::parse`] never produces.
pub fn compile(e: &Expr) -> Predicate {
    let root = lower(e, &mut Vec::new());
    Predicate::new(move |p| root.eval(p)).with_modulus(modulus(e))
}

fn lower<'a>(e: &'a Expr, env: &mut Vec<(&'a str, u64)>) -> Arc<Node> {
    Arc::new(match e {
        Expr::ConstTrue => Node::Const(true),
        Expr::ConstFalse => Node::Const(false),
        Expr::BitAt(Index::Lit(k)) => Node::Bit(*k),
        Expr::BitAt(Index::Var(v)) => {
            let (_, k) = env
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .unwrap_or_else(|| panic!("unbound variable `{v}`"));
            Node::Bit(*k)
        }
        Expr::IsAtLeast(0) => Node::Const(true),
        Expr::IsAtLeast(n) => Node::Bit(n - 1),
        Expr::Not(inner) => Node::Not(lower(inner, env)),
        Expr::And(l, r) => Node::And(lower(l, env), lower(r, env)),
        Expr::Or(l, r) => Node::Or(lower(l, env), lower(r, env)),
        Expr::Implies(l, r) => Node::Implies(lower(l, env), lower(r, env)),
        Expr::AllBelow { bound: 0, .. } => Node::Const(true),
        Expr::AllBelow { bound, var, body } => {
            if !body.mentions(var) {
                return lower(body, env);
            }
            let items = (0..*bound)
                .map(|k| {
                    env.push((var, k));
                    let node = lower(body, env);
                    env.pop();
                    node
                })
                .collect();
            Node::All(items)
        }
    })
}
