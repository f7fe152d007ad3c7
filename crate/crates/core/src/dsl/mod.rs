//! A small boolean language for continuous predicates on `ℕ∞`.
//!
//! ```text
//! expr  := imp
//! imp   := or ("=>" imp)?
//! or    := and ("|" and)*
//! and   := unary ("&" unary)*
//! unary := "!" unary | atom
//! atom  := "true" | "false" | "bit(" index ")" | "atleast(" nat ")"
//!        | "all" name "<" nat "." expr | "(" expr ")"
//! index := nat | name
//! ```
//!
//! `bit(k)` is bit `k` of the argument, `atleast(n)` holds when the argument
//! is at least `n̄` (bit `n - 1` is set), and `all k < n. e` is the
//! conjunction of `e` for `k = 0..n`. The body of `all` extends as far to the
//! right as possible. Every index is a literal or a variable bound by an
//! enclosing `all` with a literal bound, so every expression reads a
//! statically known, finite set of bits.

mod compile;
mod parser;
mod printer;

use alloc::boxed::Box;
use alloc::string::String;

pub use compile::compile;
pub use parser::{
    parse, parse_with, ParseError, ParseOptions, DEFAULT_MAX_DEPTH, DEFAULT_MAX_INDEX,
};
pub use printer::print;

/// A bit index: a literal or a variable bound by [`Expr::AllBelow`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Index {
    Lit(u64),
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    BitAt(Index),
    ConstTrue,
    ConstFalse,
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    AllBelow {
        bound: u64,
        var: String,
        body: Box<Expr>,
    },
    IsAtLeast(u64),
}

impl Expr {
    pub fn bit(k: u64) -> Expr {
        Expr::BitAt(Index::Lit(k))
    }

    pub fn bit_var(name: &str) -> Expr {
        Expr::BitAt(Index::Var(name.into()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(l: Expr, r: Expr) -> Expr {
        Expr::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Expr, r: Expr) -> Expr {
        Expr::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Expr, r: Expr) -> Expr {
        Expr::Implies(Box::new(l), Box::new(r))
    }

    pub fn all_below(bound: u64, var: &str, body: Expr) -> Expr {
        Expr::AllBelow {
            bound,
            var: var.into(),
            body: Box::new(body),
        }
    }

    /// Whether `name` occurs free.
    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Expr::BitAt(Index::Var(v)) => v == name,
            Expr::BitAt(Index::Lit(_))
            | Expr::ConstTrue
            | Expr::ConstFalse
            | Expr::IsAtLeast(_) => false,
            Expr::Not(e) => e.mentions(name),
            Expr::And(l, r) | Expr::Or(l, r) | Expr::Implies(l, r) => {
                l.mentions(name) || r.mentions(name)
            }
            Expr::AllBelow { var, body, .. } => var != name && body.mentions(name),
        }
    }
}

impl core::fmt::Display for Expr {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&print(self))
    }
}

/// One more than the largest bit index the compiled predicate can read, or
/// 0 if it reads none.
///
/// Unbound variables contribute nothing; the parser rejects them.
pub fn modulus(e: &Expr) -> u64 {
    fn go<'a>(e: &'a Expr, scope: &mut alloc::vec::Vec<(&'a str, u64)>) -> u64 {
        match e {
            Expr::BitAt(Index::Lit(k)) => k.saturating_add(1),
            Expr::BitAt(Index::Var(v)) => scope
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .map_or(0, |&(_, bound)| bound),
            Expr::ConstTrue | Expr::ConstFalse => 0,
            Expr::IsAtLeast(n) => *n,
            Expr::Not(e) => go(e, scope),
            Expr::And(l, r) | Expr::Or(l, r) | Expr::Implies(l, r) => {
                go(l, scope).max(go(r, scope))
            }
            Expr::AllBelow { bound: 0, .. } => 0,
            Expr::AllBelow { bound, var, body } => {
                scope.push((var, *bound));
                let m = go(body, scope);
                scope.pop();
                m
            }
        }
    }
    go(e, &mut alloc::vec::Vec::new())
}
