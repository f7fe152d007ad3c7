use alloc::string::String;
use core::fmt::Write;

use super::{Expr, Index};

const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const NOT: u8 = 4;
const ATOM: u8 = 5;

/// Canonical text for `e`, with the fewest parentheses that still parse
/// back to `e`.
pub fn print(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, IMPLIES, false, &mut out);
    out
}

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Implies(..) => IMPLIES,
        Expr::Or(..) => OR,
        Expr::And(..) => AND,
        Expr::Not(_) => NOT,
        _ => ATOM,
    }
}

// `closed` is set when more text follows at this level, in which case a
// trailing `all` body would swallow it and must be parenthesized.
fn write_expr(e: &Expr, ctx: u8, closed: bool, out: &mut String) {
    if precedence(e) < ctx || (closed && matches!(e, Expr::AllBelow { .. })) {
        out.push('(');
        write_expr(e, IMPLIES, false, out);
        out.push(')');
        return;
    }
    match e {
        Expr::ConstTrue => out.push_str("true"),
        Expr::ConstFalse => out.push_str("false"),
        Expr::BitAt(Index::Lit(k)) => {
            let _ = write!(out, "bit({k})");
        }
        Expr::BitAt(Index::Var(v)) => {
            let _ = write!(out, "bit({v})");
        }
        Expr::IsAtLeast(n) => {
            let _ = write!(out, "atleast({n})");
        }
        Expr::Not(inner) => {
            out.push('!');
            write_expr(inner, NOT, closed, out);
        }
        Expr::And(l, r) => binary(l, " & ", r, AND, AND + 1, closed, out),
        Expr::Or(l, r) => binary(l, " | ", r, OR, OR + 1, closed, out),
        Expr::Implies(l, r) => binary(l, " => ", r, IMPLIES + 1, IMPLIES, closed, out),
        Expr::AllBelow { bound, var, body } => {
            let _ = write!(out, "all {var} < {bound}. ");
            write_expr(body, IMPLIES, false, out);
        }
    }
}

fn binary(l: &Expr, op: &str, r: &Expr, lctx: u8, rctx: u8, closed: bool, out: &mut String) {
    write_expr(l, lctx, true, out);
    out.push_str(op);
    write_expr(r, rctx, closed, out);
}
