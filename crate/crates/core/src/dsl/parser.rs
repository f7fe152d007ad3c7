use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Expr, Index};

/// Largest bit index accepted by default.
pub const DEFAULT_MAX_INDEX: u64 = 1 << 16;

/// Deepest nesting accepted by default.
pub const DEFAULT_MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub max_index: u64,
    pub max_depth: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_index: DEFAULT_MAX_INDEX,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

/// Offsets are 0-based byte positions in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    /// A bit index (`bit(k)`, `atleast(k + 1)` or the last index of
    /// `all _ < k + 1`) above the configured maximum.
    IndexTooLarge {
        offset: usize,
        index: u64,
        max: u64,
    },
    UnboundVariable {
        offset: usize,
        name: String,
    },
    TooDeep {
        offset: usize,
    },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::IndexTooLarge { offset, .. }
            | ParseError::UnboundVariable { offset, .. }
            | ParseError::TooDeep { offset } => *offset,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, expected } => {
                write!(f, "syntax error at byte {offset}: expected ")?;
                for (i, tok) in expected.iter().enumerate() {
                    if i > 0 {
                        f.write_str(if i + 1 == expected.len() {
                            " or "
                        } else {
                            ", "
                        })?;
                    }
                    write!(f, "`{tok}`")?;
                }
                Ok(())
            }
            ParseError::IndexTooLarge { offset, index, max } => {
                write!(
                    f,
                    "bit index {index} at byte {offset} exceeds the maximum {max}"
                )
            }
            ParseError::UnboundVariable { offset, name } => {
                write!(f, "unbound variable `{name}` at byte {offset}")
            }
            ParseError::TooDeep { offset } => {
                write!(f, "expression nested too deeply at byte {offset}")
            }
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Bang,
    Amp,
    Pipe,
    Arrow,
    Lt,
    Dot,
    // saturates at u64::MAX
    Nat(u64),
    Ident(String),
    True,
    False,
    Bit,
    AtLeast,
    All,
    Invalid,
    Eof,
}

const OPERAND_START: &[&str] = &["!", "(", "all", "atleast", "bit", "false", "true"];
const AFTER_OPERAND: &[&str] = &["&", "=>", "|"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its starting offset.
    fn next(&mut self) -> (Tok, usize) {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return (Tok::Eof, start);
        };
        let (tok, len) = match c {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '!' => (Tok::Bang, 1),
            '&' => (Tok::Amp, 1),
            '|' => (Tok::Pipe, 1),
            '<' => (Tok::Lt, 1),
            '.' => (Tok::Dot, 1),
            '=' if rest.starts_with("=>") => (Tok::Arrow, 2),
            '0'..='9' => {
                let len = rest.bytes().take_while(u8::is_ascii_digit).count();
                let value = rest[..len].bytes().fold(0u64, |acc, d| {
                    acc.saturating_mul(10).saturating_add(u64::from(d - b'0'))
                });
                (Tok::Nat(value), len)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = rest
                    .bytes()
                    .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                    .count();
                let tok = match &rest[..len] {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "bit" => Tok::Bit,
                    "atleast" => Tok::AtLeast,
                    "all" => Tok::All,
                    word => Tok::Ident(word.into()),
                };
                (tok, len)
            }
            _ => (Tok::Invalid, c.len_utf8()),
        };
        self.pos += len;
        (tok, start)
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    peeked: Option<(Tok, usize)>,
    opts: ParseOptions,
    scope: Vec<String>,
    depth: usize,
}

/// Parses with [`ParseOptions::default`].
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    parse_with(text, ParseOptions::default())
}

pub fn parse_with(text: &str, opts: ParseOptions) -> Result<Expr, ParseError> {
    let mut p = Parser {
        lexer: Lexer { src: text, pos: 0 },
        peeked: None,
        opts,
        scope: Vec::new(),
        depth: 0,
    };
    let e = p.expr()?;
    match p.peek() {
        (Tok::Eof, _) => Ok(e),
        (_, offset) => Err(syntax(offset, &[AFTER_OPERAND, &["end of input"]])),
    }
}

fn syntax(offset: usize, groups: &[&[&'static str]]) -> ParseError {
    let mut expected: Vec<&'static str> = groups.iter().flat_map(|g| g.iter().copied()).collect();
    expected.sort_unstable();
    expected.dedup();
    ParseError::Syntax { offset, expected }
}

impl Parser<'_> {
    fn peek(&mut self) -> (Tok, usize) {
        if self.peeked.is_none() {
            self.peeked = Some(self.lexer.next());
        }
        self.peeked.clone().unwrap()
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.peek();
        self.peeked = None;
        t
    }

    fn eat(&mut self, want: Tok) -> bool {
        if self.peek().0 == want {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok, name: &'static str) -> Result<(), ParseError> {
        match self.bump() {
            (t, _) if t == want => Ok(()),
            (_, offset) => Err(syntax(offset, &[&[name]])),
        }
    }

    fn nat(&mut self) -> Result<(u64, usize), ParseError> {
        match self.bump() {
            (Tok::Nat(n), offset) => Ok((n, offset)),
            (_, offset) => Err(syntax(offset, &[&["natural number"]])),
        }
    }

    fn check_index(&self, index: u64, offset: usize) -> Result<(), ParseError> {
        if index > self.opts.max_index {
            return Err(ParseError::IndexTooLarge {
                offset,
                index,
                max: self.opts.max_index,
            });
        }
        Ok(())
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > self.opts.max_depth {
            let offset = self.peek().1;
            return Err(ParseError::TooDeep { offset });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let lhs = self.or()?;
        let e = if self.eat(Tok::Arrow) {
            Expr::implies(lhs, self.expr()?)
        } else {
            lhs
        };
        self.depth -= 1;
        Ok(e)
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.and()?;
        while self.eat(Tok::Pipe) {
            e = Expr::or(e, self.and()?);
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        while self.eat(Tok::Amp) {
            e = Expr::and(e, self.unary()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let e = if self.eat(Tok::Bang) {
            Expr::not(self.unary()?)
        } else {
            self.atom()?
        };
        self.depth -= 1;
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::True => Ok(Expr::ConstTrue),
            Tok::False => Ok(Expr::ConstFalse),
            Tok::Bit => {
                self.expect(Tok::LParen, "(")?;
                let index = match self.bump() {
                    (Tok::Nat(k), at) => {
                        self.check_index(k, at)?;
                        Index::Lit(k)
                    }
                    (Tok::Ident(name), at) => {
                        if !self.scope.contains(&name) {
                            return Err(ParseError::UnboundVariable { offset: at, name });
                        }
                        Index::Var(name)
                    }
                    (_, at) => return Err(syntax(at, &[&["natural number", "variable"]])),
                };
                self.expect(Tok::RParen, ")")?;
                Ok(Expr::BitAt(index))
            }
            Tok::AtLeast => {
                self.expect(Tok::LParen, "(")?;
                let (n, at) = self.nat()?;
                if n > 0 {
                    self.check_index(n - 1, at)?;
                }
                self.expect(Tok::RParen, ")")?;
                Ok(Expr::IsAtLeast(n))
            }
            Tok::All => {
                let var = match self.bump() {
                    (Tok::Ident(name), _) => name,
                    (_, at) => return Err(syntax(at, &[&["variable"]])),
                };
                self.expect(Tok::Lt, "<")?;
                let (bound, at) = self.nat()?;
                if bound > 0 {
                    self.check_index(bound - 1, at)?;
                }
                self.expect(Tok::Dot, ".")?;
                self.scope.push(var);
                let body = self.expr();
                let var = self.scope.pop().unwrap();
                Ok(Expr::AllBelow {
                    bound,
                    var,
                    body: Box::new(body?),
                })
            }
            Tok::LParen => {
                let e = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(e),
                    (_, at) => Err(syntax(at, &[AFTER_OPERAND, &[")"]])),
                }
            }
            _ => Err(syntax(offset, &[OPERAND_START])),
        }
    }
}
