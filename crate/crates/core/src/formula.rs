//! Gödel propositional formulas: syntax tree, parser and printer.
//!
//! Accepted syntax (whitespace between tokens is ignored):
//!
//! ```text
//! formula  := implies
//! implies  := or [ "->" implies ]          right associative, alias "→"
//! or       := and { "|" and }              alias "∨"
//! and      := neg { "&" neg }              alias "∧"
//! neg      := ("~" | "!" | "¬") neg | atom
//! atom     := var | "0" | "1" | "bot" | "top" | "⊥" | "⊤" | "(" formula ")"
//! var      := ("X" | "x") digits           index >= 1
//! ```
//!
//! Printing always uses the ASCII spellings and the fewest parentheses that
//! still parse back to the same tree.

use std::fmt;
use std::num::NonZeroUsize;
use std::str::FromStr;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::patterns::Permutation;

/// Maximum nesting depth accepted by the parser.
pub const MAX_PARSE_DEPTH: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(NonZeroUsize),
    Bot,
    Top,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
}

impl Formula {
    /// The variable `X{index}`.
    ///
    /// Panics if `index` is zero; use [`Formula::try_var`] for untrusted input.
    pub fn var(index: usize) -> Formula {
        Formula::try_var(index).expect("variable indices start at 1")
    }

    pub fn try_var(index: usize) -> Option<Formula> {
        NonZeroUsize::new(index).map(Formula::Var)
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(left: Formula, right: Formula) -> Formula {
        Formula::Implies(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(child: Formula) -> Formula {
        Formula::Neg(Box::new(child))
    }

    /// Largest variable index occurring in the formula, or 0 for a closed formula.
    pub fn max_var(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::Var(i) => best = best.max(i.get()),
                Formula::Bot | Formula::Top => {}
                Formula::Neg(c) => stack.push(c),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        best
    }

    /// Height of the syntax tree; an atom has depth 1.
    pub fn depth(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![(self, 1usize)];
        while let Some((f, d)) = stack.pop() {
            best = best.max(d);
            match f {
                Formula::Var(_) | Formula::Bot | Formula::Top => {}
                Formula::Neg(c) => stack.push((c, d + 1)),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    stack.push((l, d + 1));
                    stack.push((r, d + 1));
                }
            }
        }
        best
    }

    /// Replaces every `X{i}` with `X{σ(i)}`.
    pub fn rename(&self, sigma: &Permutation) -> Result<Formula> {
        let top = self.max_var();
        if top > sigma.len() {
            return Err(Error::VariableOutOfRange { index: top, n: sigma.len() });
        }
        Ok(self.map_vars(&|i| sigma.apply(i)))
    }

    fn map_vars(&self, map: &dyn Fn(usize) -> usize) -> Formula {
        match self {
            Formula::Var(i) => Formula::var(map(i.get())),
            Formula::Bot => Formula::Bot,
            Formula::Top => Formula::Top,
            Formula::Neg(c) => Formula::not(c.map_vars(map)),
            Formula::And(l, r) => Formula::and(l.map_vars(map), r.map_vars(map)),
            Formula::Or(l, r) => Formula::or(l.map_vars(map), r.map_vars(map)),
            Formula::Implies(l, r) => Formula::implies(l.map_vars(map), r.map_vars(map)),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Neg(_) => 4,
            Formula::Var(_) | Formula::Bot | Formula::Top => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let parens = self.precedence() < min_prec;
        if parens {
            f.write_str("(")?;
        }
        match self {
            Formula::Var(i) => write!(f, "X{i}")?,
            Formula::Bot => f.write_str("0")?,
            Formula::Top => f.write_str("1")?,
            Formula::Neg(c) => {
                f.write_str("~")?;
                c.write_at(f, 4)?;
            }
            Formula::And(l, r) => {
                l.write_at(f, 3)?;
                f.write_str(" & ")?;
                r.write_at(f, 4)?;
            }
            Formula::Or(l, r) => {
                l.write_at(f, 2)?;
                f.write_str(" | ")?;
                r.write_at(f, 3)?;
            }
            Formula::Implies(l, r) => {
                l.write_at(f, 2)?;
                f.write_str(" -> ")?;
                r.write_at(f, 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Parses a formula. Positions in errors are character offsets.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let tokens = lex(text)?;
    let end = text.chars().count();
    let mut parser = Parser { tokens, cursor: 0, end, depth: 0 };
    let f = parser.implies()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError::new(tok.pos, ParseErrorKind::Unexpected(tok.kind.describe())));
    }
    if f.depth() > MAX_PARSE_DEPTH {
        return Err(ParseError::new(0, ParseErrorKind::TooDeep));
    }
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(position: usize, kind: ParseErrorKind) -> Self {
        ParseError { position, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("variable index must be at least 1")]
    ZeroVariable,
    #[error("malformed token {0:?}")]
    Malformed(String),
    #[error("formula nested deeper than {MAX_PARSE_DEPTH}")]
    TooDeep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Var(NonZeroUsize),
    Bot,
    Top,
    And,
    Or,
    Implies,
    Neg,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Var(i) => format!("variable X{i}"),
            TokenKind::Bot => "'0'".into(),
            TokenKind::Top => "'1'".into(),
            TokenKind::And => "'&'".into(),
            TokenKind::Or => "'|'".into(),
            TokenKind::Implies => "'->'".into(),
            TokenKind::Neg => "'~'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let kind = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '&' | '∧' => TokenKind::And,
            '|' | '∨' => TokenKind::Or,
            '→' => TokenKind::Implies,
            '~' | '!' | '¬' => TokenKind::Neg,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '⊥' => TokenKind::Bot,
            '⊤' => TokenKind::Top,
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    i += 1;
                    TokenKind::Implies
                } else {
                    return Err(ParseError::new(pos, ParseErrorKind::UnexpectedChar(c)));
                }
            }
            c if c.is_ascii_alphanumeric() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                i = j - 1;
                word_token(&word, pos)?
            }
            _ => return Err(ParseError::new(pos, ParseErrorKind::UnexpectedChar(c))),
        };
        tokens.push(Token { kind, pos });
        i += 1;
    }
    Ok(tokens)
}

fn word_token(word: &str, pos: usize) -> Result<TokenKind, ParseError> {
    match word {
        "0" | "bot" => return Ok(TokenKind::Bot),
        "1" | "top" => return Ok(TokenKind::Top),
        _ => {}
    }
    let malformed = || ParseError::new(pos, ParseErrorKind::Malformed(word.to_string()));
    let digits = word.strip_prefix(['X', 'x']).ok_or_else(malformed)?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let index: usize = digits.parse().map_err(|_| malformed())?;
    NonZeroUsize::new(index).map(TokenKind::Var).ok_or_else(|| ParseError::new(pos, ParseErrorKind::ZeroVariable))
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }

    fn implies(&mut self) -> Result<Formula, ParseError> {
        let mut operands = vec![self.or()?];
        while self.eat(&TokenKind::Implies) {
            operands.push(self.or()?);
        }
        let mut acc = operands.pop().expect("at least one operand");
        while let Some(left) = operands.pop() {
            acc = Formula::implies(left, acc);
        }
        Ok(acc)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.and()?;
        while self.eat(&TokenKind::Or) {
            acc = Formula::or(acc, self.and()?);
        }
        Ok(acc)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.neg()?;
        while self.eat(&TokenKind::And) {
            acc = Formula::and(acc, self.neg()?);
        }
        Ok(acc)
    }

    fn neg(&mut self) -> Result<Formula, ParseError> {
        let mut negations = 0;
        while self.eat(&TokenKind::Neg) {
            negations += 1;
        }
        let mut f = self.atom()?;
        for _ in 0..negations {
            f = Formula::not(f);
        }
        Ok(f)
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(ParseError::new(self.end, ParseErrorKind::UnexpectedEnd));
        };
        self.cursor += 1;
        match tok.kind {
            TokenKind::Var(i) => Ok(Formula::Var(i)),
            TokenKind::Bot => Ok(Formula::Bot),
            TokenKind::Top => Ok(Formula::Top),
            TokenKind::LParen => {
                self.depth += 1;
                if self.depth > MAX_PARSE_DEPTH {
                    return Err(ParseError::new(tok.pos, ParseErrorKind::TooDeep));
                }
                let inner = self.implies()?;
                self.depth -= 1;
                match self.peek() {
                    Some(t) if t.kind == TokenKind::RParen => {
                        self.cursor += 1;
                        Ok(inner)
                    }
                    Some(t) => Err(ParseError::new(t.pos, ParseErrorKind::Unexpected(t.kind.describe()))),
                    None => Err(ParseError::new(self.end, ParseErrorKind::UnexpectedEnd)),
                }
            }
            other => Err(ParseError::new(tok.pos, ParseErrorKind::Unexpected(other.describe()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        s.parse().unwrap()
    }

    fn x(i: usize) -> Formula {
        Formula::var(i)
    }

    #[test]
    fn parses_implication() {
        assert_eq!(p("X1 -> X2"), Formula::implies(x(1), x(2)));
    }

    #[test]
    fn parses_double_negation() {
        assert_eq!(p("~~X1"), Formula::not(Formula::not(x(1))));
    }

    #[test]
    fn and_binds_tighter_than_or() {
        assert_eq!(p("X1 | X2 & X3"), Formula::or(x(1), Formula::and(x(2), x(3))));
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(p("X1 -> X2 -> X3"), Formula::implies(x(1), Formula::implies(x(2), x(3))));
        assert_eq!(p("X1 & X2 & X3"), Formula::and(Formula::and(x(1), x(2)), x(3)));
    }

    #[test]
    fn unicode_and_word_aliases() {
        assert_eq!(p("¬x1 ∧ X2 ∨ ⊥ → ⊤"), p("~X1 & X2 | 0 -> 1"));
        assert_eq!(p("!bot | top"), p("~0 | 1"));
    }

    #[test]
    fn prints_minimal_parentheses() {
        assert_eq!(Formula::implies(x(1), x(2)).to_string(), "X1 -> X2");
        assert_eq!(Formula::not(Formula::Bot).to_string(), "~0");
        assert_eq!(Formula::and(Formula::or(x(1), x(2)), x(3)).to_string(), "(X1 | X2) & X3");
        assert_eq!(Formula::implies(Formula::implies(x(1), x(2)), x(3)).to_string(), "(X1 -> X2) -> X3");
        assert_eq!(Formula::and(x(1), Formula::and(x(2), x(3))).to_string(), "X1 & (X2 & X3)");
        assert_eq!(Formula::not(Formula::and(x(1), x(2))).to_string(), "~(X1 & X2)");
    }

    #[test]
    fn max_var_examples() {
        assert_eq!(p("X1 & X3").max_var(), 3);
        assert_eq!(p("0 -> 1").max_var(), 0);
        assert_eq!(p("~~X1").max_var(), 1);
    }

    #[test]
    fn rename_swaps_variables() {
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(p("X1 & ~X2").rename(&swap).unwrap(), p("X2 & ~X1"));
        let f = p("(X1 -> X2) | X3");
        let id = Permutation::identity(3);
        assert_eq!(f.rename(&id).unwrap(), f);
    }

    #[test]
    fn rename_rejects_small_permutation() {
        let id = Permutation::identity(1);
        assert!(matches!(p("X2").rename(&id), Err(Error::VariableOutOfRange { index: 2, n: 1 })));
    }

    #[test]
    fn rejects_zero_variable() {
        let err = parse("X1 & X0").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::ZeroVariable);
        assert_eq!(err.position, 5);
    }

    #[test]
    fn reports_error_positions() {
        assert_eq!(parse("X1 &").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse("X1 X2").unwrap_err().position, 3);
        assert_eq!(parse("(X1").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse("X1 - X2").unwrap_err().kind, ParseErrorKind::UnexpectedChar('-'));
        assert!(matches!(parse("Y1").unwrap_err().kind, ParseErrorKind::Malformed(_)));
        assert!(matches!(parse("X").unwrap_err().kind, ParseErrorKind::Malformed(_)));
        assert!(matches!(parse("2").unwrap_err().kind, ParseErrorKind::Malformed(_)));
        assert_eq!(parse("").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(parse("X1 )").unwrap_err().position, 3);
    }

    #[test]
    fn rejects_excessive_nesting() {
        let deep = format!("{}X1{}", "(".repeat(MAX_PARSE_DEPTH + 1), ")".repeat(MAX_PARSE_DEPTH + 1));
        assert_eq!(parse(&deep).unwrap_err().kind, ParseErrorKind::TooDeep);
        let long_neg = format!("{}X1", "~".repeat(MAX_PARSE_DEPTH + 5));
        assert_eq!(parse(&long_neg).unwrap_err().kind, ParseErrorKind::TooDeep);
        let ok = format!("{}X1", "~".repeat(100));
        assert_eq!(parse(&ok).unwrap().depth(), 101);
    }

    #[test]
    fn printing_is_canonical_after_one_pass() {
        for s in ["((X1))->(X2->X3)", "~ ( ~X1 ) | x2 & (X3|X4)", "(X1 -> X2) -> X3", "⊤ ∧ (⊥ ∨ X2)"] {
            let once = p(s).to_string();
            assert_eq!(p(&once).to_string(), once);
            assert_eq!(p(&once), p(s));
        }
    }
}
