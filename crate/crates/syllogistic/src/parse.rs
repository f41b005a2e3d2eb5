//! Recursive-descent parser for the canonical ASCII grammar.
//!
//! ```text
//! expr  := unary [("&" | "|") unary]
//! unary := primary "'"*
//! primary := atom | "0" | "1" | "(" expr ")"
//! stmt  := expr rel expr | "inh(" expr ")" | "emp(" expr ")"
//! ```
//!
//! A second binary operator at the same level is rejected: nesting of `&`
//! and `|` always needs explicit parentheses.

use crate::term::{Mark, RelKind, Statement, TermExpr};
use thiserror::Error;

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Relation tokens, longest first so that prefixes never shadow.
const REL_TOKENS: [(&str, RelKind); 12] = [
    ("!<=", RelKind::Nsubseteq),
    ("!>=", RelKind::Nsupseteq),
    ("!=", RelKind::Neq),
    ("!#", RelKind::Disjoint),
    ("!@", RelKind::Nonexhaustive),
    ("<=", RelKind::Subseteq),
    (">=", RelKind::Supseteq),
    ("<", RelKind::Propersub),
    (">", RelKind::Propersup),
    ("=", RelKind::Eq),
    ("#", RelKind::Conjoint),
    ("@", RelKind::Exhaustive),
];

pub(crate) struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col_base: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str, line: usize, col_base: usize) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
            line,
            col_base,
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.col_base + self.pos + 1,
            message: message.into(),
        }
    }

    /// 1-based column of the next non-space character.
    pub(crate) fn column(&mut self) -> usize {
        self.skip_ws();
        self.col_base + self.pos + 1
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{tok}`")))
        }
    }

    /// Lowercase identifier `[a-z][a-z0-9_]*`.
    pub(crate) fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(b'a'..=b'z')) {
            return None;
        }
        while matches!(self.peek(), Some(b'a'..=b'z' | b'0'..=b'9' | b'_')) {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    /// Word of non-space, non-punctuation characters used by script keywords
    /// and names such as `LC+D` or `dominating-meet`.
    pub(crate) fn word(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'+' || c == b'-' || c == b'_')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    pub(crate) fn rest(&self) -> &'a str {
        std::str::from_utf8(&self.src[self.pos..]).unwrap_or("")
    }

    pub(crate) fn expr(&mut self) -> Result<TermExpr, ParseError> {
        let lhs = self.unary()?;
        self.skip_ws();
        let op = match self.peek() {
            Some(b'&') => TermExpr::meet as fn(TermExpr, TermExpr) -> TermExpr,
            Some(b'|') => TermExpr::join,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.unary()?;
        self.skip_ws();
        if matches!(self.peek(), Some(b'&' | b'|')) {
            return Err(self.error("nested `&`/`|` needs explicit parentheses"));
        }
        Ok(op(lhs, rhs))
    }

    fn unary(&mut self) -> Result<TermExpr, ParseError> {
        let mut e = self.primary()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'\'') {
                self.pos += 1;
                e = TermExpr::complement(e);
            } else {
                return Ok(e);
            }
        }
    }

    fn primary(&mut self) -> Result<TermExpr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(TermExpr::Empty)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(TermExpr::Universe)
            }
            Some(b'a'..=b'z') => Ok(TermExpr::Atom(self.ident().expect("peeked letter"))),
            Some(c) => Err(self.error(format!("unexpected `{}` in expression", c as char))),
            None => Err(self.error("unexpected end of input in expression")),
        }
    }

    fn rel(&mut self) -> Result<RelKind, ParseError> {
        self.skip_ws();
        for (tok, kind) in REL_TOKENS {
            if self.src[self.pos..].starts_with(tok.as_bytes()) {
                self.pos += tok.len();
                return Ok(kind);
            }
        }
        Err(self.error("expected a relation token"))
    }

    pub(crate) fn statement(&mut self) -> Result<Statement, ParseError> {
        self.skip_ws();
        for (kw, mark) in [("inh(", Mark::Inhabited), ("emp(", Mark::EmptyClaim)] {
            if self.src[self.pos..].starts_with(kw.as_bytes()) {
                self.pos += kw.len();
                let subject = self.expr()?;
                self.expect(")")?;
                return Ok(Statement::Monadic { mark, subject });
            }
        }
        let lhs = self.expr()?;
        let rel = self.rel()?;
        let rhs = self.expr()?;
        Ok(Statement::dyadic(rel, lhs, rhs))
    }
}

/// Parses a complete expression.
pub fn parse_expr(src: &str) -> Result<TermExpr, ParseError> {
    let mut c = Cursor::new(src, 1, 0);
    let e = c.expr()?;
    if !c.at_end() {
        return Err(c.error("trailing input after expression"));
    }
    Ok(e)
}

/// Parses a complete statement. Monadic forms are kept as written; call
/// [`Statement::normalized`] to lower them to `e!=0` / `e=0`.
pub fn parse_statement(src: &str) -> Result<Statement, ParseError> {
    let mut c = Cursor::new(src, 1, 0);
    let s = c.statement()?;
    if !c.at_end() {
        return Err(c.error("trailing input after statement"));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_strings_round_trip() {
        for s in [
            "s&(m&p)",
            "(s&m)&p",
            "b''",
            "(b|c)'",
            "b'|c'",
            "0",
            "1",
            "(b&c')|(b'&c)",
        ] {
            assert_eq!(parse_expr(s).unwrap().to_string(), s);
        }
        for s in [
            "s&m=s",
            "s&(m'&p')!=0",
            "b#c",
            "b!@c'",
            "b&c>0",
            "b|c<1",
            "inh(s)",
            "emp(b&c)",
        ] {
            assert_eq!(parse_statement(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn whitespace_and_redundant_parens_are_accepted() {
        let e = parse_expr(" ( s & ( m ) ) ").unwrap();
        assert_eq!(e.to_string(), "s&m");
        assert_eq!(parse_statement("s & m = s").unwrap().to_string(), "s&m=s");
    }

    #[test]
    fn unparenthesized_chain_is_rejected() {
        let err = parse_expr("s&m&p").unwrap_err();
        assert_eq!(err.column, 4);
        assert!(parse_expr("s&m|p").is_err());
    }

    #[test]
    fn relation_prefixes_resolve_longest_first() {
        let cases = [
            ("b!<=c", RelKind::Nsubseteq),
            ("b!=c", RelKind::Neq),
            ("b<c", RelKind::Propersub),
            ("b<=c", RelKind::Subseteq),
            ("b!#c", RelKind::Disjoint),
            ("b!@c", RelKind::Nonexhaustive),
        ];
        for (src, kind) in cases {
            match parse_statement(src).unwrap() {
                Statement::Dyadic { rel, .. } => assert_eq!(rel, kind, "{src}"),
                _ => panic!("expected dyadic"),
            }
        }
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_statement("s&m ?? s").unwrap_err();
        assert_eq!((err.line, err.column), (1, 5));
        assert!(parse_statement("s&m=").is_err());
        assert!(parse_statement("s=s extra").is_err());
        assert!(parse_expr("S").is_err());
    }
}
