//! Session files: one statement per line, `#` starts a comment.
//!
//! ```text
//! rig integers
//! let f = [[1, 0], [0, -1]]
//! show trace(f, [1], [1])
//! assert pinv(f) == f!
//! refute is_contraction([[2]])
//! ```
//!
//! Expressions: `f ; g` composes in diagram order (f first), `f + g` adds,
//! a postfix `!` takes the dagger, and everything else is a function call.
//! Matrix literals are rows of elements written in the rig's grammar.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    /// Raw element strings, row by row; `cols` is kept for empty rows.
    Literal { rows: Vec<Vec<String>>, cols: usize },
    /// A list of naturals, used for block partitions and sizes.
    Sizes(Vec<usize>),
    Nat(usize),
    Call(String, Vec<Expr>),
    Then(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Dagger(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    Let(String, Expr),
    Show(Expr),
    Assert(Expr, Option<Expr>),
    Refute(Expr),
}

impl StatementKind {
    pub fn keyword(&self) -> &'static str {
        match self {
            StatementKind::Let(..) => "let",
            StatementKind::Show(_) => "show",
            StatementKind::Assert(..) => "assert",
            StatementKind::Refute(_) => "refute",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub line: usize,
    pub text: String,
    pub kind: StatementKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub rig: Option<String>,
    pub statements: Vec<Statement>,
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => f.write_str(n),
            Expr::Literal { rows, .. } => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                write!(f, "[{}]", rows.join(", "))
            }
            Expr::Sizes(s) => {
                let s: Vec<String> = s.iter().map(|n| n.to_string()).collect();
                write!(f, "[{}]", s.join(", "))
            }
            Expr::Nat(n) => write!(f, "{n}"),
            Expr::Call(name, args) => {
                let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                write!(f, "{name}({})", args.join(", "))
            }
            Expr::Then(a, b) => write!(f, "({a} ; {b})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Dagger(a) => write!(f, "{a}!"),
        }
    }
}

pub fn parse_session(src: &str) -> Result<Session, SyntaxError> {
    let mut session = Session::default();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = strip_comment(raw);
        if text.trim().is_empty() {
            continue;
        }
        let mut p = LineParser { src: text.as_bytes(), pos: 0, line };
        p.skip_ws();
        let keyword = p.ident().ok_or_else(|| p.error("expected a statement keyword"))?;
        let kind = match keyword.as_str() {
            "rig" => {
                p.skip_ws();
                let start = p.pos;
                while p.pos < p.src.len() && !p.src[p.pos].is_ascii_whitespace() {
                    p.pos += 1;
                }
                if start == p.pos {
                    return Err(p.error("expected a rig name"));
                }
                let name = text[start..p.pos].to_string();
                p.end()?;
                if session.rig.is_some() {
                    return Err(p.error_at(0, "rig declared twice"));
                }
                session.rig = Some(name);
                continue;
            }
            "let" => {
                p.skip_ws();
                let name = p.ident().ok_or_else(|| p.error("expected a name"))?;
                p.expect(b'=')?;
                StatementKind::Let(name, p.expr()?)
            }
            "show" => StatementKind::Show(p.expr()?),
            "assert" => {
                let lhs = p.expr()?;
                p.skip_ws();
                let rhs = if p.src[p.pos..].starts_with(b"==") {
                    p.pos += 2;
                    Some(p.expr()?)
                } else {
                    None
                };
                StatementKind::Assert(lhs, rhs)
            }
            "refute" => StatementKind::Refute(p.expr()?),
            other => return Err(p.error_at(0, format!("unknown statement '{other}'"))),
        };
        p.end()?;
        session.statements.push(Statement {
            line,
            text: text.trim().to_string(),
            kind,
        });
    }
    Ok(session)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

struct LineParser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl LineParser<'_> {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            line: self.line,
            column: pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), SyntaxError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn end(&mut self) -> Result<(), SyntaxError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{}'", c as char))),
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let s = &self.src[start..self.pos];
        if s.is_empty() || s[0].is_ascii_digit() {
            self.pos = start;
            return None;
        }
        Some(String::from_utf8_lossy(s).into_owned())
    }

    fn nat(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.seq()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            lhs = Expr::Add(Box::new(lhs), Box::new(self.seq()?));
        }
        Ok(lhs)
    }

    fn seq(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.postfix()?;
        while self.peek() == Some(b';') {
            self.pos += 1;
            lhs = Expr::Then(Box::new(lhs), Box::new(self.postfix()?));
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.atom()?;
        while self.src.get(self.pos) == Some(&b'!') {
            self.pos += 1;
            e = Expr::Dagger(Box::new(e));
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => self.bracket(),
            Some(c) if c.is_ascii_digit() => Ok(Expr::Nat(self.nat().expect("digits"))),
            Some(_) => {
                let start = self.pos;
                let name = self.ident().ok_or_else(|| self.error("expected an expression"))?;
                if self.src.get(self.pos) == Some(&b'(') {
                    self.pos += 1;
                    let mut args = Vec::new();
                    if self.peek() != Some(b')') {
                        loop {
                            args.push(self.expr()?);
                            match self.peek() {
                                Some(b',') => self.pos += 1,
                                _ => break,
                            }
                        }
                    }
                    self.expect(b')')?;
                    Ok(Expr::Call(name, args))
                } else if name == "let" || name == "show" {
                    Err(self.error_at(start, format!("'{name}' is a keyword")))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            None => Err(self.error("unexpected end of line")),
        }
    }

    /// `[[..], ..]` is a matrix literal, `[n, ..]` a list of sizes and `[]`
    /// the empty matrix.
    fn bracket(&mut self) -> Result<Expr, SyntaxError> {
        self.pos += 1;
        match self.peek() {
            Some(b']') => {
                self.pos += 1;
                Ok(Expr::Literal { rows: Vec::new(), cols: 0 })
            }
            Some(b'[') => {
                let mut rows = Vec::new();
                loop {
                    self.skip_ws();
                    let row_start = self.pos;
                    self.expect(b'[')?;
                    let row = self.elements()?;
                    if let Some(first) = rows.first() {
                        let first: &Vec<String> = first;
                        if first.len() != row.len() {
                            return Err(self.error_at(
                                row_start,
                                format!("row has {} entries, expected {}", row.len(), first.len()),
                            ));
                        }
                    }
                    rows.push(row);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected ',' or ']' after a row")),
                    }
                }
                let cols = rows[0].len();
                Ok(Expr::Literal { rows, cols })
            }
            Some(c) if c.is_ascii_digit() => {
                let mut sizes = Vec::new();
                loop {
                    self.skip_ws();
                    sizes.push(self.nat().ok_or_else(|| self.error("expected a size"))?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error("expected ',' or ']' in a size list")),
                    }
                }
                Ok(Expr::Sizes(sizes))
            }
            _ => Err(self.error("expected '[' or a size")),
        }
    }

    /// Raw element texts up to the closing `]` of a row, split on commas
    /// outside parentheses.
    fn elements(&mut self) -> Result<Vec<String>, SyntaxError> {
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        let mut depth = 0usize;
        let mut start = self.pos;
        loop {
            let Some(&c) = self.src.get(self.pos) else {
                return Err(self.error("unterminated row"));
            };
            match c {
                b'(' => depth += 1,
                b')' if depth > 0 => depth -= 1,
                b',' | b']' if depth == 0 => {
                    let text = String::from_utf8_lossy(&self.src[start..self.pos]).trim().to_string();
                    if text.is_empty() {
                        return Err(self.error("empty entry"));
                    }
                    out.push(text);
                    self.pos += 1;
                    if c == b']' {
                        return Ok(out);
                    }
                    start = self.pos;
                    continue;
                }
                b'[' => return Err(self.error("'[' inside a matrix entry")),
                _ => {}
            }
            self.pos += 1;
        }
    }
}
