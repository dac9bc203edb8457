//! Recursive-descent parser.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-' exponent | power
//! atom     := number | ident | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-r^2`
//! is `-(r^2)` and `2^3^2` is `2^(3^2)`.

use thiserror::Error;

use super::ast::{BinOp, Expr, ExprKind, Func, Span, Var};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownIdentifier { offset, .. } => {
                *offset
            }
        }
    }
}

/// Which coordinate names the parser accepts as variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variables {
    /// `t` and `r` only; used for every parameter function.
    TimeRadius,
    /// `t`, `r`, `theta` and `phi`; used for user-supplied vector fields.
    Spacetime,
}

impl Variables {
    fn lookup(self, name: &str) -> Option<Var> {
        let v = match name {
            "t" => Var::T,
            "r" => Var::R,
            "theta" => Var::Theta,
            "phi" => Var::Phi,
            _ => return None,
        };
        match (self, v) {
            (Variables::TimeRadius, Var::Theta | Var::Phi) => None,
            _ => Some(v),
        }
    }
}

/// Parse an expression in `t` and `r`.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    parse_with(source, Variables::TimeRadius)
}

pub fn parse_with(source: &str, vars: Variables) -> Result<Expr, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        vars,
        src_len: source.len(),
    };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(tok) => Err(ParseError::Syntax {
            offset: tok.span.start,
            expected: vec!["operator", "end of input"],
            found: tok.describe(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
}

impl Token {
    fn describe(&self) -> String {
        match &self.tok {
            Tok::Num(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            i += 1;
            out.push(Token {
                tok,
                span: Span { start, end: i },
            });
            continue;
        }
        if c.is_ascii_digit() || c == b'.' {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'.' {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text = &src[start..i];
            let value: f64 = text.parse().map_err(|_| ParseError::Syntax {
                offset: start,
                expected: vec!["number"],
                found: format!("`{text}`"),
            })?;
            if !value.is_finite() {
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: vec!["finite number"],
                    found: format!("`{text}`"),
                });
            }
            out.push(Token {
                tok: Tok::Num(value),
                span: Span { start, end: i },
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_string()),
                span: Span { start, end: i },
            });
            continue;
        }
        let ch = src[start..].chars().next().unwrap_or('?');
        return Err(ParseError::Syntax {
            offset: start,
            expected: vec!["number", "identifier", "operator", "`(`", "`)`"],
            found: format!("`{ch}`"),
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    vars: Variables,
    src_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_is(&self, t: &Tok) -> bool {
        self.peek().is_some_and(|tok| &tok.tok == t)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        match self.peek() {
            Some(tok) => ParseError::Syntax {
                offset: tok.span.start,
                expected,
                found: tok.describe(),
            },
            None => ParseError::Syntax {
                offset: self.src_len,
                expected,
                found: "end of input".into(),
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().map(|t| &t.tok) {
                Some(Tok::Plus) => BinOp::Add,
                Some(Tok::Minus) => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = join(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().map(|t| &t.tok) {
                Some(Tok::Star) => BinOp::Mul,
                Some(Tok::Slash) => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = join(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek_is(&Tok::Minus) {
            let start = self.bump().map(|t| t.span.start).unwrap_or(0);
            let inner = self.unary()?;
            let end = inner.span.end;
            return Ok(Expr::new(
                ExprKind::Neg(Box::new(inner)),
                Span { start, end },
            ));
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<Expr, ParseError> {
        if self.peek_is(&Tok::Minus) {
            let start = self.bump().map(|t| t.span.start).unwrap_or(0);
            let inner = self.exponent()?;
            let end = inner.span.end;
            return Ok(Expr::new(
                ExprKind::Neg(Box::new(inner)),
                Span { start, end },
            ));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek_is(&Tok::Caret) {
            self.bump();
            let exp = self.exponent()?;
            return Ok(join(BinOp::Pow, base, exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let expected = vec!["number", "identifier", "`(`"];
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected(expected));
        };
        match tok.tok {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::new(ExprKind::Num(v), tok.span))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(func) = Func::from_name(&name) {
                    if !self.peek_is(&Tok::LParen) {
                        return Err(self.unexpected(vec!["`(`"]));
                    }
                    self.bump();
                    let arg = self.expr()?;
                    let end = self.expect_rparen()?;
                    return Ok(Expr::new(
                        ExprKind::Call(func, Box::new(arg)),
                        Span {
                            start: tok.span.start,
                            end,
                        },
                    ));
                }
                if name == "pi" {
                    return Ok(Expr::new(ExprKind::Pi, tok.span));
                }
                match self.vars.lookup(&name) {
                    Some(v) => Ok(Expr::new(ExprKind::Var(v), tok.span)),
                    None => Err(ParseError::UnknownIdentifier {
                        offset: tok.span.start,
                        name,
                    }),
                }
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn expect_rparen(&mut self) -> Result<usize, ParseError> {
        if self.peek_is(&Tok::RParen) {
            Ok(self.bump().map(|t| t.span.end).unwrap_or(self.src_len))
        } else {
            Err(self.unexpected(vec!["`)`", "operator"]))
        }
    }
}

fn join(op: BinOp, a: Expr, b: Expr) -> Expr {
    let span = Span {
        start: a.span.start,
        end: b.span.end,
    };
    Expr::new(ExprKind::Binary(op, Box::new(a), Box::new(b)), span)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(v: f64) -> Expr {
        Expr::num(v)
    }

    #[test]
    fn literal_zero() {
        assert_eq!(parse("0").unwrap(), num(0.0));
    }

    #[test]
    fn product_with_call() {
        let e = parse("2*log(r)").unwrap();
        let want = Expr::binary(BinOp::Mul, num(2.0), Expr::call(Func::Log, Expr::var(Var::R)));
        assert_eq!(e, want);
    }

    #[test]
    fn power_binds_tighter_than_unary_minus() {
        let e = parse("-r^2").unwrap();
        let want = Expr::neg(Expr::binary(BinOp::Pow, Expr::var(Var::R), num(2.0)));
        assert_eq!(e, want);
    }

    #[test]
    fn power_is_right_associative() {
        let e = parse("2^3^2").unwrap();
        let want = Expr::binary(
            BinOp::Pow,
            num(2.0),
            Expr::binary(BinOp::Pow, num(3.0), num(2.0)),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn negative_exponent() {
        let e = parse("r^-2").unwrap();
        let want = Expr::binary(BinOp::Pow, Expr::var(Var::R), Expr::neg(num(2.0)));
        assert_eq!(e, want);
        assert_eq!(e.to_string(), "r^-2");
    }

    #[test]
    fn subtraction_is_left_associative() {
        let e = parse("t - r - 1").unwrap();
        assert_eq!(e.to_string(), "t - r - 1");
        let e2 = parse("t - (r - 1)").unwrap();
        assert_eq!(e2.to_string(), "t - (r - 1)");
        assert_ne!(e, e2);
    }

    #[test]
    fn scientific_literals() {
        assert_eq!(parse("1.5e-3").unwrap(), num(1.5e-3));
        assert_eq!(parse(".5").unwrap(), num(0.5));
    }

    #[test]
    fn unclosed_call_reports_offset() {
        let err = parse("sin(").unwrap_err();
        match err {
            ParseError::Syntax { offset, .. } => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier() {
        let err = parse("t + x").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownIdentifier {
                offset: 4,
                name: "x".into()
            }
        );
    }

    #[test]
    fn angular_variables_only_in_spacetime_mode() {
        assert!(matches!(
            parse("theta").unwrap_err(),
            ParseError::UnknownIdentifier { .. }
        ));
        assert_eq!(
            parse_with("sin(theta)*phi", Variables::Spacetime).unwrap().to_string(),
            "sin(theta) * phi"
        );
    }

    #[test]
    fn trailing_garbage() {
        let err = parse("t r").unwrap_err();
        assert_eq!(err.offset(), 2);
        assert!(parse("").is_err());
        assert!(parse("2 $ 3").is_err());
        assert!(parse("sin t").is_err());
        assert!(parse("1e999").is_err());
    }
}
