//! Construction expression grammar.
//!
//! ```text
//! expr := Zn | RZn | LZn | Tn-table@file
//!       | DP(expr,expr) | SDP(expr,expr,act@file) | WR(expr,expr)
//!       | B(expr,k) | ZDU(expr,expr) | SSL(diagram@file)
//!       | ACT(expr,act@file) | REES(expr,[i,...])
//! ```
//!
//! Whitespace-insensitive, case-sensitive. `REES` takes the generators of
//! the two-sided ideal to collapse; file paths may not contain `,` or `)`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Cyclic(usize),
    RightZero(usize),
    LeftZero(usize),
    Table { order: usize, path: String },
    DirectProduct(Box<Expr>, Box<Expr>),
    Semidirect(Box<Expr>, Box<Expr>, String),
    Wreath(Box<Expr>, Box<Expr>),
    Brandt(Box<Expr>, usize),
    ZeroDirectUnion(Box<Expr>, Box<Expr>),
    StrongSemilattice(String),
    ActExtension(Box<Expr>, String),
    Rees(Box<Expr>, Vec<usize>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Cyclic(n) => write!(f, "Z{n}"),
            Expr::RightZero(n) => write!(f, "RZ{n}"),
            Expr::LeftZero(n) => write!(f, "LZ{n}"),
            Expr::Table { order, path } => write!(f, "T{order}-table@{path}"),
            Expr::DirectProduct(a, b) => write!(f, "DP({a},{b})"),
            Expr::Semidirect(a, b, act) => write!(f, "SDP({a},{b},act@{act})"),
            Expr::Wreath(a, b) => write!(f, "WR({a},{b})"),
            Expr::Brandt(a, k) => write!(f, "B({a},{k})"),
            Expr::ZeroDirectUnion(a, b) => write!(f, "ZDU({a},{b})"),
            Expr::StrongSemilattice(path) => write!(f, "SSL(diagram@{path})"),
            Expr::ActExtension(a, act) => write!(f, "ACT({a},act@{act})"),
            Expr::Rees(a, ideal) => {
                let list: Vec<String> = ideal.iter().map(|i| i.to_string()).collect();
                write!(f, "REES({a},[{}])", list.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { line: usize, col: usize, message: String },
    UnknownConstructor { col: usize, token: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, col, message } => {
                write!(f, "syntax error at {line}:{col}: {message}")
            }
            ParseError::UnknownConstructor { col, token } => {
                write!(f, "unknown constructor {token:?} at column {col}")
            }
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, text }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: 1, col: self.col(), message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected {c:?}")))
        }
    }

    fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.syntax("integer out of range"))
    }

    /// A file path: everything up to `,` or `)`, trimmed.
    fn path(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && !matches!(self.chars[self.pos], ',' | ')') {
            self.pos += 1;
        }
        let raw: String = self.chars[start..self.pos].iter().collect();
        let trimmed = raw.trim().to_string();
        if trimmed.is_empty() {
            return Err(self.syntax("expected a file path"));
        }
        Ok(trimmed)
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        self.skip_ws();
        for expected in word.chars() {
            if self.peek() != Some(expected) {
                return Err(self.syntax(format!("expected {word:?}")));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn head(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let head_col = self.col();
        let head = self.head()?;
        match head.as_str() {
            "Z" => Ok(Expr::Cyclic(self.integer()?)),
            "RZ" => Ok(Expr::RightZero(self.integer()?)),
            "LZ" => Ok(Expr::LeftZero(self.integer()?)),
            "T" => {
                let order = self.integer()?;
                self.keyword("-table@")?;
                Ok(Expr::Table { order, path: self.path()? })
            }
            "DP" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::DirectProduct(Box::new(a), Box::new(b)))
            }
            "SDP" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(',')?;
                self.keyword("act@")?;
                let act = self.path()?;
                self.expect(')')?;
                Ok(Expr::Semidirect(Box::new(a), Box::new(b), act))
            }
            "WR" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Wreath(Box::new(a), Box::new(b)))
            }
            "B" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let k = self.integer()?;
                self.expect(')')?;
                Ok(Expr::Brandt(Box::new(a), k))
            }
            "ZDU" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::ZeroDirectUnion(Box::new(a), Box::new(b)))
            }
            "SSL" => {
                self.expect('(')?;
                self.keyword("diagram@")?;
                let path = self.path()?;
                self.expect(')')?;
                Ok(Expr::StrongSemilattice(path))
            }
            "ACT" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                self.keyword("act@")?;
                let act = self.path()?;
                self.expect(')')?;
                Ok(Expr::ActExtension(Box::new(a), act))
            }
            "REES" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                self.expect('[')?;
                let mut ideal = vec![self.integer()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            ideal.push(self.integer()?);
                        }
                        Some(']') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.syntax("expected ',' or ']'")),
                    }
                }
                self.expect(')')?;
                Ok(Expr::Rees(Box::new(a), ideal))
            }
            "" => Err(self.syntax("expected a constructor")),
            other => Err(ParseError::UnknownConstructor { col: head_col, token: other.into() }),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser::new(text);
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(parser.syntax(format!(
            "trailing input {:?}",
            &parser.text[parser.text.len().min(parser.pos)..]
        )));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_constructors() {
        assert_eq!(parse_expression("Z6").unwrap(), Expr::Cyclic(6));
        assert_eq!(parse_expression("RZ3").unwrap(), Expr::RightZero(3));
        assert_eq!(
            parse_expression("B(Z2,2)").unwrap(),
            Expr::Brandt(Box::new(Expr::Cyclic(2)), 2)
        );
        assert_eq!(
            parse_expression("DP(Z3,RZ2)").unwrap(),
            Expr::DirectProduct(Box::new(Expr::Cyclic(3)), Box::new(Expr::RightZero(2)))
        );
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse_expression(" DP( Z3 , RZ2 ) ").unwrap().to_string(), "DP(Z3,RZ2)");
    }

    #[test]
    fn truncated_input_reports_position() {
        match parse_expression("DP(Z3,").unwrap_err() {
            ParseError::Syntax { col, .. } => assert_eq!(col, 7),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_constructor_is_distinguished() {
        assert!(matches!(
            parse_expression("QQ(Z2)"),
            Err(ParseError::UnknownConstructor { .. })
        ));
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "Z6",
            "RZ3",
            "LZ2",
            "T4-table@tables/t.json",
            "DP(Z3,RZ2)",
            "SDP(Z3,Z2,act@inv.json)",
            "WR(Z2,Z2)",
            "B(Z2,2)",
            "ZDU(Z2,RZ2)",
            "SSL(diagram@d.json)",
            "ACT(Z2,act@a.json)",
            "REES(B(Z2,2),[8])",
            "DP(DP(Z2,Z2),ZDU(RZ2,LZ2))",
        ] {
            let expr = parse_expression(text).unwrap();
            assert_eq!(expr.to_string(), text);
            assert_eq!(parse_expression(&expr.to_string()).unwrap(), expr);
        }
    }
}
