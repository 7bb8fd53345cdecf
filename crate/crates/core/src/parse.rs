//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' uint)?
//! base   := uint | var | '(' expr ')'
//! ```
//!
//! Unary minus binds looser than `^`, so `-x^2` is `−(x²)`, matching the
//! output of [`MultiPoly::canonical_string`]. Columns in errors are 1-based
//! character positions.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{MultiPoly, VarList};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    /// Index into the variable list, and the name as written.
    Var(usize, String),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Neg(Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

impl ExprAst {
    pub fn to_poly(&self, vars: &VarList) -> Result<MultiPoly> {
        Ok(match self {
            ExprAst::Int(c) => MultiPoly::constant(vars, c.clone()),
            ExprAst::Var(i, _) => MultiPoly::var_at(vars, *i),
            ExprAst::Add(a, b) => a.to_poly(vars)?.try_add(&b.to_poly(vars)?)?,
            ExprAst::Sub(a, b) => a.to_poly(vars)?.try_sub(&b.to_poly(vars)?)?,
            ExprAst::Neg(a) => -a.to_poly(vars)?,
            ExprAst::Mul(a, b) => a.to_poly(vars)?.try_mul(&b.to_poly(vars)?)?,
            ExprAst::Pow(a, e) => a.to_poly(vars)?.try_pow(*e)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("`{v}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::Syntax { column: col, message: format!("unexpected character `{c}`") }),
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a VarList,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> Error {
        let found = self.peek();
        let mut message = format!("expected {expected}, found {}", found.describe());
        if matches!(found, Tok::Int(_) | Tok::Ident(_) | Tok::LParen) {
            message.push_str(" (implicit multiplication is not supported; use `*`)");
        }
        Error::Syntax { column: self.column(), message }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let col = self.column();
        match self.bump().0 {
            Tok::Int(v) => {
                let e = u32::try_from(&v).map_err(|_| Error::Syntax {
                    column: col,
                    message: format!("exponent {v} is too large"),
                })?;
                Ok(ExprAst::Pow(Box::new(base), e))
            }
            _ => Err(Error::Syntax {
                column: col,
                message: "exponent must be a non-negative integer literal".into(),
            }),
        }
    }

    fn base(&mut self) -> Result<ExprAst> {
        let col = self.column();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(ExprAst::Int(v))
            }
            Tok::Ident(name) => {
                self.bump();
                let idx = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| Error::UnknownVariable { name: name.clone(), column: col })?;
                Ok(ExprAst::Var(idx, name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(Error::Syntax {
                column: col,
                message: format!("expected a number, variable, or `(`, found {}", self.peek().describe()),
            }),
        }
    }
}

/// Parses `text` over `vars`; every identifier must be in the list.
pub fn parse_expr(text: &str, vars: &VarList) -> Result<ExprAst> {
    let mut p = Parser { toks: tokenize(text)?, pos: 0, vars };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(ast)
}

/// `parse_expr` followed by expansion into a polynomial.
pub fn parse_poly(text: &str, vars: &VarList) -> Result<MultiPoly> {
    parse_expr(text, vars)?.to_poly(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xa() -> VarList {
        VarList::new(["x", "a"])
    }

    #[test]
    fn dickson_d2() {
        let p = parse_poly("x^2 - 2*a", &xa()).unwrap();
        assert_eq!(p.to_string(), "x^2 - 2*a");
    }

    #[test]
    fn nested_parens() {
        let v = xa();
        assert_eq!(parse_expr("((x))", &v).unwrap(), ExprAst::Var(0, "x".into()));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        match parse_expr("x y", &VarList::new(["x", "y"])) {
            Err(Error::Syntax { column, message }) => {
                assert_eq!(column, 3);
                assert!(message.contains("implicit multiplication"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unary_minus_binds_looser_than_power() {
        let v = xa();
        assert_eq!(parse_poly("-x^2", &v).unwrap().to_string(), "-x^2");
        assert_eq!(parse_poly("(-x)^2", &v).unwrap().to_string(), "x^2");
        assert_eq!(parse_poly("2 - -3", &v).unwrap().to_string(), "5");
        assert_eq!(parse_poly("-4*x*a + 1", &v).unwrap().to_string(), "-4*x*a + 1");
    }

    #[test]
    fn error_columns() {
        let v = xa();
        assert_eq!(
            parse_expr("x + q", &v).unwrap_err(),
            Error::UnknownVariable { name: "q".into(), column: 5 }
        );
        match parse_expr("x^a", &v).unwrap_err() {
            Error::Syntax { column, .. } => assert_eq!(column, 3),
            e => panic!("{e:?}"),
        }
        match parse_expr("x^-1", &v).unwrap_err() {
            Error::Syntax { column, .. } => assert_eq!(column, 3),
            e => panic!("{e:?}"),
        }
        match parse_expr("(x + 1", &v).unwrap_err() {
            Error::Syntax { column, .. } => assert_eq!(column, 7),
            e => panic!("{e:?}"),
        }
        match parse_expr("x + $", &v).unwrap_err() {
            Error::Syntax { column, .. } => assert_eq!(column, 5),
            e => panic!("{e:?}"),
        }
        match parse_expr("", &v).unwrap_err() {
            Error::Syntax { column, .. } => assert_eq!(column, 1),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn big_literals() {
        let v = xa();
        let p = parse_poly("123456789012345678901234567890*x", &v).unwrap();
        assert_eq!(p.to_string(), "123456789012345678901234567890*x");
    }
}
