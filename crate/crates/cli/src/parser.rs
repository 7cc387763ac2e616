//! Polynomial expressions.
//!
//! ```text
//! Expr   := ['-'] Term (('+' | '-') Term)*
//! Term   := Factor ('*' Factor)*
//! Factor := Atom ('^' UInt)?
//! Atom   := Int | 'x' | 'X' | 'Phi' '(' UInt ')' | '(' Expr ')'
//! ```
//!
//! Whitespace is ignored between tokens.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;
use unimod_core::intpoly::cyclotomic;
use unimod_core::{FactoredCharPoly, IntPoly};

/// Largest accepted `m` in `Phi(m)`.
pub const MAX_PHI_INDEX: u64 = 1_000_000;
/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 100_000;

/// Input rejected by the grammar or by factor validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("{0}")]
    Validation(String),
}

/// Abstract syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    X,
    Phi(u64),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Vec<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Expands to a single integer polynomial.
    pub fn eval(&self) -> IntPoly {
        match self {
            PolyExpr::Int(n) => IntPoly::constant(n.clone()),
            PolyExpr::X => IntPoly::x(),
            PolyExpr::Phi(m) => cyclotomic(*m),
            PolyExpr::Neg(a) => -&a.eval(),
            PolyExpr::Add(a, b) => &a.eval() + &b.eval(),
            PolyExpr::Sub(a, b) => &a.eval() - &b.eval(),
            PolyExpr::Mul(fs) => fs.iter().map(PolyExpr::eval).product(),
            PolyExpr::Pow(a, e) => a.eval().pow(*e),
        }
    }
}

/// Result of [`parse_poly_expr`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPoly {
    /// A top-level product of powered factors.
    Factored(FactoredCharPoly),
    /// Any other expression.
    Bare(IntPoly),
}

impl ParsedPoly {
    /// The expanded polynomial.
    pub fn expand(&self) -> IntPoly {
        match self {
            ParsedPoly::Factored(f) => f.expand(),
            ParsedPoly::Bare(p) => p.clone(),
        }
    }
}

/// Parses `text` into a syntax tree.
pub fn parse_ast(text: &str) -> Result<PolyExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses `text`; a top-level product becomes a validated factored polynomial.
pub fn parse_poly_expr(text: &str) -> Result<ParsedPoly, ParseError> {
    let ast = parse_ast(text)?;
    match top_level_factors(&ast) {
        Some(factors) => {
            let pairs = factors.into_iter().map(|(e, k)| (e.eval(), k)).collect();
            FactoredCharPoly::new(pairs)
                .map(ParsedPoly::Factored)
                .map_err(|e| ParseError::Validation(e.to_string()))
        }
        None => Ok(ParsedPoly::Bare(ast.eval())),
    }
}

/// Parses a characteristic polynomial; a bare expression is one factor.
pub fn parse_char_poly(text: &str) -> Result<FactoredCharPoly, ParseError> {
    match parse_poly_expr(text)? {
        ParsedPoly::Factored(f) => Ok(f),
        ParsedPoly::Bare(p) => {
            FactoredCharPoly::new(vec![(p, 1)]).map_err(|e| ParseError::Validation(e.to_string()))
        }
    }
}

fn top_level_factors(e: &PolyExpr) -> Option<Vec<(&PolyExpr, u32)>> {
    let items: Vec<&PolyExpr> = match e {
        PolyExpr::Mul(fs) => fs.iter().collect(),
        PolyExpr::Phi(_) | PolyExpr::Pow(..) => vec![e],
        _ => return None,
    };
    Some(
        items
            .into_iter()
            .map(|f| match f {
                PolyExpr::Pow(a, k) => (a.as_ref(), *k),
                other => (other, 1),
            })
            .collect(),
    )
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            message: message.to_string(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut acc = if self.eat(b'-') {
            PolyExpr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = PolyExpr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = PolyExpr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut fs = vec![self.factor()?];
        while self.eat(b'*') {
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { PolyExpr::Mul(fs) })
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        let a = self.atom()?;
        if self.eat(b'^') {
            let (n, start) = self.uint()?;
            let k = n.to_u32().filter(|&k| k <= MAX_EXPONENT).ok_or(ParseError::Syntax {
                offset: start,
                message: format!("exponent above {MAX_EXPONENT}"),
            })?;
            return Ok(PolyExpr::Pow(Box::new(a), k));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => Ok(PolyExpr::Int(self.uint()?.0)),
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                Ok(PolyExpr::X)
            }
            Some(b'P') if self.src[self.pos..].starts_with(b"Phi") => {
                self.pos += 3;
                if !self.eat(b'(') {
                    return Err(self.error("expected '(' after Phi"));
                }
                let (m, start) = self.uint()?;
                let m = m.to_u64().filter(|m| (1..=MAX_PHI_INDEX).contains(m)).ok_or(ParseError::Syntax {
                    offset: start,
                    message: format!("Phi index must lie in 1..={MAX_PHI_INDEX}"),
                })?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(PolyExpr::Phi(m))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(_) => Err(self.error("expected an integer, x, Phi(m) or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<(BigInt, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((digits.parse().expect("decimal digits"), start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_becomes_factored() {
        let ParsedPoly::Factored(f) = parse_poly_expr("Phi(14)^2 * Phi(7)^2").unwrap() else {
            panic!("expected a product")
        };
        assert_eq!(f.to_text(), "Phi(7)^2 * Phi(14)^2");
    }

    #[test]
    fn sum_is_bare() {
        assert_eq!(
            parse_poly_expr("x^2+7*x+1").unwrap(),
            ParsedPoly::Bare(IntPoly::from_i64s(&[1, 7, 1]))
        );
        assert_eq!(
            parse_poly_expr("-3*X^2 - 1").unwrap(),
            ParsedPoly::Bare(IntPoly::from_i64s(&[-1, 0, -3]))
        );
    }

    #[test]
    fn rejects_linear_and_repeated() {
        assert!(matches!(parse_poly_expr("Phi(1)"), Err(ParseError::Validation(_))));
        assert!(matches!(parse_poly_expr("Phi(3) * Phi(3)"), Err(ParseError::Validation(_))));
        assert!(matches!(parse_poly_expr("2 * Phi(3)"), Err(ParseError::Validation(_))));
        assert!(matches!(parse_poly_expr("(x^2 + 3*x + 2)^1"), Err(ParseError::Validation(_))));
    }

    #[test]
    fn syntax_offsets() {
        assert_eq!(
            parse_poly_expr("Phi(3) * "),
            Err(ParseError::Syntax {
                offset: 9,
                message: "unexpected end of input".into()
            })
        );
        assert!(matches!(parse_poly_expr("x ^ y"), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_poly_expr("Phi(0)"), Err(ParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_poly_expr("x x"), Err(ParseError::Syntax { offset: 2, .. })));
    }
}
