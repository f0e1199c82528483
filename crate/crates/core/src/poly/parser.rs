//! Recursive-descent parser for polynomial text.
//!
//! Grammar:
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | identifier | '(' expr ')'
//! rational := int ('/' positive-int)?
//! ```
//! Implicit multiplication is rejected; exponents must be nonnegative
//! integers; rational literals may carry a leading minus sign.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::context::VariableContext;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token plus its starting byte offset.
    fn next_token(&mut self) -> Result<(Token, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((Token::End, start));
        }
        let c = self.src[self.pos];
        let simple = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'/' => Some(Token::Slash),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            self.pos += 1;
            return Ok((tok, start));
        }
        if c.is_ascii_digit() {
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let value = BigInt::from_str(text).map_err(|_| Error::Parse {
                position: start,
                message: format!("invalid integer literal `{text}`"),
            })?;
            return Ok((Token::Int(value), start));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return Ok((Token::Ident(text.to_string()), start));
        }
        Err(Error::Parse {
            position: start,
            message: format!("unexpected character `{}`", c as char),
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Token,
    current_pos: usize,
    context: Arc<VariableContext>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, context: &Arc<VariableContext>) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let (current, current_pos) = lexer.next_token()?;
        Ok(Parser {
            lexer,
            current,
            current_pos,
            context: Arc::clone(context),
        })
    }

    fn advance(&mut self) -> Result<()> {
        let (tok, pos) = self.lexer.next_token()?;
        self.current = tok;
        self.current_pos = pos;
        Ok(())
    }

    fn syntax_error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.current_pos,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.current {
                Token::Plus => {
                    self.advance()?;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.advance()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.current == Token::Star {
            self.advance()?;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.current != Token::Caret {
            return Ok(base);
        }
        self.advance()?;
        match self.current.clone() {
            Token::Int(e) => {
                let exponent = u32::try_from(&e).map_err(|_| Error::Parse {
                    position: self.current_pos,
                    message: format!("exponent {e} too large"),
                })?;
                self.advance()?;
                Ok(base.pow(exponent))
            }
            Token::Minus => self.syntax_error("exponent must be a nonnegative integer"),
            _ => self.syntax_error("expected a nonnegative integer exponent after `^`"),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.current.clone() {
            Token::Minus => {
                let sign_pos = self.current_pos;
                self.advance()?;
                match self.current.clone() {
                    Token::Int(n) => {
                        self.advance()?;
                        let value = self.rational_tail(-n)?;
                        Ok(Polynomial::constant(&self.context, value))
                    }
                    _ => Err(Error::Parse {
                        position: sign_pos,
                        message: "`-` must introduce a rational literal here".into(),
                    }),
                }
            }
            Token::Int(n) => {
                self.advance()?;
                let value = self.rational_tail(n)?;
                Ok(Polynomial::constant(&self.context, value))
            }
            Token::Ident(name) => {
                let pos = self.current_pos;
                match self.context.index_of(&name) {
                    Some(index) => {
                        self.advance()?;
                        Ok(Polynomial::variable(&self.context, index))
                    }
                    None => Err(Error::Parse {
                        position: pos,
                        message: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Token::LParen => {
                self.advance()?;
                let inner = self.expr()?;
                if self.current != Token::RParen {
                    return self.syntax_error("expected `)`");
                }
                self.advance()?;
                Ok(inner)
            }
            Token::End => self.syntax_error("unexpected end of input"),
            _ => self.syntax_error("expected a number, variable, or `(`"),
        }
    }

    /// Optional `/ positive-int` continuation of a rational literal.
    fn rational_tail(&mut self, numer: BigInt) -> Result<Rational> {
        if self.current != Token::Slash {
            return Ok(Rational::from(numer));
        }
        self.advance()?;
        match self.current.clone() {
            Token::Int(d) if d.is_positive() => {
                self.advance()?;
                Ok(Rational::new(numer, d))
            }
            Token::Int(d) if d.is_zero() => self.syntax_error("denominator must be positive"),
            _ => self.syntax_error("expected a positive integer denominator"),
        }
    }
}

/// Parse a polynomial in the given context; every identifier must name a
/// context variable. The result is fully expanded and canonical.
pub fn parse_polynomial(text: &str, context: &Arc<VariableContext>) -> Result<Polynomial> {
    let mut parser = Parser::new(text, context)?;
    let poly = parser.expr()?;
    if parser.current != Token::End {
        return parser.syntax_error("unexpected trailing input");
    }
    Ok(poly)
}

/// Parse a bare rational literal (`int` or `int/positive-int`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let (negative, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let (numer_text, denom_text) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (body, None),
    };
    let bad = |message: String| Error::Parse {
        position: 0,
        message,
    };
    if numer_text.is_empty() || !numer_text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad(format!("invalid rational literal `{trimmed}`")));
    }
    let mut numer = BigInt::from_str(numer_text).unwrap();
    if negative {
        numer = -numer;
    }
    let denom = match denom_text {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(format!("invalid denominator in `{trimmed}`")));
            }
            let denom = BigInt::from_str(d).unwrap();
            if denom.is_zero() {
                return Err(bad("denominator must be positive".into()));
            }
            denom
        }
    };
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::grevlex(vec!["x", "y"]).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn direct_reading() {
        let p = parse_polynomial("x^2*y - 3/2", &ctx()).unwrap();
        let terms = p.terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].coeff, rat(1, 1));
        assert_eq!(terms[0].monomial, Monomial::from_exponents(vec![2, 1]));
        assert_eq!(terms[1].coeff, rat(-3, 2));
        assert_eq!(terms[1].monomial, Monomial::from_exponents(vec![0, 0]));
    }

    #[test]
    fn difference_of_squares_expands() {
        let c = ctx();
        let p = parse_polynomial("(x+y)*(x-y)", &c).unwrap();
        let expected = parse_polynomial("x^2 - y^2", &c).unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let err = parse_polynomial("x^-1", &ctx()).unwrap_err();
        match err {
            Error::Parse { position, message } => {
                assert_eq!(position, 2);
                assert!(message.contains("nonnegative"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_variable_is_rejected() {
        let err = parse_polynomial("x + z", &ctx()).unwrap_err();
        match err {
            Error::Parse { position, message } => {
                assert_eq!(position, 4);
                assert!(message.contains("unknown variable `z`"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(parse_polynomial("2x", &ctx()).is_err());
        assert!(parse_polynomial("x y", &ctx()).is_err());
    }

    #[test]
    fn signed_literals_only_in_rational_position() {
        let c = ctx();
        assert_eq!(
            parse_polynomial("-3/2", &c).unwrap(),
            Polynomial::constant(&c, rat(-3, 2))
        );
        // unary minus on a variable is not part of the grammar
        assert!(parse_polynomial("-x", &c).is_err());
        // but the printer never emits that form
        let p = parse_polynomial("0 - x", &c).unwrap();
        assert_eq!(p.to_string(), "-1*x");
        assert_eq!(parse_polynomial(&p.to_string(), &c).unwrap(), p);
    }

    #[test]
    fn rational_literal_parsing() {
        assert_eq!(parse_rational("7/4").unwrap(), rat(7, 4));
        assert_eq!(parse_rational("-9").unwrap(), rat(-9, 1));
        assert_eq!(parse_rational(" 6/8 ").unwrap(), rat(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1/-2").is_err());
    }
}
