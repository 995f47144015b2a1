//! Text format for polynomials: `c0 + c1*z + c2*z^2 ...`.
//!
//! Coefficients are real literals (`3`, `-1/2`, `0.25`), imaginary literals
//! (`2i`, `i`) or parenthesised sub-expressions such as `(1+2i)*z^2`.
//! Juxtaposition multiplies: `2z`, `3iz^2`.

use super::{Poly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn expr<S: Scalar>(&mut self) -> Result<Poly<S>, ParseError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term::<S>()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<S: Scalar>(&mut self) -> Result<Poly<S>, ParseError> {
        let mut acc = self.factor::<S>()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == 'z' || c == 'i' || c == '(' || c.is_ascii_digit() || c == '.' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<S: Scalar>(&mut self) -> Result<Poly<S>, ParseError> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Some('z') => {
                self.pos += 1;
                Poly::z()
            }
            Some('i') => {
                self.pos += 1;
                Poly::constant(S::imag_unit())
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Poly::constant(self.number()?),
            Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            None => return Err(self.error("unexpected end of input")),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
            let exp: usize = digits
                .parse()
                .map_err(|_| self.error("expected a non-negative integer exponent"))?;
            return Ok((0..exp).fold(Poly::one(), |acc, _| &acc * &base));
        }
        Ok(base)
    }

    fn number<S: Scalar>(&mut self) -> Result<S, ParseError> {
        let start = self.pos;
        let mut text = String::new();
        while let Some(c) = self.peek() {
            let exponent_sign = (c == '-' || c == '+')
                && text.ends_with(['e', 'E'])
                && text.chars().next().is_some_and(|d| d.is_ascii_digit() || d == '.');
            if c.is_ascii_digit() || c == '.' || c == 'e' || c == 'E' || exponent_sign {
                text.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.peek() == Some('/') {
            self.pos += 1;
            text.push('/');
            if self.peek() == Some('-') {
                text.push('-');
                self.pos += 1;
            }
            while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                text.push(c);
                self.pos += 1;
            }
        }
        S::parse_real(&text).ok_or_else(|| {
            self.pos = start;
            self.error(format!("invalid number `{text}`"))
        })
    }
}

impl<S: Scalar> Poly<S> {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut parser = Parser::new(text);
        if parser.peek().is_none() {
            return Err(parser.error("empty polynomial"));
        }
        let p = parser.expr()?;
        if parser.peek().is_some() {
            return Err(parser.error("trailing input"));
        }
        Ok(p)
    }
}

/// Parse a single coefficient literal such as `1/2`, `-3i` or `(1+2i)`.
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S, ParseError> {
    let p = Poly::<S>::parse(text)?;
    match p.degree() {
        None => Ok(S::zero()),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(ParseError {
            offset: 0,
            message: format!("`{text}` is not a constant"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{c64, exact, ratio, ExactComplex, C64};

    #[test]
    fn parses_the_documented_format() {
        let p: Poly<ExactComplex> = Poly::parse("1/2 + 3*z - z^3").unwrap();
        assert_eq!(
            p,
            Poly::new(vec![ratio(1, 2), ratio(3, 1), ratio(0, 1), ratio(-1, 1)])
        );
        let p: Poly<ExactComplex> = Poly::parse("(1+2i)*z^2 + 2i").unwrap();
        assert_eq!(p.coeff(2), exact(1, 1, 2, 1));
        assert_eq!(p.coeff(0), exact(0, 1, 2, 1));
        let p: Poly<ExactComplex> = Poly::parse("2z(z-1)").unwrap();
        assert_eq!(p, Poly::new(vec![ratio(0, 1), ratio(-2, 1), ratio(2, 1)]));
    }

    #[test]
    fn float_literals_with_exponents() {
        let p: Poly<C64> = Poly::parse("1.5e-3*z + 2").unwrap();
        assert!((p.coeff(1) - c64(1.5e-3, 0.0)).norm() < 1e-18);
    }

    #[test]
    fn display_round_trips_exactly() {
        let p: Poly<ExactComplex> = Poly::parse("-7/3 + (1/2-5i)*z + 4i*z^2").unwrap();
        let again: Poly<ExactComplex> = Poly::parse(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Poly::<C64>::parse("").is_err());
        assert!(Poly::<C64>::parse("z^").is_err());
        assert!(Poly::<C64>::parse("(z+1").is_err());
        assert!(Poly::<C64>::parse("x+1").is_err());
        assert!(parse_scalar::<C64>("z").is_err());
        assert_eq!(parse_scalar::<ExactComplex>("-1/4").unwrap(), ratio(-1, 4));
    }
}
