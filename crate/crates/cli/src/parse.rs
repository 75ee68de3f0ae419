//! Text form of integer polynomials in `x`, e.g. `"x^50 - x^4 - 1"` or
//! `"-3*x^2 + 2x"`. Like terms are combined.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;
use trinomial_core::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii"))
    }

    /// `[coefficient] ['*'] x ['^' exponent]` or a bare coefficient.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("digits"));
        let has_coeff = coeff.is_some();
        if has_coeff && self.eat(b'*') && self.peek() != Some(b'x') {
            return Err(self.error("'x' after '*'"));
        }
        if !self.eat(b'x') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.error("integer or 'x'")),
            };
        }
        let exponent = if self.eat(b'^') {
            let d = self
                .digits()
                .ok_or_else(|| self.error("exponent digits after '^'"))?;
            d.parse::<usize>()
                .map_err(|_| self.error("exponent that fits in usize"))?
        } else {
            1
        };
        Ok((coeff.unwrap_or_else(BigInt::one), exponent))
    }
}

pub fn parse_polynomial(text: &str) -> Result<IntPoly, ParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else if cur.peek().is_none() {
            break;
        } else {
            return Err(cur.error("'+', '-' or end of input"));
        };
        first = false;
        let (c, e) = cur.term()?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        if negative {
            coeffs[e] -= c;
        } else {
            coeffs[e] += c;
        }
    }
    Ok(IntPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            parse_polynomial("x^5 - x^2 + 4").unwrap(),
            IntPoly::from_slice(&[4, 0, -1, 0, 0, 1])
        );
        assert_eq!(parse_polynomial("x").unwrap(), IntPoly::from_slice(&[0, 1]));
        assert_eq!(
            parse_polynomial("x^2 + x^2").unwrap(),
            IntPoly::from_slice(&[0, 0, 2])
        );
        assert_eq!(
            parse_polynomial(" -3*x^2+2x -x^0 ").unwrap(),
            IntPoly::from_slice(&[-1, 2, -3])
        );
        assert_eq!(parse_polynomial("x - x").unwrap(), IntPoly::zero());
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(parse_polynomial("x^").unwrap_err().position, 2);
        assert_eq!(parse_polynomial("x + ").unwrap_err().position, 4);
        assert_eq!(parse_polynomial("x y").unwrap_err().position, 2);
        assert!(parse_polynomial("").is_err());
        assert!(parse_polynomial("3*").is_err());
    }
}
