use super::gens::GeneratorSet;
use super::poly::BraidedPoly;
use crate::error::{Error, Result};

/// Parses the textual form printed by [`BraidedPoly::display`].
///
/// Grammar: terms joined by `+`; factors joined by `*` or whitespace; a factor
/// is an identifier, `0`, `1` or a parenthesised expression, optionally
/// followed by `'` (apply d) and `^k` with `k` a possibly negative integer.
pub fn parse_poly(set: &GeneratorSet, input: &str) -> Result<BraidedPoly> {
    let mut p = Parser {
        set,
        chars: input.chars().collect(),
        pos: 0,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    set: &'a GeneratorSet,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<BraidedPoly> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('+') {
                self.pos += 1;
                acc += self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BraidedPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<BraidedPoly> {
        self.skip_ws();
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                // integer constants are read mod 2
                if self.integer()? % 2 == 0 {
                    BraidedPoly::zero()
                } else {
                    BraidedPoly::one()
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let ident: String = self.chars[start..self.pos].iter().collect();
                let g = self
                    .set
                    .resolve(&ident)
                    .ok_or_else(|| Error::Parse(format!("unknown generator {ident}")))?;
                BraidedPoly::var(g)
            }
            _ => return Err(self.err("expected a factor")),
        };
        let mut value = base;
        if self.peek() == Some('\'') {
            self.pos += 1;
            value = value.derive();
        }
        if self.peek() == Some('^') {
            self.pos += 1;
            let neg = if self.peek() == Some('-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let k = self.integer()?;
            let k = i32::try_from(k).map_err(|_| self.err("exponent out of range"))?;
            value = value.pow_signed(if neg { -k } else { k })?;
        }
        Ok(value)
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer out of range"))
    }
}
