//! Text parsers for the polynomial renderings produced by `Display`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := integer | var ["^" ["-"] integer]
//! var    := "q" | "z" digits | "x"
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, MultiLaurent};
use crate::error::ParseError;

/// A parsed monomial: coefficient and `(variable, exponent)` factors.
type RawTerm = (BigInt, Vec<(String, i64)>);

/// Hard cap on literal exponents so hostile input cannot request huge allocations.
pub const MAX_EXPONENT: i64 = 1 << 20;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        if v > MAX_EXPONENT {
            return Err(self.err("exponent out of range"));
        }
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self) -> Result<Result<BigInt, (String, i64)>, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(Ok(d.parse::<BigInt>().map_err(|_| self.err("bad integer"))?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.bump();
                let mut name = c.to_string();
                if c == 'z' {
                    name.push_str(self.digits()?);
                } else if c != 'q' && c != 'x' {
                    return Err(self.err(format!("unknown variable '{}'", c)));
                }
                let exp = if self.peek() == Some('^') {
                    self.bump();
                    self.small_int()?
                } else {
                    1
                };
                Ok(Err((name, exp)))
            }
            _ => Err(self.err("expected integer or variable")),
        }
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let mut coeff = BigInt::one();
        let mut vars = Vec::new();
        loop {
            match self.factor()? {
                Ok(c) => coeff *= c,
                Err(v) => vars.push(v),
            }
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        Ok((coeff, vars))
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut out = Vec::new();
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                -1
            }
            Some('+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        loop {
            let (c, v) = self.term()?;
            out.push((c * sign, v));
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = 1;
                }
                Some('-') => {
                    self.bump();
                    sign = -1;
                }
                None => break,
                Some(other) => return Err(self.err(format!("unexpected '{}'", other))),
            }
        }
        Ok(out)
    }
}

fn parse_raw(src: &str) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor::new(src);
    if cur.peek().is_none() {
        return Err(cur.err("empty polynomial"));
    }
    cur.poly()
}

/// Parses a Laurent polynomial in `q`, e.g. `q^2 + 1 - 3*q^-1`.
pub fn parse_laurent(src: &str) -> Result<LaurentPoly, ParseError> {
    parse_laurent_in(src, "q")
}

/// Same grammar with a different variable name (`x` for cyclotomic residues).
pub fn parse_laurent_in(src: &str, var: &str) -> Result<LaurentPoly, ParseError> {
    let mut p = LaurentPoly::zero();
    for (c, vars) in parse_raw(src)? {
        let mut e = 0i64;
        for (name, k) in vars {
            if name != var {
                return Err(ParseError::new(0, format!("unexpected variable '{}'", name)));
            }
            e = e.checked_add(k).filter(|e| e.abs() <= MAX_EXPONENT).ok_or_else(|| {
                ParseError::new(0, "exponent out of range")
            })?;
        }
        p = &p + &LaurentPoly::monomial(c, e);
    }
    Ok(p)
}

/// Parses an element of `Z[q^±1, z1^±1, ..., zn^±1]`.
pub fn parse_multi(src: &str, nvars: usize) -> Result<MultiLaurent, ParseError> {
    let mut p = MultiLaurent::zero(nvars);
    for (c, vars) in parse_raw(src)? {
        let mut e = vec![0i64; nvars + 1];
        for (name, k) in vars {
            let idx = if name == "q" {
                0
            } else if let Some(rest) = name.strip_prefix('z') {
                let i: usize = rest
                    .parse()
                    .map_err(|_| ParseError::new(0, format!("bad variable '{}'", name)))?;
                if i == 0 || i > nvars {
                    return Err(ParseError::new(0, format!("variable '{}' out of range", name)));
                }
                i
            } else {
                return Err(ParseError::new(0, format!("unexpected variable '{}'", name)));
            };
            e[idx] = e[idx]
                .checked_add(k)
                .filter(|e| e.abs() <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(0, "exponent out of range"))?;
        }
        if !c.is_zero() {
            p = p.add(&MultiLaurent::monomial(nvars, c, e));
        }
    }
    Ok(p)
}
