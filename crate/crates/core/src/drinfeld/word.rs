//! Monomials in the generators `k_lambda`, `e_i^{(n)}`, `f_i^{(n)}`.
//!
//! Text form: atoms separated by whitespace, indices 1-based, e.g.
//! `F1 K[2,0] E1^(2)`. `E1^(2)` is a divided power, `E1^2` a plain power
//! (expanded to two atoms), and `1` is the empty word.

use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::ring::{quantum_factorial, RatFunc};
use crate::rootdata::{RootDatum, Weight};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Atom {
    K(Weight),
    /// `e_i^{(n)}`, `n >= 1`
    E(usize, u32),
    /// `f_i^{(n)}`, `n >= 1`
    F(usize, u32),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::K(w) => write!(f, "K{}", w),
            Atom::E(i, 1) => write!(f, "E{}", i + 1),
            Atom::E(i, n) => write!(f, "E{}^({})", i + 1, n),
            Atom::F(i, 1) => write!(f, "F{}", i + 1),
            Atom::F(i, n) => write!(f, "F{}^({})", i + 1, n),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct UWord {
    pub atoms: Vec<Atom>,
}

impl UWord {
    pub fn new(atoms: Vec<Atom>) -> Self {
        UWord { atoms }
    }

    pub fn one() -> Self {
        UWord { atoms: Vec::new() }
    }

    pub fn k(w: Weight) -> Self {
        UWord::new(vec![Atom::K(w)])
    }

    pub fn e(i: usize) -> Self {
        UWord::new(vec![Atom::E(i, 1)])
    }

    pub fn f(i: usize) -> Self {
        UWord::new(vec![Atom::F(i, 1)])
    }

    /// `e_{i1} e_{i2} ...`
    pub fn e_word(idx: &[usize]) -> Self {
        UWord::new(idx.iter().map(|&i| Atom::E(i, 1)).collect())
    }

    /// `f_{i1} f_{i2} ...`
    pub fn f_word(idx: &[usize]) -> Self {
        UWord::new(idx.iter().map(|&i| Atom::F(i, 1)).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn concat(&self, o: &UWord) -> UWord {
        let mut atoms = self.atoms.clone();
        atoms.extend(o.atoms.iter().cloned());
        UWord { atoms }
    }

    /// Only `K` and `E` atoms (plus side) or only `K` and `F` atoms.
    pub fn side(&self) -> Option<Side> {
        let has_e = self.atoms.iter().any(|a| matches!(a, Atom::E(..)));
        let has_f = self.atoms.iter().any(|a| matches!(a, Atom::F(..)));
        match (has_e, has_f) {
            (true, true) => None,
            (false, true) => Some(Side::Minus),
            _ => Some(Side::Plus),
        }
    }

    /// Grading in simple-root coordinates: `e_i` has `+alpha_i`, `f_i` has `-alpha_i`.
    pub fn grading(&self, rank: usize) -> Vec<i64> {
        let mut g = vec![0i64; rank];
        for a in &self.atoms {
            match a {
                Atom::K(_) => {}
                Atom::E(i, n) => g[*i] += *n as i64,
                Atom::F(i, n) => g[*i] -= *n as i64,
            }
        }
        g
    }

    /// Replaces divided powers by plain ones, returning the scalar `prod 1/[n]_{q_i}!`.
    pub fn expand_divided(&self, rd: &RootDatum) -> (RatFunc, Vec<Atom>) {
        let mut scalar = RatFunc::one();
        let mut out = Vec::new();
        for a in &self.atoms {
            match a {
                Atom::K(w) => out.push(Atom::K(w.clone())),
                Atom::E(i, n) | Atom::F(i, n) => {
                    if *n > 1 {
                        let fact = RatFunc::from_laurent(quantum_factorial(*n, rd.d_i(*i)));
                        scalar = &scalar / &fact;
                    }
                    for _ in 0..*n {
                        out.push(match a {
                            Atom::E(..) => Atom::E(*i, 1),
                            _ => Atom::F(*i, 1),
                        });
                    }
                }
            }
        }
        (scalar, out)
    }

    /// Checks indices and weight ranks against `rd`.
    pub fn validate(&self, rd: &RootDatum) -> Result<()> {
        for a in &self.atoms {
            match a {
                Atom::K(w) if w.rank() != rd.rank() => {
                    return Err(Error::Invalid(format!("K{} has the wrong rank", w)))
                }
                Atom::E(i, n) | Atom::F(i, n) if *i >= rd.rank() || *n == 0 => {
                    return Err(Error::Invalid(format!("bad generator {}", a)))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// Parses and validates against a root datum.
    pub fn parse_for(src: &str, rd: &RootDatum) -> Result<UWord> {
        let w: UWord = src.parse()?;
        w.validate(rd)?;
        Ok(w)
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "1");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", a)?;
        }
        Ok(())
    }
}

const MAX_POWER: u32 = 64;

impl std::str::FromStr for UWord {
    type Err = ParseError;

    fn from_str(src: &str) -> std::result::Result<Self, ParseError> {
        let b = src.as_bytes();
        let mut pos = 0;
        let mut atoms = Vec::new();
        let skip = |pos: &mut usize| {
            while *pos < b.len() && b[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let number = |pos: &mut usize| -> std::result::Result<u32, ParseError> {
            let start = *pos;
            while *pos < b.len() && b[*pos].is_ascii_digit() {
                *pos += 1;
            }
            src[start..*pos]
                .parse::<u32>()
                .map_err(|_| ParseError::new(start, "expected a number"))
        };
        skip(&mut pos);
        if src[pos..].trim() == "1" {
            return Ok(UWord::one());
        }
        if pos == b.len() {
            return Err(ParseError::new(0, "empty word"));
        }
        while pos < b.len() {
            let start = pos;
            match b[pos] {
                b'K' | b'k' => {
                    pos += 1;
                    if pos >= b.len() || b[pos] != b'[' {
                        return Err(ParseError::new(pos, "expected '[' after K"));
                    }
                    let close = src[pos..]
                        .find(']')
                        .ok_or_else(|| ParseError::new(pos, "unterminated weight"))?;
                    let w: Weight = src[pos + 1..pos + close]
                        .parse()
                        .map_err(|e: ParseError| ParseError::new(pos + 1 + e.pos, e.msg))?;
                    pos += close + 1;
                    atoms.push(Atom::K(w));
                }
                c @ (b'E' | b'e' | b'F' | b'f') => {
                    pos += 1;
                    let idx = number(&mut pos)?;
                    if idx == 0 || idx > 64 {
                        return Err(ParseError::new(start, "generator index out of range"));
                    }
                    let i = idx as usize - 1;
                    let mut divided = 1u32;
                    let mut plain = 1u32;
                    let mut ahead = pos;
                    skip(&mut ahead);
                    if ahead < b.len() && b[ahead] == b'^' {
                        pos = ahead + 1;
                        skip(&mut pos);
                        if pos < b.len() && b[pos] == b'(' {
                            pos += 1;
                            skip(&mut pos);
                            divided = number(&mut pos)?;
                            skip(&mut pos);
                            if pos >= b.len() || b[pos] != b')' {
                                return Err(ParseError::new(pos, "expected ')'"));
                            }
                            pos += 1;
                        } else {
                            plain = number(&mut pos)?;
                        }
                    }
                    if divided == 0 || plain == 0 || divided > MAX_POWER || plain > MAX_POWER {
                        return Err(ParseError::new(start, "power out of range"));
                    }
                    let is_e = c == b'E' || c == b'e';
                    for _ in 0..plain {
                        atoms.push(if is_e {
                            Atom::E(i, divided)
                        } else {
                            Atom::F(i, divided)
                        });
                    }
                }
                _ => return Err(ParseError::new(pos, "expected K[..], E<i> or F<i>")),
            }
            let before = pos;
            skip(&mut pos);
            if pos < b.len() && pos == before {
                return Err(ParseError::new(pos, "expected whitespace between atoms"));
            }
        }
        Ok(UWord { atoms })
    }
}

/// A finite `Q(q)`-linear combination of words.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct UPoly {
    pub terms: Vec<(RatFunc, UWord)>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn word(w: UWord) -> Self {
        UPoly {
            terms: vec![(RatFunc::one(), w)],
        }
    }

    pub fn push(&mut self, c: RatFunc, w: UWord) {
        if !c.is_zero() {
            self.terms.push((c, w));
        }
    }

    /// `left * self * right` termwise.
    pub fn padded(&self, left: &UWord, right: &UWord) -> UPoly {
        UPoly {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), left.concat(w).concat(right)))
                .collect(),
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, w)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*[{}]", c, w)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals() {
        let w: UWord = "F1 K[2,0] E1^(2)".parse().unwrap();
        assert_eq!(
            w.atoms,
            vec![Atom::F(0, 1), Atom::K(Weight(vec![2, 0])), Atom::E(0, 2)]
        );
        assert_eq!(w.to_string(), "F1 K[2,0] E1^(2)");
        let spaced: UWord = "F1 K[2,0] E1^ (2)".parse().unwrap();
        assert_eq!(spaced, w);
        let plain: UWord = "E2^3".parse().unwrap();
        assert_eq!(plain.atoms, vec![Atom::E(1, 1); 3]);
        assert_eq!("1".parse::<UWord>().unwrap(), UWord::one());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "E0", "E", "K2", "K[1", "E1^(0)", "G1", "E1^()", "E1^(2", "E1F1"] {
            assert!(bad.parse::<UWord>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn validation() {
        let rd = RootDatum::of("A2").unwrap();
        assert!(UWord::parse_for("E3", &rd).is_err());
        assert!(UWord::parse_for("K[1]", &rd).is_err());
        assert!(UWord::parse_for("E2 K[1,1]", &rd).is_ok());
    }

    #[test]
    fn divided_expansion() {
        let rd = RootDatum::of("A1").unwrap();
        let (c, atoms) = UWord::new(vec![Atom::E(0, 2)]).expand_divided(&rd);
        assert_eq!(atoms.len(), 2);
        // 1/[2] = 1/(q + q^-1)
        assert_eq!(&c * &RatFunc::from_laurent(crate::ring::quantum_int(2, 1)), RatFunc::one());
    }
}
