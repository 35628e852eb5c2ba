//! Multivariate Laurent polynomials `Z[q^±1, z1^±1, ..., zn^±1]`.
//!
//! Used for symbolic torus points: a point whose coordinate on the `i`-th
//! fundamental weight is the formal variable `zi` is a "generic" point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::LaurentPoly;

/// Exponent vector: index 0 is `q`, index `i >= 1` is `zi`.
pub type Exponents = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiLaurent {
    /// Zero in the ring with `nvars` torus variables (plus `q`).
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, BigInt::one(), vec![0; nvars + 1])
    }

    pub fn monomial(nvars: usize, c: BigInt, exps: Exponents) -> Self {
        assert_eq!(exps.len(), nvars + 1, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiLaurent { nvars, terms }
    }

    /// `q^k`
    pub fn q_pow(nvars: usize, k: i64) -> Self {
        let mut e = vec![0; nvars + 1];
        e[0] = k;
        Self::monomial(nvars, BigInt::one(), e)
    }

    /// The variable `zi` (1-based), raised to `k`.
    pub fn var_pow(nvars: usize, i: usize, k: i64) -> Self {
        assert!(i >= 1 && i <= nvars, "torus variable index out of range");
        let mut e = vec![0; nvars + 1];
        e[i] = k;
        Self::monomial(nvars, BigInt::one(), e)
    }

    pub fn from_laurent(nvars: usize, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(nvars);
        for (k, c) in p.terms() {
            let mut e = vec![0; nvars + 1];
            e[0] = k;
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Inverse exists exactly for the units `±monomial`.
    pub fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if !c.abs().is_one() {
            return None;
        }
        Some(Self::monomial(
            self.nvars,
            c.clone(),
            e.iter().map(|x| -x).collect(),
        ))
    }

    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.nvars);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({})", self)
    }
}

/// Terms like `-2*q^-1*z1*z2^3`, highest exponent vector first.
impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for (j, k) in e.iter().enumerate() {
                if *k == 0 {
                    continue;
                }
                let name = if j == 0 { "q".to_string() } else { format!("z{}", j) };
                factors.push(if *k == 1 { name } else { format!("{}^{}", name, k) });
            }
            let mag = c.abs();
            if factors.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
