//! Sparse Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`.
///
/// Stored as a map from exponent to coefficient. Zero coefficients are never
/// stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `q`
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^k`
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^k`
    pub fn monomial<T: Into<BigInt>>(c: T, k: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Leading coefficient (highest exponent).
    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// Coefficient of the lowest exponent.
    pub fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.values().next()
    }

    /// If this is `±q^k`, returns `(sign, k)`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (k, c) = self.coeffs.iter().next()?;
        if c.is_one() {
            Some((1, *k))
        } else if (-c).is_one() {
            Some((-1, *k))
        } else {
            None
        }
    }

    /// If this is a constant, returns it.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^d` for nonzero `d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        assert!(d != 0, "substitution q -> q^0 is not a ring automorphism");
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e * d, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Evaluates at an integer point; `x` must be `±1` if negative exponents occur.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.coeffs {
            let term = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else if x.abs().is_one() {
                num_traits::pow(x.clone(), (-*e) as usize)
            } else {
                return None;
            };
            acc += c * term;
        }
        Some(acc)
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient exactly by `c`; panics if inexact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, x)| {
                    let (qt, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*e, qt)
                })
                .collect(),
        }
    }

    /// Shifts so the lowest exponent is zero; returns `(shift, poly)` with
    /// `self = q^shift * poly`.
    pub fn normalize_shift(&self) -> (i64, Self) {
        match self.min_exp() {
            None => (0, Self::zero()),
            Some(m) => (m, self.shift(-m)),
        }
    }

    /// Exact division in `Z[q, q^-1]`, if the quotient exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (sa, a) = self.normalize_shift();
        let (sb, b) = divisor.normalize_shift();
        let (quot, rem) = a.div_rem_poly(&b)?;
        if !rem.is_zero() {
            return None;
        }
        Some(quot.shift(sa - sb))
    }

    /// Polynomial long division for ordinary polynomials (nonnegative exponents).
    /// Returns `None` if a non-integral quotient coefficient would be needed.
    pub(crate) fn div_rem_poly(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dlead = divisor.lead()?.clone();
        let ddeg = divisor.max_exp()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                break;
            }
            let rlead = rem.lead().cloned().unwrap_or_default();
            let (c, r) = rlead.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = rdeg - ddeg;
            quot.add_term(shift, c.clone());
            rem -= &divisor.shift(shift).scale(&c);
        }
        Some((quot, rem))
    }

    /// Reduces an ordinary polynomial modulo a monic ordinary polynomial.
    pub(crate) fn rem_monic(&self, modulus: &Self) -> Self {
        debug_assert!(modulus.lead().is_some_and(|c| c.is_one()));
        let ddeg = modulus.max_exp().expect("nonzero modulus");
        let mut rem = self.clone();
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                break;
            }
            let c = rem.lead().cloned().unwrap_or_default();
            rem -= &modulus.shift(rdeg - ddeg).scale(&c);
        }
        rem
    }

    /// `max_exp - min_exp`, or -1 for zero.
    pub fn degree_span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => -1,
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

/// Renders as a sum of `c*q^k` terms in decreasing exponent order, e.g.
/// `q^2 + 1 - 3*q^-1`. The output is accepted by [`crate::ring::parse_laurent`].
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            write_monomial(f, &mag, "q", *e)?;
        }
        Ok(())
    }
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    mag: &BigInt,
    var: &str,
    e: i64,
) -> fmt::Result {
    match (mag.is_one(), e) {
        (_, 0) => write!(f, "{}", mag),
        (true, 1) => write!(f, "{}", var),
        (true, _) => write!(f, "{}^{}", var, e),
        (false, 1) => write!(f, "{}*{}", mag, var),
        (false, _) => write!(f, "{}*{}^{}", mag, var, e),
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}
