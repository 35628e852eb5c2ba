//! The fraction field `Q(q)` with canonical reduced representatives.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed};

use super::LaurentPoly;

/// An element of `Q(q)`.
///
/// The stored pair is canonical: the denominator is an ordinary polynomial
/// with nonzero, positive constant term, numerator and denominator are
/// coprime in `Q[q]`, and their combined integer content is 1. Any power of
/// `q` lives in the numerator. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn q_pow(k: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den`; `None` if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i32) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let m = k.unsigned_abs();
        Some(RatFunc {
            num: base.num.pow(m),
            den: base.den.pow(m),
        })
    }

    /// Bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self::reduce(self.num.bar(), self.den.bar())
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sn, n) = num.normalize_shift();
        let (sd, d) = den.normalize_shift();
        let g = poly_gcd(&n, &d);
        let mut n = n.div_exact(&g).expect("gcd divides numerator");
        let mut d = d.div_exact(&g).expect("gcd divides denominator");
        let c = n.content().gcd(&d.content());
        if !c.is_one() {
            n = n.div_exact_scalar(&c);
            d = d.div_exact_scalar(&c);
        }
        if d.trailing().is_some_and(|c| c.is_negative()) {
            n = -n;
            d = -d;
        }
        RatFunc {
            num: n.shift(sn - sd),
            den: d,
        }
    }
}

/// Primitive part with positive leading coefficient.
fn primitive(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = p.content();
    let mut out = p.div_exact_scalar(&c);
    if out.lead().is_some_and(|c| c.is_negative()) {
        out = -out;
    }
    out
}

/// Pseudo-remainder of ordinary polynomials: `lc(b)^(deg a - deg b + 1) a mod b`.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let db = b.max_exp().expect("nonzero divisor");
    let lb = b.lead().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.lead().unwrap().clone();
        r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
    }
    r
}

/// gcd in `Z[q]` of two ordinary polynomials, primitive with positive lead.
/// Returns 1 if either input is a nonzero constant.
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return primitive(b);
    }
    if b.is_zero() {
        return primitive(a);
    }
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.max_exp() < y.max_exp() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        if y.max_exp() == Some(0) {
            return LaurentPoly::one();
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.num_terms() > 1 {
                format!("({})", p)
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero in Q(q)")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| &a + &b)
    }
}
