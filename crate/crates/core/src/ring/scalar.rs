//! A common interface over the coefficient rings used by characters and torus points.
//!
//! Every ring here is a commutative `Z[q, q^-1]`-algebra. Rings that need
//! runtime data (the cyclotomic level, the number of torus variables) carry
//! it in a context value so that constants can be built without an existing
//! element.

use std::fmt;

use super::{CycCtx, CycScalar, LaurentPoly, MultiLaurent, RatFunc};

pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Ctx: Clone + PartialEq + fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    /// The structure map `Z[q, q^-1] -> Self`.
    fn from_laurent(ctx: &Self::Ctx, p: &LaurentPoly) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn inv(&self) -> Option<Self>;

    fn q_pow(ctx: &Self::Ctx, k: i64) -> Self {
        Self::from_laurent(ctx, &LaurentPoly::q_pow(k))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Integer power; negative exponents need an inverse.
    fn pow_i(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(&self.ctx());
        let mut b = base;
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }
}

impl Scalar for LaurentPoly {
    type Ctx = ();
    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        LaurentPoly::zero()
    }
    fn one(_: &()) -> Self {
        LaurentPoly::one()
    }
    fn from_laurent(_: &(), p: &LaurentPoly) -> Self {
        p.clone()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        let (s, k) = self.as_unit()?;
        Some(LaurentPoly::monomial(s as i64, -k))
    }
}

impl Scalar for RatFunc {
    type Ctx = ();
    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        RatFunc::zero()
    }
    fn one(_: &()) -> Self {
        RatFunc::one()
    }
    fn from_laurent(_: &(), p: &LaurentPoly) -> Self {
        RatFunc::from_laurent(p.clone())
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl Scalar for CycScalar {
    type Ctx = CycCtx;
    fn ctx(&self) -> CycCtx {
        CycScalar::ctx(self)
    }
    fn zero(ctx: &CycCtx) -> Self {
        CycScalar::zero(*ctx)
    }
    fn one(ctx: &CycCtx) -> Self {
        CycScalar::one(*ctx)
    }
    fn from_laurent(ctx: &CycCtx, p: &LaurentPoly) -> Self {
        CycScalar::from_laurent(*ctx, p)
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        CycScalar::add(self, other)
    }
    fn neg(&self) -> Self {
        CycScalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        CycScalar::mul(self, other)
    }
    fn inv(&self) -> Option<Self> {
        CycScalar::inv(self)
    }
}

impl Scalar for MultiLaurent {
    type Ctx = usize;
    fn ctx(&self) -> usize {
        self.nvars()
    }
    fn zero(n: &usize) -> Self {
        MultiLaurent::zero(*n)
    }
    fn one(n: &usize) -> Self {
        MultiLaurent::one(*n)
    }
    fn from_laurent(n: &usize, p: &LaurentPoly) -> Self {
        MultiLaurent::from_laurent(*n, p)
    }
    fn is_zero(&self) -> bool {
        MultiLaurent::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiLaurent::add(self, other)
    }
    fn neg(&self) -> Self {
        MultiLaurent::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiLaurent::mul(self, other)
    }
    fn inv(&self) -> Option<Self> {
        MultiLaurent::inv(self)
    }
}
