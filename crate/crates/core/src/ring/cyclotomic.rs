//! Cyclotomic polynomials and the quotient rings `Z[x]/(Phi_n(x))`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;

fn memo() -> &'static Mutex<HashMap<u64, LaurentPoly>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, LaurentPoly>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, computed as
/// `(q^n - 1) / prod_{d | n, d < n} Phi_d(q)` and memoized.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = memo().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = LaurentPoly::from_terms([(n as i64, 1), (0, -1)]);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic(d);
            num = num
                .div_exact(&phi_d)
                .expect("Phi_d divides q^n - 1 for d | n");
        }
    }
    memo().lock().unwrap().insert(n, num.clone());
    num
}

/// Euler's totient, i.e. `deg Phi_n`.
pub fn totient(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// If `n = p^k` with `p` prime and `k >= 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > n {
        return Some((n, 1));
    }
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Ring context for [`CycScalar`]: the ring `Z[x]/(Phi_order(x))` viewed as a
/// `Z[q, q^-1]`-algebra through `q -> x^q_step`.
///
/// With `q_step = 1` this is `Z[zeta_n]` with `q` sent to `zeta_n`. The ring
/// `Z[zeta_{lm}]` with `q -> zeta_l` is `CycCtx::new(l*m, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycCtx {
    pub order: u64,
    pub q_step: u64,
}

impl CycCtx {
    pub fn new(order: u64, q_step: u64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        CycCtx { order, q_step }
    }

    /// `Z[zeta_l]` with `q -> zeta_l`.
    pub fn level(l: u64) -> Self {
        Self::new(l, 1)
    }

    /// The order of `q` in this ring.
    pub fn q_order(&self) -> u64 {
        self.order / self.order.gcd(&self.q_step)
    }
}

/// An element of `Z[x]/(Phi_n(x))`, stored as its reduced residue.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    residue: LaurentPoly,
    ctx: CycCtx,
}

impl CycScalar {
    /// Reduces an arbitrary Laurent polynomial in the generator `x`.
    pub fn from_generator_poly(ctx: CycCtx, p: &LaurentPoly) -> Self {
        let n = ctx.order as i64;
        // x^n = 1, so fold every exponent into [0, n) first
        let folded = LaurentPoly::from_terms(p.terms().map(|(e, c)| (e.rem_euclid(n), c.clone())));
        let residue = folded.rem_monic(&cyclotomic(ctx.order));
        CycScalar { residue, ctx }
    }

    /// Image of an element of `Z[q, q^-1]` under `q -> x^q_step`.
    pub fn from_laurent(ctx: CycCtx, p: &LaurentPoly) -> Self {
        Self::from_generator_poly(ctx, &p.substitute_power(ctx.q_step as i64))
    }

    /// The class of `x^k`.
    pub fn generator_pow(ctx: CycCtx, k: i64) -> Self {
        Self::from_generator_poly(ctx, &LaurentPoly::q_pow(k))
    }

    pub fn zero(ctx: CycCtx) -> Self {
        CycScalar {
            residue: LaurentPoly::zero(),
            ctx,
        }
    }

    pub fn one(ctx: CycCtx) -> Self {
        Self::from_generator_poly(ctx, &LaurentPoly::one())
    }

    pub fn ctx(&self) -> CycCtx {
        self.ctx
    }

    pub fn residue(&self) -> &LaurentPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    fn check_ctx(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "mixed cyclotomic rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ctx(other);
        CycScalar {
            residue: &self.residue + &other.residue,
            ctx: self.ctx,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ctx(other);
        CycScalar {
            residue: &self.residue - &other.residue,
            ctx: self.ctx,
        }
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            residue: -&self.residue,
            ctx: self.ctx,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ctx(other);
        Self::from_generator_poly(self.ctx, &(&self.residue * &other.residue))
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative order if this is a root of unity.
    ///
    /// Roots of unity in `Q(zeta_n)` have order dividing `lcm(2, n)`, so the
    /// search is bounded.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = self.ctx.order.lcm(&2);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Inverse in `Z[x]/(Phi_n)`, if it exists.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(k) = self.multiplicative_order() {
            return Some(self.pow(k - 1));
        }
        let phi = to_dense(&cyclotomic(self.ctx.order));
        let a = to_dense(&self.residue);
        let (g, s) = ext_gcd_left(&a, &phi);
        // g is a nonzero constant iff self is invertible in Q(zeta_n)
        if g.len() != 1 {
            return None;
        }
        let g0 = g[0].clone();
        let mut terms = Vec::new();
        for (e, c) in s.iter().enumerate() {
            let c = c / &g0;
            if !c.is_integer() {
                return None;
            }
            terms.push((e as i64, c.to_integer()));
        }
        let inv = Self::from_generator_poly(self.ctx, &LaurentPoly::from_terms(terms));
        debug_assert!(inv.mul(self).is_one());
        Some(inv)
    }

    /// The composite `Z[zeta] -> Z[zeta]/(zeta - 1) = Z/(Phi_n(1))`.
    ///
    /// Returns the least nonnegative representative; the modulus is
    /// `Phi_n(1)`, which is `p` for `n = p^k` and `1` otherwise (so every
    /// class is `0`).
    pub fn specialize_at_one(&self) -> BigInt {
        let m = cyclotomic(self.ctx.order).eval_one();
        self.residue.eval_one().mod_floor(&m)
    }
}

fn to_dense(p: &LaurentPoly) -> Vec<BigRational> {
    let deg = p.max_exp().unwrap_or(0).max(0) as usize;
    let mut v = vec![BigRational::zero(); deg + 1];
    for (e, c) in p.terms() {
        assert!(e >= 0, "dense conversion expects an ordinary polynomial");
        v[e as usize] = BigRational::from_integer(c.clone());
    }
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn is_zero_poly(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

fn poly_sub_mul(a: &[BigRational], b: &[BigRational], c: &BigRational, shift: usize) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i + shift] -= bi * c;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db).max(1)];
    while !is_zero_poly(&rem) && rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        quot[shift] = c.clone();
        rem = poly_sub_mul(&rem, b, &c, shift);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `s*a = g (mod b)`, `g = gcd(a, b)` over `Q`.
fn ext_gcd_left(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = vec![BigRational::one()];
    let mut s1 = vec![BigRational::zero()];
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs = poly_mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (i, c) in qs.iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[{}; {}]", self.ctx.order, self)
    }
}

/// Renders the residue in the generator `x`, e.g. `x^3 - x + 1`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.residue.to_string();
        write!(f, "{}", s.replace('q', "x"))
    }
}
