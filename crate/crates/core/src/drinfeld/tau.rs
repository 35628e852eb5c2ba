//! The Drinfeld pairing `tau: U(b+) x U(b-) -> Q(q)` on free words.
//!
//! Determined by
//!
//! ```text
//! tau(x, y1 y2) = sum tau(x_(1), y1) tau(x_(2), y2)
//! tau(x1 x2, y) = sum tau(x2, y_(1)) tau(x1, y_(2))
//! tau(k_l, k_m) = q^{-(l,m)},  tau(k, f_i) = tau(e_i, k) = 0
//! tau(e_i, f_j) = -delta_ij / (q_i - q_i^-1)
//! ```
//!
//! with `De_i = e_i (x) 1 + k_i (x) e_i` and `Df_i = f_i (x) k_i^-1 + 1 (x) f_i`.

use std::collections::HashMap;

use super::word::{Atom, Side, UPoly, UWord};
use crate::error::{Error, Result};
use crate::ring::{q_minus_qinv, RatFunc};
use crate::rootdata::{RootDatum, Weight};

/// Which factor the recursion splits while both have length at least two.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    SplitMinusFirst,
    SplitPlusFirst,
}

/// Atom of a plain-power word: `K(lambda)` or a generator `e_i` / `f_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum A {
    K(Weight),
    G(usize),
}

type Word = Vec<A>;

/// Merges adjacent `K` atoms and drops `k_0`.
fn normalize(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for a in word {
        match (out.last_mut(), a) {
            (Some(A::K(prev)), A::K(w)) => {
                *prev = prev.add(&w);
                if prev.is_zero() {
                    out.pop();
                }
            }
            (_, A::K(w)) if w.is_zero() => {}
            (_, a) => out.push(a),
        }
    }
    out
}

pub struct Tau<'a> {
    rd: &'a RootDatum,
    order: Order,
    prune: bool,
    memo: HashMap<(Word, Word), RatFunc>,
}

impl<'a> Tau<'a> {
    pub fn new(rd: &'a RootDatum, order: Order) -> Self {
        Tau {
            rd,
            order,
            prune: true,
            memo: HashMap::new(),
        }
    }

    /// Disables the grading shortcut, so orthogonality comes out of the recursion itself.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    fn lower(&self, w: &UWord, side: Side) -> Result<(RatFunc, Word)> {
        w.validate(self.rd)?;
        match w.side() {
            Some(s) if s == side => {}
            _ if w.atoms.iter().all(|a| matches!(a, Atom::K(_))) => {}
            _ => {
                return Err(Error::Invalid(format!(
                    "word {} is not on the {} side",
                    w,
                    if side == Side::Plus { "plus" } else { "minus" }
                )))
            }
        }
        let (c, atoms) = w.expand_divided(self.rd);
        let word = atoms
            .into_iter()
            .map(|a| match a {
                Atom::K(w) => A::K(w),
                Atom::E(i, _) | Atom::F(i, _) => A::G(i),
            })
            .collect();
        Ok((c, normalize(word)))
    }

    /// `tau(x, y)` for `x` in `U(b+)` and `y` in `U(b-)`.
    pub fn eval(&mut self, x: &UWord, y: &UWord) -> Result<RatFunc> {
        let (cx, wx) = self.lower(x, Side::Plus)?;
        let (cy, wy) = self.lower(y, Side::Minus)?;
        let v = self.rec(wx, wy)?;
        Ok(&(&cx * &cy) * &v)
    }

    pub fn eval_poly(&mut self, x: &UPoly, y: &UPoly) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (a, u) in &x.terms {
            for (b, v) in &y.terms {
                let t = self.eval(u, v)?;
                if !t.is_zero() {
                    acc = &acc + &(&(a * b) * &t);
                }
            }
        }
        Ok(acc)
    }

    fn simple_k(&self, i: usize, sign: i64) -> A {
        A::K(self.rd.simple_root(i).scale(sign))
    }

    /// `Delta(x)` for a plus word, as pairs of words.
    fn coproduct_plus(&self, x: &[A]) -> Vec<(Word, Word)> {
        let mut acc: Vec<(Word, Word)> = vec![(Vec::new(), Vec::new())];
        for a in x {
            let mut next = Vec::with_capacity(acc.len() * 2);
            for (l, r) in acc {
                match a {
                    A::K(_) => {
                        let (mut l, mut r) = (l, r);
                        l.push(a.clone());
                        r.push(a.clone());
                        next.push((l, r));
                    }
                    A::G(i) => {
                        let (mut l1, r1) = (l.clone(), r.clone());
                        l1.push(A::G(*i));
                        next.push((l1, r1));
                        let (mut l2, mut r2) = (l, r);
                        l2.push(self.simple_k(*i, 1));
                        r2.push(A::G(*i));
                        next.push((l2, r2));
                    }
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(l, r)| (normalize(l), normalize(r)))
            .collect()
    }

    /// `Delta(y)` for a minus word.
    fn coproduct_minus(&self, y: &[A]) -> Vec<(Word, Word)> {
        let mut acc: Vec<(Word, Word)> = vec![(Vec::new(), Vec::new())];
        for a in y {
            let mut next = Vec::with_capacity(acc.len() * 2);
            for (l, r) in acc {
                match a {
                    A::K(_) => {
                        let (mut l, mut r) = (l, r);
                        l.push(a.clone());
                        r.push(a.clone());
                        next.push((l, r));
                    }
                    A::G(i) => {
                        let (mut l1, mut r1) = (l.clone(), r.clone());
                        l1.push(A::G(*i));
                        r1.push(self.simple_k(*i, -1));
                        next.push((l1, r1));
                        let (l2, mut r2) = (l, r);
                        r2.push(A::G(*i));
                        next.push((l2, r2));
                    }
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|(l, r)| (normalize(l), normalize(r)))
            .collect()
    }

    fn content(&self, w: &[A]) -> Vec<i64> {
        let mut g = vec![0i64; self.rd.rank()];
        for a in w {
            if let A::G(i) = a {
                g[*i] += 1;
            }
        }
        g
    }

    fn base(&self, x: &A, y: &A) -> Result<RatFunc> {
        Ok(match (x, y) {
            (A::K(l), A::K(m)) => RatFunc::q_pow(-self.rd.form_exact(l, m)?),
            (A::K(_), A::G(_)) | (A::G(_), A::K(_)) => RatFunc::zero(),
            (A::G(i), A::G(j)) => {
                if i == j {
                    let d = RatFunc::from_laurent(q_minus_qinv(self.rd.d_i(*i)));
                    -(&RatFunc::one() / &d)
                } else {
                    RatFunc::zero()
                }
            }
        })
    }

    fn counit(w: &[A]) -> RatFunc {
        if w.iter().any(|a| matches!(a, A::G(_))) {
            RatFunc::zero()
        } else {
            RatFunc::one()
        }
    }

    fn rec(&mut self, x: Word, y: Word) -> Result<RatFunc> {
        if y.is_empty() {
            return Ok(Self::counit(&x));
        }
        if x.is_empty() {
            return Ok(Self::counit(&y));
        }
        if self.prune && self.content(&x) != self.content(&y) {
            return Ok(RatFunc::zero());
        }
        if x.len() == 1 && y.len() == 1 {
            return self.base(&x[0], &y[0]);
        }
        let key = (x, y);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let (x, y) = &key;
        let split_minus = match self.order {
            Order::SplitMinusFirst => y.len() >= 2,
            Order::SplitPlusFirst => x.len() < 2,
        };
        let mut acc = RatFunc::zero();
        if split_minus {
            // tau(x, y0 rest) = sum tau(x_(1), y0) tau(x_(2), rest)
            let y0 = vec![y[0].clone()];
            let rest: Word = y[1..].to_vec();
            for (x1, x2) in self.coproduct_plus(x) {
                let a = self.rec(x1, y0.clone())?;
                if a.is_zero() {
                    continue;
                }
                let b = self.rec(x2, rest.clone())?;
                acc = &acc + &(&a * &b);
            }
        } else {
            // tau(init last, y) = sum tau(last, y_(1)) tau(init, y_(2))
            let last = vec![x[x.len() - 1].clone()];
            let init: Word = x[..x.len() - 1].to_vec();
            for (y1, y2) in self.coproduct_minus(y) {
                let a = self.rec(last.clone(), y1)?;
                if a.is_zero() {
                    continue;
                }
                let b = self.rec(init.clone(), y2)?;
                acc = &acc + &(&a * &b);
            }
        }
        self.memo.insert(key.clone(), acc.clone());
        Ok(acc)
    }
}

/// `tau(x, y)` with the default recursion order.
pub fn tau(rd: &RootDatum, x: &UWord, y: &UWord) -> Result<RatFunc> {
    Tau::new(rd, Order::SplitMinusFirst).eval(x, y)
}

/// The quantum Serre element for `(i, j)`, `i != j`, on the given side:
/// `sum_n (-1)^n g_i^{(1-a_ij-n)} g_j g_i^{(n)}`.
pub fn serre_element(rd: &RootDatum, i: usize, j: usize, side: Side) -> Result<UPoly> {
    if i == j || i >= rd.rank() || j >= rd.rank() {
        return Err(Error::Invalid(format!("bad Serre pair ({}, {})", i + 1, j + 1)));
    }
    let m = (1 - rd.cartan()[i][j]) as u32;
    let gen = |k: usize, n: u32| match side {
        Side::Plus => Atom::E(k, n),
        Side::Minus => Atom::F(k, n),
    };
    let mut p = UPoly::zero();
    for n in 0..=m {
        let mut atoms = Vec::new();
        if m - n > 0 {
            atoms.push(gen(i, m - n));
        }
        atoms.push(gen(j, 1));
        if n > 0 {
            atoms.push(gen(i, n));
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        p.push(RatFunc::from_int(sign), UWord::new(atoms));
    }
    Ok(p)
}

/// All generator words (one side) of a given grading, in lexicographic order.
pub fn words_of_grading(grading: &[i64], side: Side) -> Vec<UWord> {
    let mut out = Vec::new();
    let mut left = grading.to_vec();
    let total: i64 = grading.iter().sum();
    let mut cur = Vec::new();
    fn rec(left: &mut [i64], remaining: i64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                cur.push(i);
                rec(left, remaining - 1, cur, out);
                cur.pop();
                left[i] += 1;
            }
        }
    }
    rec(&mut left, total, &mut cur, &mut out);
    out.into_iter()
        .map(|idx| match side {
            Side::Plus => UWord::e_word(&idx),
            Side::Minus => UWord::f_word(&idx),
        })
        .collect()
}

/// All gradings in `Q^+` of exact height `h`.
pub fn gradings_of_height(rank: usize, h: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if rank > 0 {
        rec(0, h, &mut cur, &mut out);
    }
    out
}

/// Checks that the Serre element for `(i, j)`, padded on both sides by every
/// generator word with total height up to `max_height`, pairs to zero with
/// every opposite-side word of the same grading (and with `k_{alpha_1}` in
/// front, to exercise the Cartan part).
pub fn serre_certificate(
    rd: &RootDatum,
    i: usize,
    j: usize,
    side: Side,
    max_height: i64,
) -> Result<bool> {
    let serre = serre_element(rd, i, j, side)?;
    let base_height = 2 - rd.cartan()[i][j];
    let opposite = match side {
        Side::Plus => Side::Minus,
        Side::Minus => Side::Plus,
    };
    let rank = rd.rank();
    let mut engine_a = Tau::new(rd, Order::SplitMinusFirst);
    let mut engine_b = Tau::new(rd, Order::SplitPlusFirst);
    let k1 = UWord::k(rd.simple_root(0));
    for extra in 0..=(max_height - base_height).max(0) {
        for pad in gradings_of_height(rank, extra) {
            for pad_word in words_of_grading(&pad, side) {
                // split the padding word at every position into left and right parts
                for cut in 0..=pad_word.atoms.len() {
                    let left = UWord::new(pad_word.atoms[..cut].to_vec());
                    let right = UWord::new(pad_word.atoms[cut..].to_vec());
                    let elem = serre.padded(&left, &right);
                    let mut grading = serre.terms[0].1.grading(rank);
                    for (g, p) in grading.iter_mut().zip(&pad) {
                        *g = g.abs() + p;
                    }
                    for m in words_of_grading(&grading, opposite) {
                        for probe in [m.clone(), k1.concat(&m)] {
                            let probe = UPoly::word(probe);
                            let (va, vb) = match side {
                                Side::Plus => (
                                    engine_a.eval_poly(&elem, &probe)?,
                                    engine_b.eval_poly(&elem, &probe)?,
                                ),
                                Side::Minus => (
                                    engine_a.eval_poly(&probe, &elem)?,
                                    engine_b.eval_poly(&probe, &elem)?,
                                ),
                            };
                            if !va.is_zero() || !vb.is_zero() {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn generator_values() {
        let rd = RootDatum::of("B2").unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let v = tau(&rd, &UWord::e(i), &UWord::f(j)).unwrap();
                if i == j {
                    let d = RatFunc::from_laurent(q_minus_qinv(rd.d_i(i)));
                    assert_eq!(&v * &d, RatFunc::from_int(-1));
                } else {
                    assert!(v.is_zero());
                }
            }
        }
        let a = rd.simple_root(0);
        let b = rd.simple_root(1);
        // (alpha_1, alpha_2) = -2 in B2 with the long root first
        assert_eq!(tau(&rd, &UWord::k(a.clone()), &UWord::k(b)).unwrap(), RatFunc::q_pow(2));
        assert_eq!(tau(&rd, &UWord::k(a.clone()), &UWord::f(0)).unwrap(), RatFunc::zero());
        assert_eq!(tau(&rd, &UWord::e(0), &UWord::k(a)).unwrap(), RatFunc::zero());
    }

    #[test]
    fn fractional_exponent_is_an_error() {
        let rd = RootDatum::of("A1").unwrap();
        let r = tau(&rd, &UWord::k(w(&[1])), &UWord::k(w(&[1])));
        assert!(matches!(r, Err(Error::FractionalExponent(_))));
    }

    #[test]
    fn wrong_side_rejected() {
        let rd = RootDatum::of("A1").unwrap();
        assert!(tau(&rd, &UWord::f(0), &UWord::f(0)).is_err());
        assert!(tau(&rd, &UWord::e(0), &UWord::e(0)).is_err());
    }

    #[test]
    fn ee_ff_orders_agree() {
        let rd = RootDatum::of("A1").unwrap();
        let x = UWord::e_word(&[0, 0]);
        let y = UWord::f_word(&[0, 0]);
        let a = Tau::new(&rd, Order::SplitMinusFirst).eval(&x, &y).unwrap();
        let b = Tau::new(&rd, Order::SplitPlusFirst).eval(&x, &y).unwrap();
        assert_eq!(a, b);
        // divided powers differ from plain ones by [2]! on each side
        let xd = UWord::new(vec![Atom::E(0, 2)]);
        let yd = UWord::new(vec![Atom::F(0, 2)]);
        let c = tau(&rd, &xd, &yd).unwrap();
        let two = RatFunc::from_laurent(crate::ring::quantum_int(2, 1));
        assert_eq!(&(&two * &two) * &c, a);
    }

    #[test]
    fn serre_small_cases() {
        let a2 = RootDatum::of("A2").unwrap();
        assert!(serre_certificate(&a2, 0, 1, Side::Plus, 3).unwrap());
        assert!(serre_certificate(&a2, 1, 0, Side::Minus, 3).unwrap());
        let b2 = RootDatum::of("B2").unwrap();
        let (i, j) = if b2.cartan()[0][1] == -2 { (0, 1) } else { (1, 0) };
        assert!(serre_certificate(&b2, i, j, Side::Plus, 4).unwrap());
    }

    #[test]
    fn non_serre_element_is_detected() {
        // e1 e1 e2 alone is not in the radical
        let rd = RootDatum::of("A2").unwrap();
        let x = UWord::e_word(&[0, 0, 1]);
        let y = UWord::f_word(&[0, 0, 1]);
        assert!(!tau(&rd, &x, &y).unwrap().is_zero());
    }
}
