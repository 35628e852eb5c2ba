//! The form `kappa(y h x, y' k_{2 lambda} x') = tau(x, y') tau(x', S^2 y) chi_{-lambda}(h)`
//! and the adjoint action.
//!
//! Both arguments are read off the triangular normal form: a term
//! `f-word * k_mu * e-word` is rewritten as `y = (f-word) k_beta`, with
//! `beta` the weight of the `f`-word, so that `y` lies in `S(U(n-))`, and
//! `h = k_{mu - beta}`.

use super::tau::{Order, Tau};
use super::uelem::{divided_scale, Mono, UElem};
use super::word::{Atom, UWord};
use crate::error::{Error, Result};
use crate::ring::RatFunc;
use crate::rootdata::{RootDatum, Weight};

struct Split {
    /// `(f-word) k_beta`
    y: UWord,
    /// `(alpha, alpha)` summed over the `f`-word, so `S^2 y = q^s2 y`
    s2: i64,
    h: Weight,
    x: UWord,
}

fn split(rd: &RootDatum, m: &Mono) -> Result<Split> {
    let beta = m
        .fs
        .iter()
        .fold(Weight::zero(rd.rank()), |a, &i| a.add(&rd.simple_root(i)));
    let mut y_atoms: Vec<Atom> = m.fs.iter().map(|&i| Atom::F(i, 1)).collect();
    if !beta.is_zero() {
        y_atoms.push(Atom::K(beta.clone()));
    }
    let s2: i64 = m.fs.iter().map(|&i| 2 * rd.d()[i]).sum();
    Ok(Split {
        y: UWord::new(y_atoms),
        s2,
        h: m.k.sub(&beta),
        x: UWord::e_word(&m.es),
    })
}

/// `kappa(v, u)` for `v` in `U^L` and `u` in `eU` (middle Cartan part in `2P`).
pub fn kappa(rd: &RootDatum, v: &UElem, u: &UElem) -> Result<RatFunc> {
    let mut tau = Tau::new(rd, Order::SplitMinusFirst);
    let mut acc = RatFunc::zero();
    for (mu, cu) in u.terms() {
        let su = split(rd, mu)?;
        if su.h.0.iter().any(|c| c % 2 != 0) {
            return Err(Error::Invalid(format!(
                "[{}] has Cartan part k{} outside 2P",
                mu.to_word(),
                su.h
            )));
        }
        let lambda = Weight(su.h.0.iter().map(|c| c / 2).collect());
        for (mv, cv) in v.terms() {
            let sv = split(rd, mv)?;
            let a = tau.eval(&sv.x, &su.y)?;
            if a.is_zero() {
                continue;
            }
            let b = tau.eval(&su.x, &sv.y)?;
            if b.is_zero() {
                continue;
            }
            let chi = rd.form_exact(&lambda, &sv.h)?;
            let scalar = RatFunc::q_pow(sv.s2 - chi);
            acc = &acc + &(&(&(cu * cv) * &(&a * &b)) * &scalar);
        }
    }
    Ok(acc)
}

/// [`kappa`] on words.
pub fn kappa_words(rd: &RootDatum, v: &UWord, u: &UWord) -> Result<RatFunc> {
    kappa(rd, &UElem::from_word(rd, v)?, &UElem::from_word(rd, u)?)
}

/// `<j(u), v> = kappa(v, u)` for each probe `v`.
pub fn jmath_eval(rd: &RootDatum, u: &UElem, probes: &[UElem]) -> Result<Vec<RatFunc>> {
    probes.iter().map(|v| kappa(rd, v, u)).collect()
}

fn ad_generator(rd: &RootDatum, a: &Atom, v: &UElem) -> Result<UElem> {
    let word = |atoms: Vec<Atom>| UElem::from_word(rd, &UWord::new(atoms));
    match a {
        Atom::K(mu) => word(vec![Atom::K(mu.clone())])?
            .mul(rd, v)?
            .mul(rd, &word(vec![Atom::K(mu.neg())])?),
        Atom::E(i, n) => {
            // ad(e)(v) = e v - k v k^-1 e
            let ai = rd.simple_root(*i);
            let e = word(vec![Atom::E(*i, 1)])?;
            let k = word(vec![Atom::K(ai.clone())])?;
            let kinv_e = word(vec![Atom::K(ai.neg()), Atom::E(*i, 1)])?;
            let mut cur = v.clone();
            for _ in 0..*n {
                let t1 = e.mul(rd, &cur)?;
                let t2 = k.mul(rd, &cur)?.mul(rd, &kinv_e)?;
                cur = t1.sub(&t2);
            }
            Ok(cur.scale(&divided_scale(rd, *i, *n)))
        }
        Atom::F(i, n) => {
            // ad(f)(v) = f v k - v f k
            let ai = rd.simple_root(*i);
            let f = word(vec![Atom::F(*i, 1)])?;
            let k = word(vec![Atom::K(ai.clone())])?;
            let fk = word(vec![Atom::F(*i, 1), Atom::K(ai)])?;
            let mut cur = v.clone();
            for _ in 0..*n {
                let t1 = f.mul(rd, &cur)?.mul(rd, &k)?;
                let t2 = cur.mul(rd, &fk)?;
                cur = t1.sub(&t2);
            }
            Ok(cur.scale(&divided_scale(rd, *i, *n)))
        }
    }
}

/// The adjoint action `ad(z)(v) = sum z_(1) v S(z_(2))`.
pub fn ad(rd: &RootDatum, z: &UElem, v: &UElem) -> Result<UElem> {
    let mut out = UElem::zero(rd.rank());
    for (m, c) in z.terms() {
        let mut cur = v.clone();
        for a in m.to_word().atoms.iter().rev() {
            cur = ad_generator(rd, a, &cur)?;
        }
        out = out.add(&cur.scale(c));
    }
    Ok(out)
}

/// `ad(S z)(v)`.
pub fn ad_antipode(rd: &RootDatum, z: &UElem, v: &UElem) -> Result<UElem> {
    ad(rd, &z.antipode(rd)?, v)
}
