//! Elements of `U` in triangular normal form `sum c * (f-word) k_mu (e-word)`.
//!
//! The `f`- and `e`-words are kept free (no Serre reduction); only the
//! Cartan commutations and the `e_i f_j` exchange are applied. This is
//! enough for the pairing identities, which are insensitive to the Serre
//! ideal.

use std::collections::BTreeMap;
use std::fmt;

use super::word::{Atom, UWord};
use crate::error::Result;
use crate::ring::{q_minus_qinv, quantum_factorial, RatFunc};
use crate::rootdata::{RootDatum, Weight};

/// `f_{fs[0]} f_{fs[1]} ... k_k e_{es[0]} e_{es[1]} ...`
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    pub fs: Vec<usize>,
    pub k: Weight,
    pub es: Vec<usize>,
}

impl Mono {
    pub fn to_word(&self) -> UWord {
        let mut atoms: Vec<Atom> = self.fs.iter().map(|&i| Atom::F(i, 1)).collect();
        if !self.k.is_zero() {
            atoms.push(Atom::K(self.k.clone()));
        }
        atoms.extend(self.es.iter().map(|&i| Atom::E(i, 1)));
        UWord::new(atoms)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct UElem {
    rank: usize,
    terms: BTreeMap<Mono, RatFunc>,
}

fn root_sum(rd: &RootDatum, idx: &[usize]) -> Weight {
    idx.iter()
        .fold(Weight::zero(rd.rank()), |acc, &i| acc.add(&rd.simple_root(i)))
}

impl UElem {
    pub fn zero(rank: usize) -> Self {
        UElem {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::mono(
            Mono {
                fs: vec![],
                k: Weight::zero(rank),
                es: vec![],
            },
            RatFunc::one(),
        )
    }

    pub fn mono(m: Mono, c: RatFunc) -> Self {
        let mut out = UElem::zero(m.k.rank());
        out.add_term(m, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Mono, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn add(&self, o: &UElem) -> UElem {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &RatFunc) -> UElem {
        let mut out = UElem::zero(self.rank);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn sub(&self, o: &UElem) -> UElem {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    /// Normal form of a word.
    pub fn from_word(rd: &RootDatum, w: &UWord) -> Result<UElem> {
        w.validate(rd)?;
        UElem::one(rd.rank()).mul_word(rd, w)
    }

    pub fn mul_word(&self, rd: &RootDatum, w: &UWord) -> Result<UElem> {
        let (c, atoms) = w.expand_divided(rd);
        let mut acc = self.scale(&c);
        for a in &atoms {
            acc = acc.mul_atom(rd, a)?;
        }
        Ok(acc)
    }

    /// `self * atom` for a plain (non-divided) atom.
    fn mul_atom(&self, rd: &RootDatum, atom: &Atom) -> Result<UElem> {
        let mut out = UElem::zero(self.rank);
        for (m, c) in &self.terms {
            match atom {
                Atom::E(i, _) => {
                    let mut m2 = m.clone();
                    m2.es.push(*i);
                    out.add_term(m2, c.clone());
                }
                Atom::K(mu) => {
                    // e-word k_mu = q^{-(wt, mu)} k_mu e-word
                    let e = rd.form_exact(&root_sum(rd, &m.es), mu)?;
                    let mut m2 = m.clone();
                    m2.k = m2.k.add(mu);
                    out.add_term(m2, c * &RatFunc::q_pow(-e));
                }
                Atom::F(j, _) => {
                    let aj = rd.simple_root(*j);
                    // f_j moves left through the e-word, then past k
                    let e = rd.form_exact(&aj, &m.k)?;
                    let mut m2 = m.clone();
                    m2.fs.push(*j);
                    out.add_term(m2, c * &RatFunc::q_pow(-e));
                    let denom = RatFunc::from_laurent(q_minus_qinv(rd.d_i(*j)));
                    for p in 0..m.es.len() {
                        if m.es[p] != *j {
                            continue;
                        }
                        let prefix = root_sum(rd, &m.es[..p]);
                        let mut rest = m.es.clone();
                        rest.remove(p);
                        for sign in [1i64, -1] {
                            let kj = aj.scale(sign);
                            let e = rd.form_exact(&prefix, &kj)?;
                            let coef = &(c * &RatFunc::q_pow(-e)) / &denom;
                            let coef = if sign > 0 { coef } else { -coef };
                            out.add_term(
                                Mono {
                                    fs: m.fs.clone(),
                                    k: m.k.add(&kj),
                                    es: rest.clone(),
                                },
                                coef,
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rd: &RootDatum, o: &UElem) -> Result<UElem> {
        let mut out = UElem::zero(self.rank);
        for (m, c) in &o.terms {
            out = out.add(&self.mul_word(rd, &m.to_word())?.scale(c));
        }
        Ok(out)
    }

    /// The antipode: `S(k) = k^-1`, `S(e_i) = -k_i^-1 e_i`, `S(f_i) = -f_i k_i`.
    pub fn antipode(&self, rd: &RootDatum) -> Result<UElem> {
        let mut out = UElem::zero(self.rank);
        for (m, c) in &self.terms {
            let mut acc = UElem::one(self.rank);
            // S reverses products
            for a in m.to_word().atoms.iter().rev() {
                acc = acc.mul(rd, &antipode_atom(rd, a)?)?;
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }
}

fn antipode_atom(rd: &RootDatum, a: &Atom) -> Result<UElem> {
    let minus = RatFunc::from_int(-1);
    match a {
        Atom::K(w) => UElem::from_word(rd, &UWord::k(w.neg())),
        Atom::E(i, n) => {
            let mut acc = UElem::one(rd.rank());
            let s = UElem::from_word(rd, &UWord::new(vec![Atom::K(rd.simple_root(*i).neg()), Atom::E(*i, 1)]))?
                .scale(&minus);
            for _ in 0..*n {
                acc = acc.mul(rd, &s)?;
            }
            Ok(acc.scale(&divided_scale(rd, *i, *n)))
        }
        Atom::F(i, n) => {
            let mut acc = UElem::one(rd.rank());
            let s = UElem::from_word(rd, &UWord::new(vec![Atom::F(*i, 1), Atom::K(rd.simple_root(*i))]))?
                .scale(&minus);
            for _ in 0..*n {
                acc = acc.mul(rd, &s)?;
            }
            Ok(acc.scale(&divided_scale(rd, *i, *n)))
        }
    }
}

pub(crate) fn divided_scale(rd: &RootDatum, i: usize, n: u32) -> RatFunc {
    let f = RatFunc::from_laurent(quantum_factorial(n, rd.d_i(i)));
    &RatFunc::one() / &f
}

impl fmt::Display for UElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*[{}]", c, m.to_word())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::quantum_int;

    fn word(s: &str) -> UWord {
        s.parse().unwrap()
    }

    #[test]
    fn ef_commutator() {
        let rd = RootDatum::of("A1").unwrap();
        let ef = UElem::from_word(&rd, &word("E1 F1")).unwrap();
        let fe = UElem::from_word(&rd, &word("F1 E1")).unwrap();
        let diff = ef.sub(&fe);
        let a = rd.simple_root(0);
        let d = RatFunc::from_laurent(q_minus_qinv(1));
        let expect = UElem::from_word(&rd, &UWord::k(a.clone()))
            .unwrap()
            .sub(&UElem::from_word(&rd, &UWord::k(a.neg())).unwrap())
            .scale(&(&RatFunc::one() / &d));
        assert_eq!(diff, expect);
    }

    #[test]
    fn k_commutation() {
        let rd = RootDatum::of("A2").unwrap();
        let g = rd.simple_root(0);
        let ke = UElem::from_word(&rd, &UWord::new(vec![Atom::K(g.clone()), Atom::E(1, 1)])).unwrap();
        let ek = UElem::from_word(&rd, &UWord::new(vec![Atom::E(1, 1), Atom::K(g.clone())])).unwrap();
        // k_g e_2 = q^{(alpha_2, g)} e_2 k_g, and (alpha_2, alpha_1) = -1
        assert_eq!(ke, ek.scale(&RatFunc::q_pow(-1)));
    }

    #[test]
    fn antipode_squared_on_generators() {
        let rd = RootDatum::of("B2").unwrap();
        for i in 0..2 {
            let qi2 = RatFunc::q_pow(2 * rd.d()[i]);
            let f = UElem::from_word(&rd, &UWord::f(i)).unwrap();
            assert_eq!(f.antipode(&rd).unwrap().antipode(&rd).unwrap(), f.scale(&qi2));
            let e = UElem::from_word(&rd, &UWord::e(i)).unwrap();
            let inv = &RatFunc::one() / &qi2;
            assert_eq!(e.antipode(&rd).unwrap().antipode(&rd).unwrap(), e.scale(&inv));
        }
    }

    #[test]
    fn antipode_is_antimultiplicative() {
        let rd = RootDatum::of("A2").unwrap();
        let a = UElem::from_word(&rd, &word("E1 F2 K[1,0]")).unwrap();
        let b = UElem::from_word(&rd, &word("F1 E2 E1")).unwrap();
        let lhs = a.mul(&rd, &b).unwrap().antipode(&rd).unwrap();
        let rhs = b.antipode(&rd).unwrap().mul(&rd, &a.antipode(&rd).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_powers_scale() {
        let rd = RootDatum::of("A1").unwrap();
        let d = UElem::from_word(&rd, &word("F1^(2)")).unwrap();
        let p = UElem::from_word(&rd, &word("F1 F1")).unwrap();
        assert_eq!(d.scale(&RatFunc::from_laurent(quantum_int(2, 1))), p);
    }
}
