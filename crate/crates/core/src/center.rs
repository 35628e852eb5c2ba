//! Harish-Chandra central characters, regularity, the admissibility
//! conditions (a1)-(a5) on the level, and toral data `h0` for the
//! Frobenius side.

use std::fmt;

use num_integer::Integer;

use crate::charring::{bullet_orbit, is_bullet_invariant, PChar, TorusPoint};
use crate::error::{Error, Result};
use crate::lattice::{elementary_divisors, rank};
use crate::ring::{prime_power, CycCtx, CycScalar, Scalar};
use crate::rootdata::RootDatum;

/// `xi_{Har,t}(f) = <f, t>`, defined only on dot-invariant `f`.
pub fn xi_har<S: Scalar>(rd: &RootDatum, t: &TorusPoint<S>, f: &PChar<S>) -> Result<S> {
    if !is_bullet_invariant(rd, f)? {
        return Err(Error::NotInvariant);
    }
    let f = if f.basis() == crate::charring::Basis::Chi {
        f.clone()
    } else {
        f.translate()?
    };
    t.pair(&f)
}

/// `|W . t| = |W|`.
pub fn is_regular<S: Scalar>(rd: &RootDatum, t: &TorusPoint<S>) -> bool {
    bullet_orbit(rd, t).len() as u128 == rd.weyl_group_order()
}

/// Index of a sublattice of `Q`; `None` means infinite.
pub type Index = Option<u64>;

/// Positive roots (root coordinates) with `h0(chi_alpha) = 1`.
pub fn centralizer_roots(rd: &RootDatum, h0: &TorusPoint<CycScalar>) -> Vec<Vec<i64>> {
    rd.positive_roots()
        .iter()
        .zip(rd.positive_roots_w())
        .filter(|(_, a)| h0.eval(a).is_one())
        .map(|(c, _)| c.clone())
        .collect()
}

/// `|Q / Q_0|` with `Q_0` spanned by the roots of `Z_G(h0)`.
pub fn q_index(rd: &RootDatum, h0: &TorusPoint<CycScalar>) -> Index {
    let roots = centralizer_roots(rd, h0);
    let divs = elementary_divisors(&roots);
    if divs.len() < rd.rank() {
        return None;
    }
    Some(divs.iter().map(|d| d.unsigned_abs()).product())
}

/// Order of `h0` as the lcm of the orders of its coordinates.
pub fn h0_order(h0: &TorusPoint<CycScalar>) -> Result<u64> {
    let mut m = 1u64;
    for v in h0.values() {
        let o = v
            .multiplicative_order()
            .ok_or_else(|| Error::Invalid(format!("{} has infinite order", v)))?;
        m = m.lcm(&o);
    }
    Ok(m)
}

/// Rank of the centralizer root system equals the rank of `rd`.
pub fn is_exceptional(rd: &RootDatum, h0: &TorusPoint<CycScalar>) -> Result<bool> {
    h0_order(h0)?;
    let roots = centralizer_roots(rd, h0);
    Ok(!roots.is_empty() && rank(&roots) == rd.rank())
}

/// `t^l` lies in the plain `W`-orbit of `h0`.
pub fn pair_compatible<S: Scalar>(
    rd: &RootDatum,
    t: &TorusPoint<S>,
    ell: u64,
    h0: &TorusPoint<S>,
) -> bool {
    let tl = t.pow(ell as i64);
    rd.weyl_group().iter().any(|w| h0.act_plain(rd, w) == tl)
}

/// `Z[zeta_{lm}]` with `q -> zeta_l`, for `h0` of order `m` prime to `l`.
pub fn zen_ctx(ell: u64, m: u64) -> Result<CycCtx> {
    if ell.gcd(&m) != 1 {
        return Err(Error::Invalid(format!("order {} is not prime to {}", m, ell)));
    }
    Ok(CycCtx::new(ell * m, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub ell: u64,
    /// (a1) odd
    pub a1: bool,
    /// (a2) prime to `|P/Q|`
    pub a2: bool,
    /// (a3) prime to 3 in type G2
    pub a3: bool,
    /// (a4) prime to `|Q/Q_0|`; absent without `h0`
    pub a4: Option<bool>,
    /// (a5) a prime power
    pub a5: bool,
    pub q_index: Option<Index>,
    pub accept: bool,
}

impl LevelReport {
    /// Labels of the failing conditions, in order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.a1, "a1"),
            (self.a2, "a2"),
            (self.a3, "a3"),
            (self.a4.unwrap_or(true), "a4"),
            (self.a5, "a5"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

impl fmt::Display for LevelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.accept {
            write!(f, "accept l={}", self.ell)
        } else {
            write!(f, "reject l={} ({})", self.ell, self.failures().join(","))
        }
    }
}

pub fn check_level(
    rd: &RootDatum,
    ell: u64,
    h0: Option<&TorusPoint<CycScalar>>,
) -> Result<LevelReport> {
    if ell < 2 {
        return Err(Error::Invalid(format!("level {} is below 2", ell)));
    }
    let a1 = ell % 2 == 1;
    let a2 = ell.gcd(&rd.fundamental_group_order()) == 1;
    let a3 = rd.kind().family != 'G' || !ell.is_multiple_of(3);
    let a5 = prime_power(ell).is_some();
    let idx = h0.map(|h| q_index(rd, h));
    let a4 = idx.map(|i| matches!(i, Some(n) if n.gcd(&ell) == 1));
    let accept = a1 && a2 && a3 && a4.unwrap_or(true) && a5;
    Ok(LevelReport {
        ell,
        a1,
        a2,
        a3,
        a4,
        a5,
        q_index: idx,
        accept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::{act_bullet_torus, c_basis};
    use crate::ring::{LaurentPoly, MultiLaurent, RatFunc};
    use crate::rootdata::Weight;

    fn cyc_point(ctx: CycCtx, exps: &[i64]) -> TorusPoint<CycScalar> {
        let vals = exps.iter().map(|&k| CycScalar::generator_pow(ctx, k)).collect();
        TorusPoint::new(&ctx, vals).unwrap()
    }

    #[test]
    fn xi_on_c_fundamental() {
        let rd = RootDatum::of("A1").unwrap();
        let c = c_basis(&rd, &Weight(vec![1])).unwrap();
        let t = TorusPoint::new(&(), vec![RatFunc::q_pow(3)]).unwrap();
        let c = c.map_scalars(&(), |p: &LaurentPoly| RatFunc::from_laurent(p.clone()));
        // q^-1 z + q z^-1 at z = q^3
        let v = xi_har(&rd, &t, &c).unwrap();
        assert_eq!(v, &RatFunc::q_pow(2) + &RatFunc::q_pow(-2));
        let s = rd.weyl_element(&[0]);
        let st = act_bullet_torus(&rd, &s, &t);
        assert_eq!(xi_har(&rd, &st, &c).unwrap(), v);
    }

    #[test]
    fn xi_rejects_non_invariant() {
        let rd = RootDatum::of("A1").unwrap();
        let f = PChar::<LaurentPoly>::parse("chi[1]").unwrap();
        let t = TorusPoint::<LaurentPoly>::identity(&(), 1);
        assert_eq!(xi_har(&rd, &t, &f), Err(Error::NotInvariant));
    }

    #[test]
    fn xi_symbolic_invariance() {
        let rd = RootDatum::of("A2").unwrap();
        let ctx = 2usize;
        let t = TorusPoint::new(&ctx, vec![MultiLaurent::var_pow(2, 1, 1), MultiLaurent::var_pow(2, 2, 1)]).unwrap();
        let c = c_basis(&rd, &Weight(vec![1, 1])).unwrap().base_change::<MultiLaurent>(&ctx);
        let v = xi_har(&rd, &t, &c).unwrap();
        for w in rd.weyl_group() {
            assert_eq!(xi_har(&rd, &act_bullet_torus(&rd, &w, &t), &c).unwrap(), v);
        }
    }

    #[test]
    fn regularity() {
        let rd = RootDatum::of("A1").unwrap();
        let at = |k: i64| TorusPoint::new(&(), vec![RatFunc::q_pow(k)]).unwrap();
        assert!(!is_regular(&rd, &at(1)));
        assert!(is_regular(&rd, &at(-1)));
        assert!(is_regular(&rd, &at(3)));
        let neg = TorusPoint::new(&(), vec![-RatFunc::q_pow(1)]).unwrap();
        assert!(!is_regular(&rd, &neg));
    }

    #[test]
    fn level_table() {
        let cases = [
            ("G2", 9, vec!["a3"]),
            ("A2", 9, vec!["a2"]),
            ("A1", 25, vec![]),
            ("A1", 15, vec!["a5"]),
            ("A1", 3, vec![]),
            ("A1", 4, vec!["a1", "a2"]),
            ("A1", 27, vec![]),
        ];
        for (ty, l, fails) in cases {
            let rd = RootDatum::of(ty).unwrap();
            let rep = check_level(&rd, l, None).unwrap();
            assert_eq!(rep.failures(), fails, "{ty} {l}");
            assert_eq!(rep.accept, fails.is_empty());
        }
        assert!(check_level(&RootDatum::of("A1").unwrap(), 1, None).is_err());
    }

    #[test]
    fn exceptional_elements() {
        let rd = RootDatum::of("A1").unwrap();
        let c2 = CycCtx::level(2);
        assert!(is_exceptional(&rd, &TorusPoint::identity(&c2, 1)).unwrap());
        assert!(is_exceptional(&rd, &cyc_point(c2, &[1])).unwrap());
        let c5 = CycCtx::level(5);
        assert!(!is_exceptional(&rd, &cyc_point(c5, &[1])).unwrap());
        assert_eq!(q_index(&rd, &cyc_point(c5, &[1])), None);
        assert_eq!(q_index(&rd, &cyc_point(c2, &[1])), Some(1));
    }

    #[test]
    fn a4_uses_index() {
        // B2 with h0 = (-1, 1): only the long roots survive, index 2
        let rd = RootDatum::of("B2").unwrap();
        let c2 = CycCtx::level(2);
        let h0 = cyc_point(c2, &[1, 0]);
        let idx = q_index(&rd, &h0);
        assert_eq!(idx, Some(2));
        assert!(is_exceptional(&rd, &h0).unwrap());
        let rep = check_level(&rd, 5, Some(&h0)).unwrap();
        assert_eq!(rep.a4, Some(true));
        assert!(rep.accept);
    }

    #[test]
    fn compatibility() {
        let rd = RootDatum::of("A1").unwrap();
        let ctx = CycCtx::level(35);
        let l = 5;
        // t = zeta_35^1; t^5 = zeta_7
        let t = cyc_point(ctx, &[1]);
        assert!(pair_compatible(&rd, &t, l, &cyc_point(ctx, &[5])));
        assert!(pair_compatible(&rd, &t, l, &cyc_point(ctx, &[-5])));
        // an element of order 5 is never t^5 here
        assert!(!pair_compatible(&rd, &t, l, &cyc_point(ctx, &[7])));
        assert_eq!(h0_order(&cyc_point(ctx, &[5])).unwrap(), 7);
    }

    #[test]
    fn zen_ring() {
        let ctx = zen_ctx(5, 7).unwrap();
        assert_eq!(ctx.q_order(), 5);
        assert!(zen_ctx(5, 10).is_err());
    }
}
