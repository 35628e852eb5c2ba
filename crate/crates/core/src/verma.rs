//! `Delta(lambda)` over `Q(q)`, built weight space by weight space from
//! lowering words `f_{i1} ... f_{ik} v_lambda` modulo the radical of the
//! Shapovalov form.
//!
//! The form is contravariant for the anti-involution `e_i <-> f_i`,
//! `k -> k`, and is computed one depth at a time from
//! `<f_i x, f_j y> = <x, f_j e_i y> + delta_ij [<nu + alpha_i, alpha_i^vee>]_i <x, y>`,
//! which only involves weight spaces that are already built.

use std::collections::{BTreeMap, BTreeSet};

use crate::charring::c_basis;
use crate::drinfeld::{Atom, UWord};
use crate::error::{Error, Result};
use crate::matrix::{independent_rows, Mat};
use crate::ring::{quantum_factorial, quantum_int, RatFunc};
use crate::rootdata::{RootDatum, Weight};

/// `f_{indices[0]} f_{indices[1]} ... v_lambda`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoweringWord {
    pub indices: Vec<usize>,
    pub weight: Weight,
}

#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Weight,
    pub depth: usize,
    pub basis: Vec<LoweringWord>,
    pub gram: Mat,
    gram_inv: Mat,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct WeylModule {
    rd: RootDatum,
    lambda: Weight,
    spaces: BTreeMap<Weight, WeightSpace>,
    /// `f[i][nu]`: `V_nu -> V_{nu - alpha_i}`
    f: Vec<BTreeMap<Weight, Mat>>,
    /// `e[i][nu]`: `V_nu -> V_{nu + alpha_i}`
    e: Vec<BTreeMap<Weight, Mat>>,
}

/// Depth large enough to reach the lowest weight `w0 lambda`.
pub fn full_depth(rd: &RootDatum, lambda: &Weight) -> usize {
    let low = rd.act(&rd.longest_element(), lambda);
    rd.height(&lambda.sub(&low)).unwrap_or(0).max(0) as usize
}

impl WeylModule {
    /// Builds `Delta(lambda)`, failing with `Truncated` if weights remain
    /// below depth `depth_cap`.
    pub fn build(rd: &RootDatum, lambda: &Weight, depth_cap: usize) -> Result<WeylModule> {
        if lambda.rank() != rd.rank() {
            return Err(Error::Invalid(format!("{} has the wrong rank", lambda)));
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let r = rd.rank();
        let mut m = WeylModule {
            rd: rd.clone(),
            lambda: lambda.clone(),
            spaces: BTreeMap::new(),
            f: vec![BTreeMap::new(); r],
            e: vec![BTreeMap::new(); r],
        };
        m.spaces.insert(
            lambda.clone(),
            WeightSpace {
                weight: lambda.clone(),
                depth: 0,
                basis: vec![LoweringWord {
                    indices: vec![],
                    weight: lambda.clone(),
                }],
                gram: Mat::identity(1),
                gram_inv: Mat::identity(1),
            },
        );
        let mut layer = vec![lambda.clone()];
        let mut depth = 0;
        while !layer.is_empty() {
            depth += 1;
            let targets: BTreeSet<Weight> = layer
                .iter()
                .flat_map(|mu| (0..r).map(move |i| mu.sub(&rd.simple_root(i))))
                .collect();
            let mut next = Vec::new();
            for nu in targets.into_iter().rev() {
                if m.build_space(&nu, depth)? {
                    if depth > depth_cap {
                        return Err(Error::Truncated(format!(
                            "weight {} of Delta({}) lies below depth {}",
                            nu, lambda, depth_cap
                        )));
                    }
                    next.push(nu);
                }
            }
            layer = next;
        }
        Ok(m)
    }

    /// Builds with [`full_depth`] as the cap.
    pub fn build_full(rd: &RootDatum, lambda: &Weight) -> Result<WeylModule> {
        Self::build(rd, lambda, full_depth(rd, lambda))
    }

    fn dim_of(&self, nu: &Weight) -> usize {
        self.spaces.get(nu).map_or(0, |s| s.dim())
    }

    /// Adds the weight space at `nu` if it is nonzero.
    fn build_space(&mut self, nu: &Weight, depth: usize) -> Result<bool> {
        let rd = self.rd.clone();
        let r = rd.rank();
        // candidates (i, k): f_i applied to basis vector k of V_{nu + alpha_i}
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut offset = vec![0usize; r];
        for i in 0..r {
            offset[i] = cands.len();
            let up = nu.add(&rd.simple_root(i));
            for k in 0..self.dim_of(&up) {
                cands.push((i, k));
            }
        }
        if cands.is_empty() {
            return Ok(false);
        }
        let n = cands.len();
        let mut gram = Mat::zeros(n, n);
        for i in 0..r {
            let ui = nu.add(&rd.simple_root(i));
            let di = self.dim_of(&ui);
            if di == 0 {
                continue;
            }
            let gi = &self.spaces[&ui].gram;
            for j in 0..r {
                let uj = nu.add(&rd.simple_root(j));
                let dj = self.dim_of(&uj);
                if dj == 0 {
                    continue;
                }
                let top = ui.add(&rd.simple_root(j));
                let mut block = match (self.e[i].get(&uj), self.f[j].get(&top)) {
                    (Some(ei), Some(fj)) => gi.mul(&fj.mul(ei)),
                    _ => Mat::zeros(di, dj),
                };
                if i == j {
                    let c = RatFunc::from_laurent(quantum_int(rd.coroot_pairing(&ui, i), rd.d_i(i)));
                    block = block.add(&gi.scale(&c));
                }
                for a in 0..di {
                    for b in 0..dj {
                        gram.set(offset[i] + a, offset[j] + b, block.get(a, b).clone());
                    }
                }
            }
        }
        let chosen = independent_rows(&gram);
        if chosen.is_empty() {
            return Ok(false);
        }
        let g = gram.select(&chosen, &chosen);
        let g_inv = g
            .inverse()
            .ok_or_else(|| Error::Invalid(format!("singular Gram matrix at {}", nu)))?;
        let basis = chosen
            .iter()
            .map(|&c| {
                let (i, k) = cands[c];
                let parent = &self.spaces[&nu.add(&rd.simple_root(i))].basis[k];
                let mut indices = vec![i];
                indices.extend(parent.indices.iter().copied());
                LoweringWord {
                    indices,
                    weight: nu.clone(),
                }
            })
            .collect();
        let all: Vec<usize> = (0..n).collect();
        let pairings = gram.select(&chosen, &all);
        for i in 0..r {
            let up = nu.add(&rd.simple_root(i));
            let di = self.dim_of(&up);
            if di == 0 {
                continue;
            }
            let cols: Vec<usize> = (offset[i]..offset[i] + di).collect();
            let all_rows: Vec<usize> = (0..chosen.len()).collect();
            let fmat = g_inv.mul(&pairings.select(&all_rows, &cols));
            // contravariance: G_up E = F^T G_nu
            let emat = self.spaces[&up].gram_inv.mul(&fmat.transpose()).mul(&g);
            self.f[i].insert(up.clone(), fmat);
            self.e[i].insert(nu.clone(), emat);
        }
        self.spaces.insert(
            nu.clone(),
            WeightSpace {
                weight: nu.clone(),
                depth,
                basis,
                gram: g,
                gram_inv: g_inv,
            },
        );
        Ok(true)
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.lambda
    }

    pub fn spaces(&self) -> impl Iterator<Item = &WeightSpace> {
        self.spaces.values()
    }

    pub fn space(&self, nu: &Weight) -> Option<&WeightSpace> {
        self.spaces.get(nu)
    }

    pub fn dims(&self) -> BTreeMap<Weight, i64> {
        self.spaces
            .iter()
            .map(|(w, s)| (w.clone(), s.dim() as i64))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.spaces.values().map(|s| s.dim()).sum()
    }

    pub fn gram_det(&self, nu: &Weight) -> Option<RatFunc> {
        self.spaces.get(nu).map(|s| s.gram.det())
    }

    /// Matrix of `e_i` (`raise`) or `f_i` on `V_nu`, with its target weight.
    pub fn generator(&self, i: usize, raise: bool, nu: &Weight) -> (Weight, Mat) {
        let a = self.rd.simple_root(i);
        let (target, table) = if raise {
            (nu.add(&a), &self.e[i])
        } else {
            (nu.sub(&a), &self.f[i])
        };
        let m = table
            .get(nu)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.dim_of(&target), self.dim_of(nu)));
        (target, m)
    }

    /// The action of a word on `V_nu`: target weight and matrix. Atoms act
    /// right to left.
    pub fn apply(&self, w: &UWord, nu: &Weight) -> Result<(Weight, Mat)> {
        w.validate(&self.rd)?;
        let mut cur = nu.clone();
        let mut m = Mat::identity(self.dim_of(nu));
        for a in w.atoms.iter().rev() {
            match a {
                Atom::K(mu) => {
                    let e = self.rd.form_exact(&cur, mu)?;
                    m = m.scale(&RatFunc::q_pow(e));
                }
                Atom::E(i, n) | Atom::F(i, n) => {
                    let raise = matches!(a, Atom::E(..));
                    for _ in 0..*n {
                        let (t, g) = self.generator(*i, raise, &cur);
                        m = g.mul(&m);
                        cur = t;
                    }
                    if *n > 1 {
                        let fact = RatFunc::from_laurent(quantum_factorial(*n, self.rd.d_i(*i)));
                        m = m.scale(&fact.inv().expect("nonzero factorial"));
                    }
                }
            }
        }
        Ok((cur, m))
    }

    /// `Trace(u k_{-2 rho})` on the whole module.
    pub fn trace_against(&self, u: &UWord) -> Result<RatFunc> {
        u.validate(&self.rd)?;
        let rho2 = self.rd.rho().scale(2);
        let mut acc = RatFunc::zero();
        for nu in self.spaces.keys() {
            let (t, m) = self.apply(u, nu)?;
            if &t != nu {
                continue;
            }
            let e = self.rd.form_exact(nu, &rho2)?;
            acc = &acc + &(&m.trace() * &RatFunc::q_pow(-e));
        }
        Ok(acc)
    }

    /// Every defining relation that fails on some weight space, described
    /// in words; empty when the module is a genuine representation.
    pub fn relation_failures(&self) -> Result<Vec<String>> {
        let rd = &self.rd;
        let r = rd.rank();
        let mut bad = Vec::new();
        let weights: Vec<Weight> = self.spaces.keys().cloned().collect();
        for nu in &weights {
            let s = &self.spaces[nu];
            if s.gram != s.gram.transpose() {
                bad.push(format!("Gram matrix at {} is not symmetric", nu));
            }
            for i in 0..r {
                let ai = rd.simple_root(i);
                let (up, e) = self.generator(i, true, nu);
                // k_gamma e_i = q^{(alpha_i, gamma)} e_i k_gamma, gamma = alpha_j
                for j in 0..r {
                    let g = rd.simple_root(j);
                    let lhs = e.scale(&RatFunc::q_pow(rd.form_exact(&up, &g)?));
                    let rhs = e.scale(&RatFunc::q_pow(rd.form_exact(&ai, &g)? + rd.form_exact(nu, &g)?));
                    if lhs != rhs {
                        bad.push(format!("k{} e{} on {}", g, i + 1, nu));
                    }
                }
                if let Some(up_space) = self.spaces.get(&up) {
                    let (_, f) = self.generator(i, false, &up);
                    if up_space.gram.mul(&e) != f.transpose().mul(&s.gram) {
                        bad.push(format!("contravariance of e{} at {}", i + 1, nu));
                    }
                }
                for j in 0..r {
                    let ef = self.apply(&UWord::new(vec![Atom::E(i, 1), Atom::F(j, 1)]), nu)?.1;
                    let fe = self.apply(&UWord::new(vec![Atom::F(j, 1), Atom::E(i, 1)]), nu)?.1;
                    let mut expect = Mat::zeros(ef.rows(), ef.cols());
                    if i == j {
                        let c = quantum_int(rd.coroot_pairing(nu, i), rd.d_i(i));
                        expect = Mat::identity(s.dim()).scale(&RatFunc::from_laurent(c));
                    }
                    if ef.sub(&fe) != expect {
                        bad.push(format!("[e{}, f{}] on {}", i + 1, j + 1, nu));
                    }
                    if i != j {
                        for raise in [true, false] {
                            if !self.serre(i, j, raise, nu)?.is_zero() {
                                let g = if raise { 'e' } else { 'f' };
                                bad.push(format!("Serre ({}{}, {}{}) on {}", g, i + 1, g, j + 1, nu));
                            }
                        }
                    }
                }
            }
        }
        Ok(bad)
    }

    /// `sum_n (-1)^n x_i^{(1 - a_ij - n)} x_j x_i^{(n)}` on `V_nu`.
    fn serre(&self, i: usize, j: usize, raise: bool, nu: &Weight) -> Result<Mat> {
        let top = (1 - self.rd.cartan()[i][j]) as u32;
        let atom = |k: usize, n: u32| if raise { Atom::E(k, n) } else { Atom::F(k, n) };
        let mut acc: Option<Mat> = None;
        for n in 0..=top {
            let mut atoms = Vec::new();
            if top - n > 0 {
                atoms.push(atom(i, top - n));
            }
            atoms.push(atom(j, 1));
            if n > 0 {
                atoms.push(atom(i, n));
            }
            let (_, m) = self.apply(&UWord::new(atoms), nu)?;
            let m = if n % 2 == 1 { m.scale(&RatFunc::from_int(-1)) } else { m };
            acc = Some(match acc {
                None => m,
                Some(a) => a.add(&m),
            });
        }
        Ok(acc.expect("at least one term"))
    }
}

/// `<c(lambda), k_mu>` computed from the Freudenthal side.
fn c_pairing(rd: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<RatFunc> {
    let c = c_basis(rd, lambda)?;
    let mut acc = RatFunc::zero();
    for (nu, coef) in c.terms() {
        let e = rd.form_exact(nu, mu)?;
        acc = &acc + &(&RatFunc::from_laurent(coef.clone()) * &RatFunc::q_pow(e));
    }
    Ok(acc)
}

/// Checks `<c(lambda), u> = Trace(u k_{-2 rho})` for Cartan probes `u = k_mu`.
pub fn verify_theta(rd: &RootDatum, lambda: &Weight, probes: &[UWord]) -> Result<bool> {
    let module = WeylModule::build_full(rd, lambda)?;
    for p in probes {
        let [Atom::K(mu)] = p.atoms.as_slice() else {
            if p.is_empty() {
                if module.trace_against(p)? != c_pairing(rd, lambda, &Weight::zero(rd.rank()))? {
                    return Ok(false);
                }
                continue;
            }
            return Err(Error::Invalid(format!("probe {} is not a single k_mu", p)));
        };
        if module.trace_against(p)? != c_pairing(rd, lambda, mu)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repchar::freudenthal;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn sl2_fundamental() {
        let rd = RootDatum::of("A1").unwrap();
        let m = WeylModule::build_full(&rd, &w(&[1])).unwrap();
        assert_eq!(m.dims(), BTreeMap::from([(w(&[1]), 1), (w(&[-1]), 1)]));
        assert_eq!(m.space(&w(&[-1])).unwrap().gram, Mat::identity(1));
    }

    #[test]
    fn sl2_adjoint_gram() {
        let rd = RootDatum::of("A1").unwrap();
        let m = WeylModule::build_full(&rd, &w(&[2])).unwrap();
        let g = &m.space(&w(&[0])).unwrap().gram;
        assert_eq!(g, &Mat::from_rows(vec![vec![RatFunc::from_laurent(quantum_int(2, 1))]]));
        assert_eq!(m.dim(), 3);
    }

    #[test]
    fn a2_adjoint() {
        let rd = RootDatum::of("A2").unwrap();
        let m = WeylModule::build_full(&rd, &w(&[1, 1])).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.dims()[&w(&[0, 0])], 2);
        assert_eq!(m.dims().len(), 7);
        assert!(m.relation_failures().unwrap().is_empty());
    }

    #[test]
    fn matches_freudenthal_b2() {
        let rd = RootDatum::of("B2").unwrap();
        for lam in [w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[0, 2])] {
            let m = WeylModule::build_full(&rd, &lam).unwrap();
            assert_eq!(m.dims(), freudenthal(&rd, &lam).unwrap().mults, "{lam}");
            assert!(m.relation_failures().unwrap().is_empty(), "{lam}");
        }
    }

    #[test]
    fn truncation_is_reported() {
        let rd = RootDatum::of("A2").unwrap();
        assert!(matches!(
            WeylModule::build(&rd, &w(&[1, 1]), 2),
            Err(Error::Truncated(_))
        ));
        assert!(WeylModule::build(&rd, &w(&[1, 1]), 4).is_ok());
    }

    #[test]
    fn traces() {
        let rd = RootDatum::of("A1").unwrap();
        let m = WeylModule::build_full(&rd, &w(&[1])).unwrap();
        let one = m.trace_against(&UWord::one()).unwrap();
        assert_eq!(one, &RatFunc::q_pow(-1) + &RatFunc::q_pow(1));
        // k_alpha: q^{(nu, alpha) - (nu, 2 rho)} vanishes in the exponent
        let ka = m.trace_against(&UWord::k(w(&[2]))).unwrap();
        assert_eq!(ka, RatFunc::from_int(2));
        // f lowers, so it has no diagonal part
        assert!(m.trace_against(&UWord::f(0)).unwrap().is_zero());
        assert!(m.trace_against(&UWord::k(w(&[1]))).is_err());
    }

    #[test]
    fn theta_small() {
        let rd = RootDatum::of("A1").unwrap();
        let probes: Vec<UWord> = [0, 2, 4].iter().map(|&k| UWord::k(w(&[k]))).collect();
        assert!(verify_theta(&rd, &w(&[1]), &probes).unwrap());
        assert!(verify_theta(&rd, &w(&[0]), &probes).unwrap());
        let rd = RootDatum::of("A2").unwrap();
        let probes = vec![UWord::k(rd.simple_root(0)), UWord::k(rd.simple_root(1))];
        assert!(verify_theta(&rd, &w(&[1, 0]), &probes).unwrap());
    }
}
