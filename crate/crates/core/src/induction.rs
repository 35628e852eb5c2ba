//! Weight combinatorics of induction from `H` to `B^-` and the Euler
//! characteristic of derived induction to `G`, at the level of characters.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::repchar::{kostant_table, weyl_euler_term, zero_weight_mult, FormalChar};
use crate::rootdata::{RootDatum, Weight};

/// Weight multiplicities of an `H`-module, exact at every weight of root
/// height at most `cutoff` (or everywhere when `cutoff` is `None`).
/// Weights outside the root lattice have no height and are always exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub dims: BTreeMap<Weight, u64>,
    pub cutoff: Option<i64>,
}

impl GradedDims {
    /// A finite module, exact everywhere.
    pub fn finite(dims: BTreeMap<Weight, u64>) -> Self {
        let mut dims = dims;
        dims.retain(|_, v| *v != 0);
        GradedDims { dims, cutoff: None }
    }

    pub fn delta(mu: Weight) -> Self {
        Self::finite(BTreeMap::from([(mu, 1)]))
    }

    pub fn get(&self, mu: &Weight) -> u64 {
        self.dims.get(mu).copied().unwrap_or(0)
    }

    pub fn is_known(&self, rd: &RootDatum, mu: &Weight) -> bool {
        match (self.cutoff, rd.height(mu)) {
            (Some(n), Some(h)) => h <= n,
            _ => true,
        }
    }
}

/// `dim Ind(M)_xi = sum_{gamma in Q^+} P(gamma) dim M_{xi - gamma}`.
///
/// `M` must be finite; `gamma` of height above `n` is reported as truncation.
pub fn ind_bh_weight_dims(rd: &RootDatum, m: &GradedDims, xi: &Weight, n: i64) -> Result<u64> {
    if m.cutoff.is_some() {
        return Err(Error::Truncated(
            "the source module must be finite to induce".into(),
        ));
    }
    let table = kostant_table(rd, n);
    let mut total = 0u64;
    for (mu, d) in &m.dims {
        let gamma = xi.sub(mu);
        let Some(c) = rd.weight_to_root(&gamma) else {
            continue;
        };
        if c.iter().any(|&x| x < 0) {
            continue;
        }
        let h: i64 = c.iter().sum();
        if h > n {
            return Err(Error::Truncated(format!(
                "{} needs partitions of height {} > {}",
                xi, h, n
            )));
        }
        total += table.get(&c).copied().unwrap_or(0) * d;
    }
    Ok(total)
}

/// `mu -> P(mu)` on `Q^+` up to height `n`.
pub fn adjoint_bminus_char(rd: &RootDatum, n: i64) -> GradedDims {
    let dims = kostant_table(rd, n)
        .into_iter()
        .map(|(c, p)| (rd.root_to_weight(&c), p))
        .collect();
    GradedDims {
        dims,
        cutoff: Some(n),
    }
}

/// A signed combination of `ch nabla(lambda)` with per-weight completeness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerChar {
    pub coeffs: BTreeMap<Weight, i64>,
    pub complete: BTreeSet<Weight>,
    pub cutoff: Option<i64>,
}

impl EulerChar {
    pub fn coeff(&self, lambda: &Weight) -> i64 {
        self.coeffs.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_complete(&self, lambda: &Weight) -> bool {
        self.cutoff.is_none() || self.complete.contains(lambda)
    }
}

/// Dot orbit `{w . lambda}`.
fn dot_fiber(rd: &RootDatum, lambda: &Weight) -> BTreeSet<Weight> {
    rd.weyl_group().iter().map(|w| rd.dot(w, lambda)).collect()
}

/// `sum_mu dim M_mu * (+- ch nabla(w . mu))`.
pub fn euler_rind(rd: &RootDatum, hchar: &GradedDims) -> EulerChar {
    let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, d) in &hchar.dims {
        if let Some((s, lam)) = weyl_euler_term(rd, mu) {
            *coeffs.entry(lam).or_insert(0) += s * *d as i64;
        }
    }
    let mut complete = BTreeSet::new();
    if hchar.cutoff.is_some() {
        // every generating weight whose whole fiber is known, whether or not it is hit
        let mut cands: BTreeSet<Weight> = coeffs.keys().cloned().collect();
        let n = hchar.cutoff.unwrap_or(0);
        for lam in rd.dominant_weights_up_to(n.max(0) * max_level_per_height(rd)) {
            cands.insert(lam);
        }
        for lam in cands {
            if dot_fiber(rd, &lam).iter().all(|g| hchar.is_known(rd, g)) {
                complete.insert(lam);
            }
        }
    }
    coeffs.retain(|_, c| *c != 0);
    EulerChar {
        coeffs,
        complete,
        cutoff: hchar.cutoff,
    }
}

/// Bound on the level of a weight of root height one.
fn max_level_per_height(rd: &RootDatum) -> i64 {
    (0..rd.rank())
        .map(|i| rd.simple_root(i).0.iter().map(|x| x.abs()).sum::<i64>())
        .max()
        .unwrap_or(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainRow {
    pub lambda: Weight,
    pub lhs: i64,
    pub rhs: i64,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainReport {
    pub cutoff: i64,
    pub rows: Vec<MainRow>,
}

impl MainReport {
    /// Complete weights on which both sides agree.
    pub fn equal_up_to(&self) -> BTreeSet<Weight> {
        self.rows
            .iter()
            .filter(|r| r.complete && r.lhs == r.rhs)
            .map(|r| r.lambda.clone())
            .collect()
    }

    pub fn mismatches(&self) -> Vec<&MainRow> {
        self.rows
            .iter()
            .filter(|r| r.complete && r.lhs != r.rhs)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }

    pub fn row(&self, lambda: &Weight) -> Option<&MainRow> {
        self.rows.iter().find(|r| &r.lambda == lambda)
    }
}

/// Compares `sum_lambda dim nabla(lambda)_0 ch nabla(lambda)` with the Euler
/// characteristic of induced `O(B^-)_ad`, coefficient by coefficient.
pub fn verify_main_identity_truncated(rd: &RootDatum, n: i64) -> Result<MainReport> {
    if n < 0 {
        return Err(Error::Invalid(format!("negative cutoff {}", n)));
    }
    let rhs = euler_rind(rd, &adjoint_bminus_char(rd, n));
    let mut weights: BTreeSet<Weight> = rhs.coeffs.keys().cloned().collect();
    weights.extend(rhs.complete.iter().cloned());
    for lam in rd.dominant_weights_up_to(n * max_level_per_height(rd)) {
        if matches!(rd.height(&lam), Some(h) if h >= 0 && h <= n) {
            weights.insert(lam);
        }
    }
    let mut rows = Vec::new();
    for lam in weights {
        rows.push(MainRow {
            lhs: zero_weight_mult(rd, &lam)?,
            rhs: rhs.coeff(&lam),
            complete: rhs.is_complete(&lam),
            lambda: lam,
        });
    }
    Ok(MainReport { cutoff: n, rows })
}

/// Expands an Euler characteristic into a plain character.
pub fn expand(rd: &RootDatum, e: &EulerChar) -> Result<FormalChar> {
    crate::repchar::expand_nabla_combination(rd, &e.coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repchar::{ch_nabla, freudenthal};

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn ind_examples() {
        let a2 = RootDatum::of("A2").unwrap();
        let m = GradedDims::delta(w(&[0, 0]));
        let a12 = a2.root_to_weight(&[1, 1]);
        assert_eq!(ind_bh_weight_dims(&a2, &m, &a12, 4).unwrap(), 2);
        let mu = w(&[3, -1]);
        assert_eq!(ind_bh_weight_dims(&a2, &GradedDims::delta(mu.clone()), &mu, 4).unwrap(), 1);
        let a1 = RootDatum::of("A1").unwrap();
        let d0 = GradedDims::delta(w(&[0]));
        assert_eq!(ind_bh_weight_dims(&a1, &d0, &w(&[-2]), 4).unwrap(), 0);
        assert!(matches!(
            ind_bh_weight_dims(&a1, &d0, &w(&[20]), 4),
            Err(Error::Truncated(_))
        ));
    }

    #[test]
    fn adjoint_examples() {
        let a2 = RootDatum::of("A2").unwrap();
        let adj = adjoint_bminus_char(&a2, 4);
        assert_eq!(adj.get(&w(&[0, 0])), 1);
        assert_eq!(adj.get(&a2.root_to_weight(&[1, 1])), 2);
        let a1 = RootDatum::of("A1").unwrap();
        assert_eq!(adjoint_bminus_char(&a1, 4).get(&w(&[4])), 1);
    }

    #[test]
    fn euler_examples() {
        let a1 = RootDatum::of("A1").unwrap();
        let e = euler_rind(&a1, &GradedDims::delta(w(&[3])));
        assert_eq!(e.coeffs, BTreeMap::from([(w(&[3]), 1)]));
        assert!(euler_rind(&a1, &GradedDims::delta(w(&[-1]))).coeffs.is_empty());
        let dims = (0..=3).map(|b| (w(&[2 * b]), 1)).collect();
        let e = euler_rind(&a1, &GradedDims::finite(dims));
        let expect: BTreeMap<Weight, i64> = (0..=3).map(|b| (w(&[2 * b]), 1)).collect();
        assert_eq!(e.coeffs, expect);
    }

    #[test]
    fn bott_consistency() {
        for ty in ["A1", "A2", "B2"] {
            let rd = RootDatum::of(ty).unwrap();
            for lam in rd.dominant_weights_up_to(3) {
                let t = freudenthal(&rd, &lam).unwrap();
                let dims = t.mults.iter().map(|(k, v)| (k.clone(), *v as u64)).collect();
                let e = euler_rind(&rd, &GradedDims::finite(dims));
                assert_eq!(e.coeffs, BTreeMap::from([(lam.clone(), 1)]), "{ty} {lam}");
                assert_eq!(expand(&rd, &e).unwrap(), ch_nabla(&rd, &lam).unwrap());
            }
        }
    }

    #[test]
    fn main_identity_rank_one() {
        let a1 = RootDatum::of("A1").unwrap();
        let rep = verify_main_identity_truncated(&a1, 6).unwrap();
        assert!(rep.passed());
        for b in 0..=6 {
            let row = rep.row(&w(&[2 * b])).unwrap();
            assert!(row.complete);
            assert_eq!((row.lhs, row.rhs), (1, 1));
        }
        assert!(rep.row(&w(&[14])).is_none_or(|r| !r.complete));
    }

    #[test]
    fn main_identity_a2_rho() {
        let a2 = RootDatum::of("A2").unwrap();
        let rep = verify_main_identity_truncated(&a2, 4).unwrap();
        assert!(rep.passed());
        let row = rep.row(&w(&[1, 1])).unwrap();
        assert!(row.complete);
        assert_eq!((row.lhs, row.rhs), (2, 2));
        let zero = rep.row(&w(&[0, 0])).unwrap();
        assert_eq!((zero.lhs, zero.rhs), (1, 1));
    }

    #[test]
    fn cutoff_stability() {
        let a2 = RootDatum::of("A2").unwrap();
        let small = verify_main_identity_truncated(&a2, 4).unwrap();
        let big = verify_main_identity_truncated(&a2, 6).unwrap();
        for r in small.rows.iter().filter(|r| r.complete) {
            let b = big.row(&r.lambda).unwrap();
            assert!(b.complete);
            assert_eq!(b.rhs, r.rhs);
        }
    }
}
