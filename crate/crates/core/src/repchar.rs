//! Characters of finite-dimensional modules: Kostant's partition function,
//! Freudenthal multiplicities, the Weyl dimension formula, Brauer–Klimyk
//! tensor decomposition and the dot-action Euler operator.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::lattice::Q64;
use crate::rootdata::{RootDatum, Weight};

/// A finitely supported integer combination of `e(mu)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalChar {
    terms: BTreeMap<Weight, i64>,
}

impl FormalChar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(w: Weight, c: i64) -> Self {
        let mut f = Self::zero();
        f.add_term(w, c);
        f
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &FormalChar) -> FormalChar {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> FormalChar {
        let mut out = FormalChar::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &FormalChar) -> FormalChar {
        let mut out = FormalChar::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        out
    }

    /// Sum of coefficients, i.e. the dimension for an honest character.
    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for FormalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let sep = match (i, *c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            if c.abs() == 1 {
                write!(f, "{}e{}", sep, w)?;
            } else {
                write!(f, "{}{}*e{}", sep, c.abs(), w)?;
            }
        }
        Ok(())
    }
}

/// Weight multiplicities of the Weyl module with highest weight `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultTable {
    pub lambda: Weight,
    pub mults: BTreeMap<Weight, i64>,
}

impl WeightMultTable {
    pub fn mult(&self, mu: &Weight) -> i64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.mults.values().sum()
    }

    pub fn to_char(&self) -> FormalChar {
        let mut f = FormalChar::zero();
        for (w, m) in &self.mults {
            f.add_term(w.clone(), *m);
        }
        f
    }
}

/// Number of ways to write `gamma` (simple-root coordinates) as an
/// `N`-combination of positive roots.
pub fn kostant_partition(rd: &RootDatum, gamma: &[i64]) -> u64 {
    let mut memo = HashMap::new();
    kostant_rec(rd.positive_roots(), gamma.to_vec(), 0, &mut memo)
}

/// As [`kostant_partition`] for a weight; zero off `Q^+`.
pub fn kostant_partition_weight(rd: &RootDatum, gamma: &Weight) -> u64 {
    match rd.weight_to_root(gamma) {
        Some(c) if c.iter().all(|&x| x >= 0) => kostant_partition(rd, &c),
        _ => 0,
    }
}

fn kostant_rec(
    roots: &[Vec<i64>],
    gamma: Vec<i64>,
    from: usize,
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if gamma.iter().any(|&x| x < 0) {
        return 0;
    }
    if gamma.iter().all(|&x| x == 0) {
        return 1;
    }
    if from == roots.len() {
        return 0;
    }
    let key = (gamma, from);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let (gamma, _) = &key;
    // use roots[from] k times, then move on
    let mut total = 0;
    let mut rest = gamma.clone();
    loop {
        total += kostant_rec(roots, rest.clone(), from + 1, memo);
        for (r, a) in rest.iter_mut().zip(&roots[from]) {
            *r -= a;
        }
        if rest.iter().any(|&x| x < 0) {
            break;
        }
    }
    memo.insert(key, total);
    total
}

/// Kostant counts for every `gamma` in `Q^+` of height at most `n`, by
/// multiplying out the truncated product of geometric series.
pub fn kostant_table(rd: &RootDatum, n: i64) -> BTreeMap<Vec<i64>, u64> {
    let rank = rd.rank();
    let mut table: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    table.insert(vec![0; rank], 1);
    for root in rd.positive_roots() {
        let h: i64 = root.iter().sum();
        // multiply by 1/(1 - e(-root)) = sum_k e(-k root), truncated at height n
        let mut next: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for (g, c) in &table {
            let mut cur = g.clone();
            let mut ht: i64 = g.iter().sum();
            while ht <= n {
                *next.entry(cur.clone()).or_insert(0) += c;
                for (x, a) in cur.iter_mut().zip(root) {
                    *x += a;
                }
                ht += h;
            }
        }
        table = next;
    }
    table
}

fn check_dominant(lambda: &Weight) -> Result<()> {
    if lambda.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.to_string()))
    }
}

/// Dominant weights `mu <= lambda`, found by subtracting positive roots.
pub fn dominant_weights_below(rd: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(mu) = queue.pop_front() {
        for a in rd.positive_roots_w() {
            let nu = mu.sub(a);
            if nu.is_dominant() && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort_by_key(|mu| {
        (
            rd.height(&lambda.sub(mu)).expect("lambda - mu lies in Q"),
            mu.clone(),
        )
    });
    out
}

/// Freudenthal's recursion for the weight multiplicities of `Delta(lambda)`.
pub fn freudenthal(rd: &RootDatum, lambda: &Weight) -> Result<WeightMultTable> {
    check_dominant(lambda)?;
    let rho = rd.rho();
    let lr = lambda.add(&rho);
    let top = rd.form(&lr, &lr);
    let mut dom: BTreeMap<Weight, i64> = BTreeMap::new();
    for mu in dominant_weights_below(rd, lambda) {
        if &mu == lambda {
            dom.insert(mu, 1);
            continue;
        }
        let mut sum = Q64::from_integer(0);
        for a in rd.positive_roots_w() {
            let mut j = 1;
            loop {
                let nu = mu.add(&a.scale(j));
                let rep = rd.dominant_rep(&nu);
                if !rd.dominates(lambda, &rep) {
                    break;
                }
                let m = dom.get(&rep).copied().unwrap_or(0);
                if m != 0 {
                    sum += rd.form(&nu, a) * m;
                }
                j += 1;
            }
        }
        let mr = mu.add(&rho);
        let denom = top - rd.form(&mr, &mr);
        let m = sum * 2 / denom;
        if !m.is_integer() {
            return Err(Error::Invalid(format!("non-integral multiplicity at {}", mu)));
        }
        let m = m.to_integer();
        if m != 0 {
            dom.insert(mu, m);
        }
    }
    let mut mults = BTreeMap::new();
    for (mu, m) in dom {
        for nu in rd.weyl_orbit(&mu) {
            mults.insert(nu, m);
        }
    }
    Ok(WeightMultTable {
        lambda: lambda.clone(),
        mults,
    })
}

/// `prod_{alpha > 0} (lambda + rho, alpha^vee) / (rho, alpha^vee)`.
pub fn weyl_dim(rd: &RootDatum, lambda: &Weight) -> Result<BigInt> {
    check_dominant(lambda)?;
    let lr = lambda.add(&rd.rho());
    let rho = rd.rho();
    let mut acc = BigRational::one();
    for k in 0..rd.positive_roots().len() {
        let num = rd.coroot_pairing(&lr, k);
        let den = rd.coroot_pairing(&rho, k);
        acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}

/// Full character of `nabla(lambda)` (equivalently `Delta(lambda)`).
pub fn ch_nabla(rd: &RootDatum, lambda: &Weight) -> Result<FormalChar> {
    Ok(freudenthal(rd, lambda)?.to_char())
}

/// The Weyl–Bott operator on a single weight: `None` if `mu + rho` is
/// singular, otherwise `(sign, dominant)` with `w . mu = dominant`.
pub fn weyl_euler_term(rd: &RootDatum, mu: &Weight) -> Option<(i64, Weight)> {
    if rd.is_dot_singular(mu) {
        return None;
    }
    let rho = rd.rho();
    let (dom, steps) = rd.to_dominant(&mu.add(&rho));
    let sign = if steps.len() % 2 == 0 { 1 } else { -1 };
    Some((sign, dom.sub(&rho)))
}

/// The Euler operator as a signed character: `0` or `+-ch nabla(w . mu)`.
pub fn weyl_euler(rd: &RootDatum, mu: &Weight) -> Result<FormalChar> {
    match weyl_euler_term(rd, mu) {
        None => Ok(FormalChar::zero()),
        Some((s, lam)) => Ok(ch_nabla(rd, &lam)?.scale(s)),
    }
}

/// Multiplicities `c^nu_{lambda mu}` of `nabla(nu)` in `nabla(lambda) (x) nabla(mu)`.
pub fn tensor_decompose(
    rd: &RootDatum,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, i64>> {
    check_dominant(lambda)?;
    check_dominant(mu)?;
    // iterate over the weights of the smaller factor
    let (big, small) = if weyl_dim(rd, lambda)? >= weyl_dim(rd, mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let table = freudenthal(rd, small)?;
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in &table.mults {
        if let Some((s, dom)) = weyl_euler_term(rd, &big.add(nu)) {
            *out.entry(dom).or_insert(0) += s * m;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Expands a combination `sum_lambda c_lambda ch nabla(lambda)` into a character.
pub fn expand_nabla_combination(
    rd: &RootDatum,
    combo: &BTreeMap<Weight, i64>,
) -> Result<FormalChar> {
    let mut acc = FormalChar::zero();
    for (lam, c) in combo {
        acc = acc.add(&ch_nabla(rd, lam)?.scale(*c));
    }
    Ok(acc)
}

/// Dimension as a machine integer; panics only for absurdly large modules.
pub fn weyl_dim_i64(rd: &RootDatum, lambda: &Weight) -> Result<i64> {
    weyl_dim(rd, lambda)?
        .to_i64()
        .ok_or_else(|| Error::Invalid("dimension overflows i64".into()))
}

/// Zero-weight multiplicity `dim Delta(lambda)_0`.
pub fn zero_weight_mult(rd: &RootDatum, lambda: &Weight) -> Result<i64> {
    if !rd.in_root_lattice(lambda) {
        return Ok(0);
    }
    Ok(freudenthal(rd, lambda)?.mult(&Weight::zero(rd.rank())))
}
