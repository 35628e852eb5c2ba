//! Finite root data of types A–G: Cartan matrices, positive roots, the
//! normalized invariant form, and Weyl group actions on weights.
//!
//! Conventions: Bourbaki numbering, `a_ij = (alpha_j, alpha_i^vee)`, the
//! form is normalized so that short roots have `(alpha, alpha) = 2`, and
//! weights are stored in the fundamental-weight basis.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::lattice::{self, Q64};

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Sum of fundamental coordinates; the size measure used for dominant weights.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

/// `[1,0,-2]`
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

/// Accepts `1,0,-2` or `[1,0,-2]`.
impl FromStr for Weight {
    type Err = ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(t);
        if t.trim().is_empty() {
            return Err(ParseError::new(0, "empty weight literal"));
        }
        let mut out = Vec::new();
        let mut pos = 0;
        for part in t.split(',') {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| ParseError::new(pos, format!("bad coordinate '{}'", part.trim())))?;
            if v.abs() > 1 << 24 {
                return Err(ParseError::new(pos, "coordinate out of range"));
            }
            out.push(v);
            pos += part.len() + 1;
        }
        Ok(Weight(out))
    }
}

/// Cartan type label such as `A2` or `G2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !ok || rank > 16 {
            return Err(Error::UnknownType(format!("{}{}", family, rank)));
        }
        Ok(CartanType { family, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(fam, rank)
    }
}

/// A Weyl group element, stored as a reduced word and canonicalized by its
/// image of `rho`.
///
/// The word `[i1, ..., ik]` denotes `s_i1 s_i2 ... s_ik`; acting on a
/// weight applies `s_ik` first.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    rho_image: Weight,
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rho_image == other.rho_image
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rho_image.hash(state)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    kind: CartanType,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    cartan_inv: Vec<Vec<Q64>>,
    positive_roots: Vec<Vec<i64>>,
    positive_roots_w: Vec<Weight>,
    root_norms: Vec<i64>,
    fund_gram: Vec<Vec<Q64>>,
}

fn cartan_matrix(t: CartanType) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![1i64; n];
    match t.family {
        'A' => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        'B' => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 1][n - 2] = -2;
            for x in d.iter_mut().take(n - 1) {
                *x = 2;
            }
        }
        'C' => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            a[n - 2][n - 1] = -2;
            d[n - 1] = 2;
        }
        'D' => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        'E' => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        'F' => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
            d = vec![2, 2, 1, 1];
        }
        'G' => {
            a[0][1] = -3;
            a[1][0] = -1;
            d = vec![1, 3];
        }
        _ => unreachable!("validated by CartanType::new"),
    }
    (a, d)
}

impl RootDatum {
    /// Builds the root datum of a finite Cartan type.
    pub fn build(kind: CartanType) -> Result<Self> {
        let (cartan, d) = cartan_matrix(kind);
        let n = kind.rank;
        for i in 0..n {
            for j in 0..n {
                debug_assert_eq!(d[i] * cartan[i][j], d[j] * cartan[j][i], "symmetrizable");
            }
        }
        let cartan_inv = lattice::inverse(&cartan)
            .ok_or_else(|| Error::Invalid("singular Cartan matrix".into()))?;
        let fund_gram = (0..n)
            .map(|i| (0..n).map(|j| cartan_inv[i][j] * d[i]).collect())
            .collect();
        let mut rd = RootDatum {
            kind,
            cartan,
            d,
            cartan_inv,
            positive_roots: Vec::new(),
            positive_roots_w: Vec::new(),
            root_norms: Vec::new(),
            fund_gram,
        };
        rd.generate_roots();
        Ok(rd)
    }

    /// Convenience: `RootDatum::of("B2")`.
    pub fn of(label: &str) -> Result<Self> {
        Self::build(label.parse()?)
    }

    /// Positive roots by the string algorithm, in order of increasing height.
    fn generate_roots(&mut self) {
        let n = self.rank();
        let mut roots: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    // p = largest k with beta - k alpha_i a root
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if known.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        self.positive_roots_w = roots.iter().map(|r| self.root_to_weight(r)).collect();
        self.root_norms = roots
            .iter()
            .map(|r| {
                let w = self.root_to_weight(r);
                self.form_int(&w, &w).expect("root norms are integral") / 2
            })
            .collect();
        self.positive_roots = roots;
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    /// `a_ij = (alpha_j, alpha_i^vee)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `d_i = (alpha_i, alpha_i)/2`.
    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn d_i(&self, i: usize) -> u32 {
        self.d[i] as u32
    }

    /// Positive roots in simple-root coordinates, sorted by height.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates.
    pub fn positive_roots_w(&self) -> &[Weight] {
        &self.positive_roots_w
    }

    /// `(alpha, alpha)/2` for each positive root.
    pub fn root_norms(&self) -> &[i64] {
        &self.root_norms
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|j| self.cartan[j][i]).collect())
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn root_to_weight(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| self.cartan[j][i] * c[i]).sum())
                .collect(),
        )
    }

    /// Coordinates in the simple-root basis (rational in general).
    pub fn weight_to_root_q(&self, w: &Weight) -> Vec<Q64> {
        lattice::solve(&self.cartan_inv, &w.0)
    }

    /// Simple-root coordinates if `w` lies in the root lattice `Q`.
    pub fn weight_to_root(&self, w: &Weight) -> Option<Vec<i64>> {
        self.weight_to_root_q(w)
            .into_iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.weight_to_root(w).is_some()
    }

    /// `w` lies in `Q^+`.
    pub fn in_positive_cone(&self, w: &Weight) -> bool {
        self.weight_to_root(w)
            .is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Height `sum c_i` of `gamma = sum c_i alpha_i` in `Q`.
    pub fn height(&self, w: &Weight) -> Option<i64> {
        self.weight_to_root(w).map(|c| c.iter().sum())
    }

    /// The invariant form on `P`, exact.
    pub fn form(&self, a: &Weight, b: &Weight) -> Q64 {
        let mut acc = Q64::from_integer(0);
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y != 0 {
                    acc += self.fund_gram[i][j] * (x * y);
                }
            }
        }
        acc
    }

    /// The form when it is integral.
    pub fn form_int(&self, a: &Weight, b: &Weight) -> Option<i64> {
        let v = self.form(a, b);
        v.is_integer().then(|| v.to_integer())
    }

    /// As [`Self::form_int`], but an error naming the offending value.
    pub fn form_exact(&self, a: &Weight, b: &Weight) -> Result<i64> {
        let v = self.form(a, b);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::FractionalExponent(format!("({},{}) = {}", a, b, v)))
        }
    }

    /// `(lambda, alpha^vee)` for the `k`-th positive root.
    pub fn coroot_pairing(&self, w: &Weight, k: usize) -> i64 {
        let c = &self.positive_roots[k];
        let num: i64 = c
            .iter()
            .enumerate()
            .map(|(i, ci)| ci * self.d[i] * w.0[i])
            .sum();
        debug_assert_eq!(num % self.root_norms[k], 0);
        num / self.root_norms[k]
    }

    pub fn simple_reflect(&self, w: &Weight, i: usize) -> Weight {
        let k = w.0[i];
        if k == 0 {
            return w.clone();
        }
        Weight(
            (0..self.rank())
                .map(|j| w.0[j] - k * self.cartan[j][i])
                .collect(),
        )
    }

    /// Reflection in the `k`-th positive root.
    pub fn root_reflect(&self, w: &Weight, k: usize) -> Weight {
        let c = self.coroot_pairing(w, k);
        w.sub(&self.positive_roots_w[k].scale(c))
    }

    /// Returns `(dominant, word)` with `dominant = s_word[0] ... s_word[k-1] applied
    /// in order`, i.e. the element `u = s_{word[k-1]} ... s_{word[0]}` has `u w = dominant`.
    /// The number of steps is the length of `u` when `w` is regular.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, Vec<usize>) {
        let mut cur = w.clone();
        let mut steps = Vec::new();
        while let Some(i) = cur.0.iter().position(|&x| x < 0) {
            cur = self.simple_reflect(&cur, i);
            steps.push(i);
        }
        (cur, steps)
    }

    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        self.to_dominant(w).0
    }

    /// `lambda - mu` lies in `Q^+`.
    pub fn dominates(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.in_positive_cone(&lambda.sub(mu))
    }

    /// The Weyl group element with the given (not necessarily reduced) word.
    pub fn weyl_element(&self, word: &[usize]) -> WeylElement {
        let mut img = self.rho();
        for &i in word.iter().rev() {
            img = self.simple_reflect(&img, i);
        }
        self.element_from_rho_image(img)
    }

    fn element_from_rho_image(&self, img: Weight) -> WeylElement {
        // u(img) = rho with u = s_{steps.last} ... s_{steps[0]}; w = u^{-1} = s_{steps[0]} ... s_{steps.last}
        let (_, steps) = self.to_dominant(&img);
        WeylElement {
            word: steps,
            rho_image: img,
        }
    }

    pub fn identity(&self) -> WeylElement {
        self.weyl_element(&[])
    }

    pub fn act(&self, w: &WeylElement, x: &Weight) -> Weight {
        let mut out = x.clone();
        for &i in w.word.iter().rev() {
            out = self.simple_reflect(&out, i);
        }
        out
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        self.weyl_element(&word)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        self.weyl_element(&word)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, w: &WeylElement) -> usize {
        self.positive_roots_w
            .iter()
            .filter(|a| {
                let img = self.act(w, a);
                !self.in_positive_cone(&img)
            })
            .count()
    }

    pub fn longest_element(&self) -> WeylElement {
        self.element_from_rho_image(self.rho().neg())
    }

    /// All elements, by breadth-first search on the orbit of `rho`. Feasible
    /// up to a few hundred thousand elements.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        let rho = self.rho();
        seen.insert(rho.clone());
        queue.push_back(rho);
        let mut out = Vec::new();
        while let Some(img) = queue.pop_front() {
            for i in 0..self.rank() {
                let nxt = self.simple_reflect(&img, i);
                if seen.insert(nxt.clone()) {
                    queue.push_back(nxt);
                }
            }
            out.push(self.element_from_rho_image(img));
        }
        out
    }

    /// `|W|` from the classification.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.kind.family {
            'A' => fact(n + 1),
            'B' | 'C' => (1u128 << n) * fact(n),
            'D' => (1u128 << (n - 1)) * fact(n),
            'E' => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            'F' => 1152,
            'G' => 12,
            _ => unreachable!(),
        }
    }

    /// `|Delta^+|` from the classification.
    pub fn expected_positive_root_count(&self) -> usize {
        let n = self.rank();
        match self.kind.family {
            'A' => n * (n + 1) / 2,
            'B' | 'C' => n * n,
            'D' => n * (n - 1),
            'E' => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            'F' => 24,
            'G' => 6,
            _ => unreachable!(),
        }
    }

    /// `|P/Q|`, the product of the elementary divisors of the Cartan matrix.
    pub fn fundamental_group_order(&self) -> u64 {
        lattice::elementary_divisors(&self.cartan)
            .iter()
            .map(|&x| x as u64)
            .product()
    }

    /// The `W`-orbit of a weight.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank() {
                let y = self.simple_reflect(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Dot action `w . mu = w(mu + rho) - rho`.
    pub fn dot(&self, w: &WeylElement, mu: &Weight) -> Weight {
        let rho = self.rho();
        self.act(w, &mu.add(&rho)).sub(&rho)
    }

    /// `mu + rho` is fixed by some reflection.
    pub fn is_dot_singular(&self, mu: &Weight) -> bool {
        let shifted = mu.add(&self.rho());
        (0..self.positive_roots.len()).any(|k| self.coroot_pairing(&shifted, k) == 0)
    }

    /// All dominant weights `lambda` with `level(lambda) <= max_level`.
    pub fn dominant_weights_up_to(&self, max_level: i64) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if i == cur.len() {
                out.push(Weight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(i + 1, left - v, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, max_level, &mut cur, &mut out);
        out.sort_by_key(|w| (w.level(), w.clone()));
        out
    }

    /// Parses a weight literal and checks its rank.
    pub fn parse_weight(&self, s: &str) -> Result<Weight> {
        let w: Weight = s.parse()?;
        if w.rank() != self.rank() {
            return Err(Error::Invalid(format!(
                "weight {} has {} coordinates, {} needs {}",
                w,
                w.rank(),
                self.kind,
                self.rank()
            )));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TYPES: &[&str] = &[
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8",
        "F4", "G2",
    ];

    #[test]
    fn root_counts_match_classification() {
        for t in TYPES {
            let rd = RootDatum::of(t).unwrap();
            assert_eq!(rd.positive_roots().len(), rd.expected_positive_root_count(), "{t}");
        }
    }

    #[test]
    fn examples() {
        assert_eq!(RootDatum::of("A2").unwrap().positive_roots().len(), 3);
        assert_eq!(RootDatum::of("B2").unwrap().weyl_group().len(), 8);
        assert_eq!(RootDatum::of("G2").unwrap().d(), &[1, 3]);
        assert_eq!(RootDatum::of("A1").unwrap().fundamental_group_order(), 2);
        assert_eq!(RootDatum::of("G2").unwrap().fundamental_group_order(), 1);
        assert_eq!(RootDatum::of("A2").unwrap().fundamental_group_order(), 3);
    }

    #[test]
    fn fundamental_group_orders() {
        let expect = [
            ("A3", 4),
            ("B3", 2),
            ("C3", 2),
            ("D4", 4),
            ("D5", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
        ];
        for (t, o) in expect {
            assert_eq!(RootDatum::of(t).unwrap().fundamental_group_order(), o, "{t}");
        }
    }

    #[test]
    fn rejects_bad_labels() {
        for bad in ["A0", "B1", "D3", "E5", "E9", "F3", "G3", "H3", "", "A", "Ax"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn form_reproduces_cartan_and_normalization() {
        for t in TYPES {
            let rd = RootDatum::of(t).unwrap();
            let n = rd.rank();
            for i in 0..n {
                let ai = rd.simple_root(i);
                for j in 0..n {
                    let aj = rd.simple_root(j);
                    // a_ij = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
                    let v = rd.form(&aj, &ai) * 2 / rd.form(&ai, &ai);
                    assert_eq!(v, Q64::from_integer(rd.cartan()[i][j]), "{t} {i} {j}");
                }
            }
            let min_norm = rd.root_norms().iter().min().unwrap();
            assert_eq!(*min_norm, 1, "{t}: short roots have (a,a)=2");
        }
    }

    #[test]
    fn rho_is_half_sum_and_pairs_to_one() {
        for t in TYPES {
            let rd = RootDatum::of(t).unwrap();
            let sum = rd
                .positive_roots_w()
                .iter()
                .fold(Weight::zero(rd.rank()), |a, b| a.add(b));
            assert_eq!(sum, rd.rho().scale(2), "{t}");
        }
    }

    #[test]
    fn weyl_orbit_examples() {
        let a1 = RootDatum::of("A1").unwrap();
        let orb = a1.weyl_orbit(&Weight(vec![1]));
        assert_eq!(orb.into_iter().collect::<Vec<_>>(), vec![Weight(vec![-1]), Weight(vec![1])]);
        let a2 = RootDatum::of("A2").unwrap();
        assert_eq!(a2.weyl_orbit(&a2.rho()).len(), 6);
        assert_eq!(a2.weyl_orbit(&Weight::zero(2)).len(), 1);
    }

    #[test]
    fn weyl_group_orders_by_enumeration() {
        for t in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let rd = RootDatum::of(t).unwrap();
            assert_eq!(rd.weyl_group().len() as u128, rd.weyl_group_order(), "{t}");
        }
    }

    #[test]
    fn length_equals_inversions() {
        for t in ["A2", "B2", "G2", "A3"] {
            let rd = RootDatum::of(t).unwrap();
            for w in rd.weyl_group() {
                assert_eq!(w.length(), rd.inversions(&w), "{t} {w}");
            }
            assert_eq!(rd.longest_element().length(), rd.positive_roots().len());
        }
    }

    #[test]
    fn reduced_words_act_consistently() {
        let rd = RootDatum::of("B2").unwrap();
        let lam = Weight(vec![3, 5]);
        // s1 s2 s1 s2 = s2 s1 s2 s1 in B2
        let a = rd.weyl_element(&[0, 1, 0, 1]);
        let b = rd.weyl_element(&[1, 0, 1, 0]);
        assert_eq!(a, b);
        assert_eq!(rd.act(&a, &lam), rd.act(&b, &lam));
        // non-reduced input is reduced
        assert_eq!(rd.weyl_element(&[0, 0, 1]).length(), 1);
    }

    #[test]
    fn weight_literals() {
        assert_eq!("1,0,-2".parse::<Weight>().unwrap(), Weight(vec![1, 0, -2]));
        assert_eq!("[3]".parse::<Weight>().unwrap(), Weight(vec![3]));
        assert!("".parse::<Weight>().is_err());
        assert!("1,,2".parse::<Weight>().is_err());
        assert!(RootDatum::of("A2").unwrap().parse_weight("1").is_err());
    }
}
