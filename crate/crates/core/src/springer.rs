//! Total cohomology of type-A Springer fibres: for a unipotent of Jordan
//! type `p`, `dim H*(B_u) = n! / prod p_i!`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition(Vec<u32>);

/// Largest `n` accepted by the parser.
pub const MAX_SIZE: u32 = 512;

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `self` dominates `o` (same size, partial sums at least as large).
    pub fn dominates(&self, o: &Partition) -> bool {
        if self.size() != o.size() {
            return false;
        }
        let (mut a, mut b) = (0u32, 0u32);
        let len = self.0.len().max(o.0.len());
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += o.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Dominance as a partial order.
    pub fn dominance_cmp(&self, o: &Partition) -> Option<Ordering> {
        match (self.dominates(o), o.dominates(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// All partitions of `n`, largest first part first.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// `2,1`, `(2,1)` or `2 1`.
    fn from_str(src: &str) -> Result<Self, ParseError> {
        let t = src.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t);
        let mut parts = Vec::new();
        let mut total = 0u32;
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| ParseError::new(0, format!("bad part {:?}", tok)))?;
            if p == 0 {
                return Err(ParseError::new(0, "parts must be positive"));
            }
            total = total.saturating_add(p);
            if total > MAX_SIZE {
                return Err(ParseError::new(0, "partition too large"));
            }
            parts.push(p);
        }
        if parts.is_empty() {
            return Err(ParseError::new(0, "empty partition"));
        }
        Ok(Partition::new(parts))
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, k| a * k)
}

/// `n! / prod p_i!`.
pub fn multinomial(p: &Partition) -> BigUint {
    let den = p.0.iter().fold(BigUint::one(), |a, &k| a * factorial(k));
    factorial(p.size()) / den
}

pub fn springer_total_cohomology_dim(p: &Partition) -> BigUint {
    multinomial(p)
}
