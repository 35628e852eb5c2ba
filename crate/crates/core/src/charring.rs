//! The group algebra `R[P]` and its twin `O_R(H)`, with the twisted Weyl
//! actions `w o e(lambda)` and `w . chi_lambda`, torus points, and the
//! invariant basis `c(lambda)`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::repchar;
use crate::ring::{parse_laurent, LaurentPoly, Scalar, MAX_EXPONENT};
use crate::rootdata::{RootDatum, Weight, WeylElement};

/// Which lattice reading a [`PChar`] carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// `e(lambda)` in `R[P]`
    E,
    /// `chi_lambda` in `O_R(H)`
    Chi,
}

impl Basis {
    fn tag(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::Chi => "chi",
        }
    }
}

/// A finitely supported function `P -> S`.
#[derive(Clone, PartialEq, Debug)]
pub struct PChar<S: Scalar> {
    ctx: S::Ctx,
    basis: Basis,
    terms: BTreeMap<Weight, S>,
}

impl<S: Scalar> PChar<S> {
    pub fn zero(ctx: &S::Ctx, basis: Basis) -> Self {
        PChar {
            ctx: ctx.clone(),
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(ctx: &S::Ctx, basis: Basis, w: Weight, c: S) -> Self {
        let mut p = Self::zero(ctx, basis);
        p.add_term(w, c);
        p
    }

    /// `e(lambda)` or `chi_lambda` with coefficient one.
    pub fn basis_element(ctx: &S::Ctx, basis: Basis, w: Weight) -> Self {
        Self::monomial(ctx, basis, w, S::one(ctx))
    }

    pub fn add_term(&mut self, w: Weight, c: S) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(w, v);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    pub fn coeff(&self, w: &Weight) -> S {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| S::zero(&self.ctx))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &S)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Weight> {
        self.terms.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_shape(&self, o: &Self) {
        assert_eq!(self.basis, o.basis, "mixing e and chi readings");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_shape(o);
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        PChar {
            ctx: self.ctx.clone(),
            basis: self.basis,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(&self.ctx, self.basis);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(k));
        }
        out
    }

    /// Product in the group algebra: `e(a)e(b) = e(a+b)`.
    pub fn mul(&self, o: &Self) -> Self {
        self.same_shape(o);
        let mut out = Self::zero(&self.ctx, self.basis);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.add(b), x.mul(y));
            }
        }
        out
    }

    /// Transport along `e(2 lambda) <-> chi_{-lambda}`.
    ///
    /// From the `e` reading every weight must lie in `2P`.
    pub fn translate(&self) -> Result<Self> {
        let mut out = Self::zero(
            &self.ctx,
            match self.basis {
                Basis::E => Basis::Chi,
                Basis::Chi => Basis::E,
            },
        );
        for (w, c) in &self.terms {
            let img = match self.basis {
                Basis::E => {
                    if w.0.iter().any(|x| x % 2 != 0) {
                        return Err(Error::Invalid(format!("e{} is not in R[2P]", w)));
                    }
                    Weight(w.0.iter().map(|x| -x / 2).collect())
                }
                Basis::Chi => w.scale(-2),
            };
            out.add_term(img, c.clone());
        }
        Ok(out)
    }

    /// Applies a ring map coefficientwise.
    pub fn map_scalars<T: Scalar>(&self, ctx: &T::Ctx, f: impl Fn(&S) -> T) -> PChar<T> {
        let mut out = PChar::zero(ctx, self.basis);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }
}

impl PChar<LaurentPoly> {
    /// Base change along the structure map `Z[q, q^-1] -> S`.
    pub fn base_change<S: Scalar>(&self, ctx: &S::Ctx) -> PChar<S> {
        self.map_scalars(ctx, |c| S::from_laurent(ctx, c))
    }

    /// Parses `q^-1*chi[1] + q*chi[-1]`; coefficients may be bracketed
    /// polynomials like `(q + 1)*e[2,0]`.
    pub fn parse(src: &str) -> std::result::Result<Self, ParseError> {
        parse_pchar(src)
    }
}

impl<S: Scalar> fmt::Display for PChar<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let tag = self.basis.tag();
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let s = c.to_string();
            let single = !s.trim_start_matches('-').contains([' ', '/']);
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if single => (true, rest.to_string()),
                _ => (false, s.clone()),
            };
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{}", sep)?;
            if body == "1" {
                write!(f, "{}{}", tag, w)?;
            } else if single {
                write!(f, "{}*{}{}", body, tag, w)?;
            } else {
                write!(f, "({})*{}{}", body, tag, w)?;
            }
        }
        Ok(())
    }
}

/// Cap on the terms of a parsed coefficient.
const MAX_COEFF_TERMS: usize = 1 << 12;

/// Products of parsed factors stay within the parser's own exponent and size limits.
fn bounded_product(
    a: &LaurentPoly,
    b: &LaurentPoly,
    pos: usize,
) -> std::result::Result<LaurentPoly, ParseError> {
    if a.num_terms().saturating_mul(b.num_terms()) > MAX_COEFF_TERMS {
        return Err(ParseError::new(pos, "coefficient too large"));
    }
    let p = a * b;
    let within = |e: Option<i64>| e.is_none_or(|e| e.abs() <= MAX_EXPONENT);
    if !within(p.min_exp()) || !within(p.max_exp()) {
        return Err(ParseError::new(pos, "exponent out of range"));
    }
    Ok(p)
}

fn parse_pchar(src: &str) -> std::result::Result<PChar<LaurentPoly>, ParseError> {
    let bytes = src.as_bytes();
    let mut pos = 0;
    let skip = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip(&mut pos);
    if pos == bytes.len() {
        return Err(ParseError::new(pos, "empty character"));
    }
    if src.trim() == "0" {
        return Ok(PChar::zero(&(), Basis::Chi));
    }
    let mut basis: Option<Basis> = None;
    let mut out: Vec<(Weight, LaurentPoly)> = Vec::new();
    let mut sign = 1i64;
    if bytes[pos] == b'-' || bytes[pos] == b'+' {
        sign = if bytes[pos] == b'-' { -1 } else { 1 };
        pos += 1;
    }
    loop {
        // one term: factors separated by '*'
        let mut coeff = LaurentPoly::constant(sign);
        let mut wt: Option<Weight> = None;
        loop {
            skip(&mut pos);
            if pos >= bytes.len() {
                return Err(ParseError::new(pos, "expected factor"));
            }
            let rest = &src[pos..];
            if rest.starts_with('(') {
                let close = find_close(rest)
                    .ok_or_else(|| ParseError::new(pos, "unbalanced parenthesis"))?;
                let inner = parse_laurent(&rest[1..close])
                    .map_err(|e| ParseError::new(pos + 1 + e.pos, e.msg))?;
                coeff = bounded_product(&coeff, &inner, pos)?;
                pos += close + 1;
            } else if rest.starts_with("chi[") || rest.starts_with("e[") {
                let b = if rest.starts_with('c') { Basis::Chi } else { Basis::E };
                let open = rest.find('[').unwrap_or(0);
                let close = rest
                    .find(']')
                    .ok_or_else(|| ParseError::new(pos, "unterminated weight"))?;
                let w: Weight = rest[open + 1..close]
                    .parse()
                    .map_err(|e: ParseError| ParseError::new(pos + open + 1 + e.pos, e.msg))?;
                if let Some(prev) = basis {
                    if prev != b {
                        return Err(ParseError::new(pos, "mixed e and chi terms"));
                    }
                }
                basis = Some(b);
                if wt.is_some() {
                    return Err(ParseError::new(pos, "two basis factors in one term"));
                }
                if let Some((first, _)) = out.first() {
                    if first.rank() != w.rank() {
                        return Err(ParseError::new(pos, "inconsistent weight rank"));
                    }
                }
                wt = Some(w);
                pos += close + 1;
            } else {
                // a bare scalar factor: integer or q-power, up to the next '*', '+', '-'
                let end = scalar_factor_end(rest);
                if end == 0 {
                    return Err(ParseError::new(pos, "expected factor"));
                }
                let p = parse_laurent(&rest[..end])
                    .map_err(|e| ParseError::new(pos + e.pos, e.msg))?;
                coeff = bounded_product(&coeff, &p, pos)?;
                pos += end;
            }
            skip(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        let w = wt.ok_or_else(|| ParseError::new(pos, "term without chi[..] or e[..]"))?;
        out.push((w, coeff));
        skip(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'+' => sign = 1,
            b'-' => sign = -1,
            _ => return Err(ParseError::new(pos, "expected '+' or '-'")),
        }
        pos += 1;
    }
    let mut p = PChar::zero(&(), basis.unwrap_or(Basis::Chi));
    for (w, c) in out {
        p.add_term(w, c);
    }
    Ok(p)
}

fn find_close(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// End of a scalar factor such as `3` or `q^-2`: stops at `*`, or at a
/// `+`/`-` that is not an exponent sign.
fn scalar_factor_end(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        match b[i] {
            b'*' | b'+' | b'(' | b'[' => break,
            b'-' if i == 0 || b[i - 1] != b'^' => break,
            _ => i += 1,
        }
    }
    i
}

/// `q^{(w lambda - lambda, rho)}`, which is always an integral power.
fn circ_exponent(rd: &RootDatum, w: &WeylElement, lambda: &Weight) -> (Weight, i64) {
    let img = rd.act(w, lambda);
    let e = rd
        .form_int(&img.sub(lambda), &rd.rho())
        .expect("(w lambda - lambda, rho) is integral on P");
    (img, e)
}

/// `w o e(lambda) = q^{(w lambda - lambda, rho)} e(w lambda)`.
pub fn act_circ<S: Scalar>(rd: &RootDatum, w: &WeylElement, f: &PChar<S>) -> Result<PChar<S>> {
    if f.basis != Basis::E {
        return Err(Error::Invalid("act_circ needs the e-reading".into()));
    }
    let mut out = PChar::zero(&f.ctx, Basis::E);
    for (lam, c) in &f.terms {
        let (img, e) = circ_exponent(rd, w, lam);
        out.add_term(img, c.mul(&S::q_pow(&f.ctx, e)));
    }
    Ok(out)
}

/// `w . chi_lambda = q^{-2(w lambda - lambda, rho)} chi_{w lambda}`.
pub fn act_bullet<S: Scalar>(rd: &RootDatum, w: &WeylElement, f: &PChar<S>) -> Result<PChar<S>> {
    if f.basis != Basis::Chi {
        return Err(Error::Invalid("act_bullet needs the chi-reading".into()));
    }
    let mut out = PChar::zero(&f.ctx, Basis::Chi);
    for (lam, c) in &f.terms {
        let (img, e) = circ_exponent(rd, w, lam);
        out.add_term(img, c.mul(&S::q_pow(&f.ctx, -2 * e)));
    }
    Ok(out)
}

/// Invariant under every simple reflection in the dot action.
pub fn is_bullet_invariant<S: Scalar>(rd: &RootDatum, f: &PChar<S>) -> Result<bool> {
    for i in 0..rd.rank() {
        let s = rd.weyl_element(&[i]);
        if &act_bullet(rd, &s, f)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `c(lambda) = sum_mu q^{-2(rho, mu)} dim Delta(lambda)_mu chi_mu`.
pub fn c_basis(rd: &RootDatum, lambda: &Weight) -> Result<PChar<LaurentPoly>> {
    let table = repchar::freudenthal(rd, lambda)?;
    c_basis_from_mults(rd, &table.mults)
}

/// `c(lambda)` from an externally supplied multiplicity table.
pub fn c_basis_from_mults(
    rd: &RootDatum,
    mults: &BTreeMap<Weight, i64>,
) -> Result<PChar<LaurentPoly>> {
    let rho2 = rd.rho().scale(2);
    let mut out = PChar::zero(&(), Basis::Chi);
    for (mu, m) in mults {
        let e = rd.form_exact(&rho2, mu)?;
        out.add_term(mu.clone(), LaurentPoly::monomial(*m, -e));
    }
    Ok(out)
}

/// A point of `H(R)`: its values on the fundamental weights.
#[derive(Clone, PartialEq, Debug)]
pub struct TorusPoint<S: Scalar> {
    ctx: S::Ctx,
    values: Vec<S>,
    inverses: Vec<S>,
}

impl<S: Scalar> TorusPoint<S> {
    /// Fails if some value is not a unit of `S`.
    pub fn new(ctx: &S::Ctx, values: Vec<S>) -> Result<Self> {
        let inverses = values
            .iter()
            .map(|v| {
                v.inv()
                    .ok_or_else(|| Error::NotInvertible(v.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TorusPoint {
            ctx: ctx.clone(),
            values,
            inverses,
        })
    }

    pub fn identity(ctx: &S::Ctx, rank: usize) -> Self {
        TorusPoint {
            ctx: ctx.clone(),
            values: vec![S::one(ctx); rank],
            inverses: vec![S::one(ctx); rank],
        }
    }

    /// `lambda -> q^{k (lambda, rho)}` for even `k`; `k = 2` gives `t_{2 rho}`.
    pub fn rho_power(rd: &RootDatum, ctx: &S::Ctx, k: i64) -> Result<Self> {
        let rho = rd.rho();
        let mut vals = Vec::new();
        for i in 0..rd.rank() {
            let e = rd.form(&Weight::fundamental(rd.rank(), i), &rho) * k;
            if !e.is_integer() {
                return Err(Error::FractionalExponent(e.to_string()));
            }
            vals.push(S::q_pow(ctx, e.to_integer()));
        }
        Self::new(ctx, vals)
    }

    /// `t_{2 rho}`: `chi_lambda -> q^{2(lambda, rho)}`.
    pub fn two_rho(rd: &RootDatum, ctx: &S::Ctx) -> Self {
        Self::rho_power(rd, ctx, 2).expect("2(lambda, rho) is integral")
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn ctx(&self) -> &S::Ctx {
        &self.ctx
    }

    /// `t(chi_lambda)`.
    pub fn eval(&self, lambda: &Weight) -> S {
        let mut acc = S::one(&self.ctx);
        for (i, &k) in lambda.0.iter().enumerate() {
            let base = if k >= 0 { &self.values[i] } else { &self.inverses[i] };
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(base);
            }
        }
        acc
    }

    /// Pointwise product in the group `H(R)`.
    pub fn mul(&self, o: &Self) -> Self {
        TorusPoint {
            ctx: self.ctx.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| a.mul(b)).collect(),
            inverses: self
                .inverses
                .iter()
                .zip(&o.inverses)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    /// `lambda -> t(chi_lambda)^k`.
    pub fn pow(&self, k: i64) -> Self {
        let rank = self.rank();
        let vals = (0..rank)
            .map(|i| {
                let w = Weight::fundamental(rank, i).scale(k);
                (self.eval(&w), self.eval(&w.neg()))
            })
            .collect::<Vec<_>>();
        TorusPoint {
            ctx: self.ctx.clone(),
            values: vals.iter().map(|p| p.0.clone()).collect(),
            inverses: vals.into_iter().map(|p| p.1).collect(),
        }
    }

    /// Plain action `(w t)(chi_lambda) = t(chi_{w^-1 lambda})`.
    pub fn act_plain(&self, rd: &RootDatum, w: &WeylElement) -> Self {
        let winv = rd.inverse(w);
        let rank = self.rank();
        let mut values = Vec::with_capacity(rank);
        let mut inverses = Vec::with_capacity(rank);
        for i in 0..rank {
            let img = rd.act(&winv, &Weight::fundamental(rank, i));
            values.push(self.eval(&img));
            inverses.push(self.eval(&img.neg()));
        }
        TorusPoint {
            ctx: self.ctx.clone(),
            values,
            inverses,
        }
    }

    /// `<f, t> = sum c_lambda t(chi_lambda)` for `f` in the chi-reading.
    pub fn pair(&self, f: &PChar<S>) -> Result<S> {
        if f.basis != Basis::Chi {
            return Err(Error::Invalid("torus points pair with the chi-reading".into()));
        }
        let mut acc = S::zero(&self.ctx);
        for (lam, c) in &f.terms {
            acc = acc.add(&c.mul(&self.eval(lam)));
        }
        Ok(acc)
    }
}

impl<S: Scalar> fmt::Display for TorusPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `w . t = w(t t_{-2 rho}) t_{2 rho}`.
pub fn act_bullet_torus<S: Scalar>(
    rd: &RootDatum,
    w: &WeylElement,
    t: &TorusPoint<S>,
) -> TorusPoint<S> {
    let plus = TorusPoint::two_rho(rd, &t.ctx);
    let minus = TorusPoint::rho_power(rd, &t.ctx, -2).expect("integral");
    t.mul(&minus).act_plain(rd, w).mul(&plus)
}

/// The dot orbit of `t`, in discovery order.
pub fn bullet_orbit<S: Scalar>(rd: &RootDatum, t: &TorusPoint<S>) -> Vec<TorusPoint<S>> {
    let gens: Vec<WeylElement> = (0..rd.rank()).map(|i| rd.weyl_element(&[i])).collect();
    let mut orbit = vec![t.clone()];
    let mut idx = 0;
    while idx < orbit.len() {
        let cur = orbit[idx].clone();
        for s in &gens {
            let nxt = act_bullet_torus(rd, s, &cur);
            if !orbit.contains(&nxt) {
                orbit.push(nxt);
            }
        }
        idx += 1;
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MultiLaurent;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn circ_on_a1() {
        let rd = RootDatum::of("A1").unwrap();
        let s = rd.weyl_element(&[0]);
        let f = PChar::<LaurentPoly>::basis_element(&(), Basis::E, w(&[1]));
        let g = act_circ(&rd, &s, &f).unwrap();
        assert_eq!(g, PChar::monomial(&(), Basis::E, w(&[-1]), LaurentPoly::q_pow(-1)));
        let z = PChar::<LaurentPoly>::basis_element(&(), Basis::E, w(&[0]));
        assert_eq!(act_circ(&rd, &s, &z).unwrap(), z);
        assert_eq!(act_circ(&rd, &rd.identity(), &f).unwrap(), f);
    }

    #[test]
    fn bullet_on_a1() {
        let rd = RootDatum::of("A1").unwrap();
        let s = rd.weyl_element(&[0]);
        let f = PChar::<LaurentPoly>::basis_element(&(), Basis::Chi, w(&[1]));
        let g = act_bullet(&rd, &s, &f).unwrap();
        assert_eq!(g, PChar::monomial(&(), Basis::Chi, w(&[-1]), LaurentPoly::q_pow(2)));
        // dictionary: s o e(2 w) corresponds to s . chi_{-w}
        let e2 = PChar::<LaurentPoly>::basis_element(&(), Basis::E, w(&[2]));
        let lhs = act_circ(&rd, &s, &e2).unwrap().translate().unwrap();
        let rhs = act_bullet(&rd, &s, &e2.translate().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn c_basis_examples() {
        let rd = RootDatum::of("A1").unwrap();
        let c1 = c_basis(&rd, &w(&[1])).unwrap();
        assert_eq!(c1.to_string(), "q^-1*chi[1] + q*chi[-1]");
        let c2 = c_basis(&rd, &w(&[2])).unwrap();
        assert_eq!(c2.coeff(&w(&[2])), LaurentPoly::q_pow(-2));
        assert_eq!(c2.coeff(&w(&[0])), LaurentPoly::one());
        assert_eq!(c2.coeff(&w(&[-2])), LaurentPoly::q_pow(2));
        let c0 = c_basis(&RootDatum::of("B2").unwrap(), &w(&[0, 0])).unwrap();
        assert_eq!(c0, PChar::basis_element(&(), Basis::Chi, w(&[0, 0])));
        assert!(c_basis(&rd, &w(&[-1])).is_err());
    }

    #[test]
    fn invariance_examples() {
        let rd = RootDatum::of("A1").unwrap();
        assert!(is_bullet_invariant(&rd, &c_basis(&rd, &w(&[1])).unwrap()).unwrap());
        let chi = PChar::<LaurentPoly>::basis_element(&(), Basis::Chi, w(&[1]));
        assert!(!is_bullet_invariant(&rd, &chi).unwrap());
        let one = PChar::<LaurentPoly>::basis_element(&(), Basis::Chi, w(&[0]));
        assert!(is_bullet_invariant(&rd, &one).unwrap());
    }

    #[test]
    fn torus_bullet_on_a1() {
        let rd = RootDatum::of("A1").unwrap();
        let s = rd.weyl_element(&[0]);
        let z = MultiLaurent::var_pow(1, 1, 1);
        let t = TorusPoint::new(&1, vec![z]).unwrap();
        let st = act_bullet_torus(&rd, &s, &t);
        let expect = MultiLaurent::q_pow(1, 2).mul(&MultiLaurent::var_pow(1, 1, -1));
        assert_eq!(st.values()[0], expect);
        assert_eq!(act_bullet_torus(&rd, &rd.identity(), &t), t);
        // z = q is fixed
        let fixed = TorusPoint::<LaurentPoly>::new(&(), vec![LaurentPoly::q()]).unwrap();
        assert_eq!(act_bullet_torus(&rd, &s, &fixed), fixed);
        let t3 = TorusPoint::<LaurentPoly>::new(&(), vec![LaurentPoly::q_pow(3)]).unwrap();
        assert_eq!(act_bullet_torus(&rd, &s, &t3).values()[0], LaurentPoly::q_pow(-1));
    }

    #[test]
    fn two_rho_pairs_as_expected() {
        let rd = RootDatum::of("A2").unwrap();
        let t = TorusPoint::<LaurentPoly>::two_rho(&rd, &());
        // 2(rho, rho) = 4 in A2
        assert_eq!(t.eval(&rd.rho()), LaurentPoly::q_pow(4));
    }

    #[test]
    fn text_round_trip() {
        let rd = RootDatum::of("A2").unwrap();
        let c = c_basis(&rd, &w(&[1, 1])).unwrap();
        assert_eq!(PChar::parse(&c.to_string()).unwrap(), c);
        let p = PChar::parse("(q + 1)*e[2,0] - 3*q^-2*e[0,0]").unwrap();
        assert_eq!(p.basis(), Basis::E);
        assert_eq!(p.coeff(&w(&[2, 0])), lp(&[(1, 1), (0, 1)]));
        assert_eq!(p.coeff(&w(&[0, 0])), lp(&[(-2, -3)]));
        assert_eq!(PChar::parse(&p.to_string()).unwrap(), p);
        for bad in ["", "chi[1", "q*", "chi[1]*e[1]", "chi[1] + e[2]", "chi[1] chi[2]", "(q*chi[1]"] {
            assert!(PChar::parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn parsed_products_stay_printable() {
        let f = PChar::<LaurentPoly>::parse("(q^999925)*e[2]*(q^471000)").map(|_| ());
        assert!(f.is_err());
        let factors: Vec<String> = (0..13).map(|k| format!("(1 + q^{})", 1 << k)).collect();
        let big = factors.join("*") + "*chi[1]";
        assert!(PChar::<LaurentPoly>::parse(&big).is_err());
        let ok = PChar::<LaurentPoly>::parse("(q^1000)*(q^-999)*chi[1]").unwrap();
        assert_eq!(PChar::parse(&ok.to_string()).unwrap(), ok);
    }
}
