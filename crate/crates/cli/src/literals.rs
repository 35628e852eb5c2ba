//! Command-line literals.

use qrt::charring::TorusPoint;
use qrt::drinfeld::UWord;
use qrt::ring::{parse_laurent, parse_laurent_in, parse_multi, CycCtx, CycScalar, MultiLaurent, RatFunc};
use qrt::rootdata::{RootDatum, Weight};

use crate::Failure;

pub fn root_datum(ty: &str) -> Result<RootDatum, Failure> {
    Ok(RootDatum::of(ty)?)
}

pub fn weight(rd: &RootDatum, s: &str) -> Result<Weight, Failure> {
    Ok(rd.parse_weight(s)?)
}

pub fn word(rd: &RootDatum, s: &str) -> Result<UWord, Failure> {
    Ok(UWord::parse_for(s, rd)?)
}

fn split(s: &str, rank: usize) -> Result<Vec<&str>, Failure> {
    let parts: Vec<&str> = s.split(',').map(|p| p.trim()).collect();
    if parts.len() != rank {
        return Err(Failure::Usage(format!(
            "expected {} comma-separated values, got {}",
            rank,
            parts.len()
        )));
    }
    Ok(parts)
}

/// A point with values in `Q(q)` or, if any literal mentions `z`, in
/// `Z[q^±, z1^±, ...]`.
pub enum Point {
    Exact(TorusPoint<RatFunc>),
    Symbolic(TorusPoint<MultiLaurent>),
}

pub fn point(rd: &RootDatum, s: &str) -> Result<Point, Failure> {
    let rank = rd.rank();
    let parts = split(s, rank)?;
    if s.contains('z') {
        let vals = parts
            .iter()
            .map(|p| parse_multi(p, rank))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Point::Symbolic(TorusPoint::new(&rank, vals)?))
    } else {
        let vals = parts
            .iter()
            .map(|p| parse_laurent(p).map(RatFunc::from_laurent))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Point::Exact(TorusPoint::new(&(), vals)?))
    }
}

/// Values in `Z[x]/(Phi_m(x))`, literals in `x`.
pub fn cyc_point(rd: &RootDatum, s: &str, m: u64) -> Result<TorusPoint<CycScalar>, Failure> {
    if m == 0 {
        return Err(Failure::Usage("root order must be positive".into()));
    }
    let ctx = CycCtx::level(m);
    let vals = split(s, rd.rank())?
        .iter()
        .map(|p| parse_laurent_in(p, "x").map(|l| CycScalar::from_generator_poly(ctx, &l)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TorusPoint::new(&ctx, vals)?)
}

/// Comma-separated integers.
pub fn ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Usage(format!("bad integer {:?}", p)))
        })
        .collect()
}
