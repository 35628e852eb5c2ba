use serde_json::{json, Value};

use qrt::center::{check_level, h0_order, is_exceptional, is_regular, pair_compatible, q_index, xi_har, centralizer_roots};
use qrt::charring::{bullet_orbit, c_basis, is_bullet_invariant, PChar};
use qrt::drinfeld::{kappa_words, serre_certificate, tau, words_of_grading, Side};
use qrt::induction::verify_main_identity_truncated;
use qrt::repchar::{ch_nabla, freudenthal, tensor_decompose, weyl_dim, weyl_euler_term};
use qrt::ring::{LaurentPoly, MultiLaurent, RatFunc};
use qrt::rootdata::{RootDatum, Weight};
use qrt::springer::{springer_total_cohomology_dim, Partition};
use qrt::verma::{verify_theta, WeylModule};
use qrt::drinfeld::UWord;

use crate::literals::{self, Point};
use crate::report::Report;
use crate::{selftest, Command, Failure};

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::RootInfo { ty } => root_info(&literals::root_datum(&ty.ty)?),
        Command::Char { ty, lambda } => {
            let rd = literals::root_datum(&ty.ty)?;
            let lam = literals::weight(&rd, lambda)?;
            let ch = ch_nabla(&rd, &lam)?;
            let mut r = Report::new("char")
                .field("type", s(rd.kind()))
                .field("lambda", s(&lam))
                .field("dim", s(weyl_dim(&rd, &lam)?))
                .columns(&["weight", "mult"]);
            let terms: Vec<_> = ch.terms().collect();
            for (w, m) in terms.into_iter().rev() {
                r.row(vec![s(w), json!(m)]);
            }
            Ok(r)
        }
        Command::Freudenthal { ty, lambda, gram } => {
            let rd = literals::root_datum(&ty.ty)?;
            let lam = literals::weight(&rd, lambda)?;
            freudenthal_cmd(&rd, &lam, *gram)
        }
        Command::Tensor { ty, lambda, mu } => {
            let rd = literals::root_datum(&ty.ty)?;
            let a = literals::weight(&rd, lambda)?;
            let b = literals::weight(&rd, mu)?;
            let dec = tensor_decompose(&rd, &a, &b)?;
            let mut r = Report::new("tensor")
                .field("type", s(rd.kind()))
                .field("lambda", s(&a))
                .field("mu", s(&b))
                .columns(&["weight", "mult"]);
            for (w, m) in dec.iter().rev() {
                r.row(vec![s(w), json!(m)]);
            }
            Ok(r)
        }
        Command::Euler { ty, mu } => {
            let rd = literals::root_datum(&ty.ty)?;
            let mu = literals::weight(&rd, mu)?;
            let mut r = Report::new("euler").field("type", s(rd.kind())).field("mu", s(&mu));
            match weyl_euler_term(&rd, &mu) {
                None => {
                    r.push_field("singular", true);
                    r.push_field("result", "0");
                }
                Some((sign, lam)) => {
                    r.push_field("singular", false);
                    r.push_field("sign", sign);
                    r.push_field("dominant", s(&lam));
                    let pre = if sign < 0 { "-" } else { "" };
                    r.push_field("result", format!("{}ch_nabla{}", pre, lam));
                }
            }
            Ok(r)
        }
        Command::Tau { ty, x, y, grading } => {
            let rd = literals::root_datum(&ty.ty)?;
            tau_cmd(&rd, x.as_deref(), y.as_deref(), grading.as_deref())
        }
        Command::SerreCheck { ty, max_height } => {
            let rd = literals::root_datum(&ty.ty)?;
            let mut r = Report::new("serre-check")
                .field("type", s(rd.kind()))
                .field("max_height", *max_height)
                .columns(&["i", "j", "side", "vanishes"]);
            for i in 0..rd.rank() {
                for j in 0..rd.rank() {
                    if i == j {
                        continue;
                    }
                    for (side, name) in [(Side::Plus, "plus"), (Side::Minus, "minus")] {
                        let ok = serre_certificate(&rd, i, j, side, *max_height)?;
                        r.check(ok);
                        r.row(vec![json!(i + 1), json!(j + 1), s(name), json!(ok)]);
                    }
                }
            }
            Ok(r)
        }
        Command::Kappa { ty, v, u } => {
            let rd = literals::root_datum(&ty.ty)?;
            let v = literals::word(&rd, v)?;
            let u = literals::word(&rd, u)?;
            let val = kappa_words(&rd, &v, &u)?;
            Ok(Report::new("kappa")
                .field("type", s(rd.kind()))
                .field("v", s(&v))
                .field("u", s(&u))
                .field("value", s(val)))
        }
        Command::CBasis { ty, lambda } => {
            let rd = literals::root_datum(&ty.ty)?;
            let lam = literals::weight(&rd, lambda)?;
            let c = c_basis(&rd, &lam)?;
            let inv = is_bullet_invariant(&rd, &c)?;
            let mut r = Report::new("c-basis")
                .field("type", s(rd.kind()))
                .field("lambda", s(&lam))
                .field("element", s(&c))
                .field("dot_invariant", inv)
                .columns(&["weight", "coeff"]);
            r.check(inv);
            let mut terms: Vec<(&Weight, &LaurentPoly)> = c.terms().collect();
            terms.reverse();
            for (w, k) in terms {
                r.row(vec![s(w), s(k)]);
            }
            Ok(r)
        }
        Command::XiHar { ty, lambda, point } => {
            let rd = literals::root_datum(&ty.ty)?;
            let lam = literals::weight(&rd, lambda)?;
            let c = c_basis(&rd, &lam)?;
            let val = match literals::point(&rd, point)? {
                Point::Exact(t) => {
                    let f = c.map_scalars(&(), |p: &LaurentPoly| RatFunc::from_laurent(p.clone()));
                    xi_har(&rd, &t, &f)?.to_string()
                }
                Point::Symbolic(t) => {
                    let f: PChar<MultiLaurent> = c.base_change(&rd.rank());
                    xi_har(&rd, &t, &f)?.to_string()
                }
            };
            Ok(Report::new("xi-har")
                .field("type", s(rd.kind()))
                .field("lambda", s(&lam))
                .field("point", s(point))
                .field("value", s(val)))
        }
        Command::Regular { ty, point } => {
            let rd = literals::root_datum(&ty.ty)?;
            let (size, reg) = match literals::point(&rd, point)? {
                Point::Exact(t) => (bullet_orbit(&rd, &t).len(), is_regular(&rd, &t)),
                Point::Symbolic(t) => (bullet_orbit(&rd, &t).len(), is_regular(&rd, &t)),
            };
            Ok(Report::new("regular")
                .field("type", s(rd.kind()))
                .field("point", s(point))
                .field("orbit_size", size)
                .field("weyl_order", s(rd.weyl_group_order()))
                .field("regular", reg))
        }
        Command::CheckLevel { ty, ell, h0, root_order } => {
            let rd = literals::root_datum(&ty.ty)?;
            let h0 = match h0 {
                Some(h) => Some(literals::cyc_point(&rd, h, *root_order)?),
                None => None,
            };
            let rep = check_level(&rd, *ell, h0.as_ref())?;
            let mut r = Report::new("check-level")
                .field("type", s(rd.kind()))
                .field("ell", *ell)
                .field("a1", rep.a1)
                .field("a2", rep.a2)
                .field("a3", rep.a3)
                .field("a4", rep.a4.map_or(Value::Null, Value::Bool))
                .field("a5", rep.a5)
                .field("verdict", if rep.accept { "accept" } else { "reject" })
                .field("reasons", json!(rep.failures()));
            if let Some(idx) = rep.q_index {
                r.push_field("q_over_q0", idx.map_or(s("infinite"), |n| json!(n)));
            }
            Ok(r)
        }
        Command::Exceptional { ty, h0, root_order } => {
            let rd = literals::root_datum(&ty.ty)?;
            let h = literals::cyc_point(&rd, h0, *root_order)?;
            let ex = is_exceptional(&rd, &h)?;
            let roots: Vec<String> = centralizer_roots(&rd, &h)
                .iter()
                .map(|c| format!("{:?}", c))
                .collect();
            Ok(Report::new("exceptional")
                .field("type", s(rd.kind()))
                .field("h0", s(&h))
                .field("order", h0_order(&h)?)
                .field("centralizer_positive_roots", json!(roots))
                .field("q_over_q0", q_index(&rd, &h).map_or(s("infinite"), |n| json!(n)))
                .field("exceptional", ex))
        }
        Command::Compatible { ty, ell, point, h0, root_order } => {
            let rd = literals::root_datum(&ty.ty)?;
            let t = literals::cyc_point(&rd, point, *root_order)?;
            let h = literals::cyc_point(&rd, h0, *root_order)?;
            Ok(Report::new("compatible")
                .field("type", s(rd.kind()))
                .field("ell", *ell)
                .field("t_pow_ell", s(t.pow(*ell as i64)))
                .field("h0", s(&h))
                .field("compatible", pair_compatible(&rd, &t, *ell, &h)))
        }
        Command::VerifyTheta { ty, lambda, probe_height } => {
            let rd = literals::root_datum(&ty.ty)?;
            let lam = literals::weight(&rd, lambda)?;
            theta_cmd(&rd, &lam, *probe_height)
        }
        Command::VerifyMain { ty, cutoff, lambda } => {
            let rd = literals::root_datum(&ty.ty)?;
            let mut rep = verify_main_identity_truncated(&rd, *cutoff)?;
            if let Some(l) = lambda {
                let lam = literals::weight(&rd, l)?;
                match rep.row(&lam) {
                    Some(row) if row.complete => {
                        let row = row.clone();
                        rep.rows = vec![row];
                    }
                    _ => {
                        return Err(Failure::Truncated(format!(
                            "cutoff {} does not determine the coefficient at {}",
                            cutoff, lam
                        )))
                    }
                }
            }
            let mut r = Report::new("verify-main")
                .field("type", s(rd.kind()))
                .field("cutoff", *cutoff)
                .field("complete_weights", rep.rows.iter().filter(|x| x.complete).count())
                .field("mismatches", rep.mismatches().len())
                .columns(&["weight", "lhs", "rhs", "complete", "verdict"]);
            r.check(rep.passed());
            for row in &rep.rows {
                let verdict = match (row.complete, row.lhs == row.rhs) {
                    (false, _) => "incomplete",
                    (true, true) => "equal",
                    (true, false) => "MISMATCH",
                };
                r.row(vec![s(&row.lambda), json!(row.lhs), json!(row.rhs), json!(row.complete), s(verdict)]);
            }
            Ok(r)
        }
        Command::SpringerDim { partition, ty } => {
            let p: Partition = partition.parse()?;
            if let Some(t) = ty {
                let rd = literals::root_datum(t)?;
                if rd.kind().family != 'A' {
                    return Err(Failure::Usage(format!(
                        "unsupported: Springer dimensions are only available in type A, not {}",
                        rd.kind()
                    )));
                }
                if p.size() as usize != rd.rank() + 1 {
                    return Err(Failure::Usage(format!(
                        "{} is not a partition of {}",
                        p,
                        rd.rank() + 1
                    )));
                }
            }
            Ok(Report::new("springer-dim")
                .field("partition", s(&p))
                .field("n", p.size())
                .field("dim", s(springer_total_cohomology_dim(&p))))
        }
        Command::Selftest { seed, cases } => Ok(selftest::run(*seed, *cases)),
    }
}

fn root_info(rd: &RootDatum) -> Result<Report, Failure> {
    let mut r = Report::new("root-info")
        .field("type", s(rd.kind()))
        .field("rank", rd.rank())
        .field("cartan", json!(rd.cartan()))
        .field("d", json!(rd.d()))
        .field("rho", s(rd.rho()))
        .field("weyl_order", s(rd.weyl_group_order()))
        .field("p_over_q", rd.fundamental_group_order())
        .columns(&["root", "weight", "height", "norm"]);
    for (k, c) in rd.positive_roots().iter().enumerate() {
        r.row(vec![
            s(Weight(c.clone())),
            s(&rd.positive_roots_w()[k]),
            json!(c.iter().sum::<i64>()),
            json!(rd.root_norms()[k]),
        ]);
    }
    Ok(r)
}

fn freudenthal_cmd(rd: &RootDatum, lam: &Weight, gram: bool) -> Result<Report, Failure> {
    let table = freudenthal(rd, lam)?;
    let mut r = Report::new("freudenthal")
        .field("type", s(rd.kind()))
        .field("lambda", s(lam))
        .field("dim", table.dim())
        .field("weyl_dim", s(weyl_dim(rd, lam)?));
    // top weight first, then by depth below it
    let mut order: Vec<(&Weight, &i64)> = table.mults.iter().collect();
    order.sort_by_key(|(w, _)| (rd.height(&lam.sub(w)), std::cmp::Reverse((*w).clone())));
    if !gram {
        r = r.columns(&["weight", "mult"]);
        for (w, m) in order.into_iter().filter(|(w, _)| w.is_dominant()) {
            r.row(vec![s(w), json!(m)]);
        }
        return Ok(r);
    }
    let module = WeylModule::build_full(rd, lam)?;
    r = r.columns(&["weight", "mult", "shapovalov_dim", "gram_det"]);
    for (w, m) in order {
        let sd = module.space(w).map_or(0, |x| x.dim());
        r.check(sd as i64 == *m);
        let det = module.gram_det(w).map_or(String::new(), |d| d.to_string());
        r.row(vec![s(w), json!(m), json!(sd), s(det)]);
    }
    r.check(module.dim() as i64 == table.dim());
    Ok(r)
}

fn tau_cmd(rd: &RootDatum, x: Option<&str>, y: Option<&str>, grading: Option<&str>) -> Result<Report, Failure> {
    match (x, y, grading) {
        (Some(x), Some(y), None) => {
            let xw = literals::word(rd, x)?;
            let yw = literals::word(rd, y)?;
            let v = tau(rd, &xw, &yw)?;
            Ok(Report::new("tau")
                .field("type", s(rd.kind()))
                .field("x", s(&xw))
                .field("y", s(&yw))
                .field("value", s(v)))
        }
        (None, None, Some(g)) => {
            let g = literals::ints(g)?;
            if g.len() != rd.rank() || g.iter().any(|&c| c < 0) {
                return Err(Failure::Usage(format!("grading must be {} nonnegative integers", rd.rank())));
            }
            if g.iter().sum::<i64>() > 8 {
                return Err(Failure::Usage("grading height above 8 is not supported".into()));
            }
            let mut r = Report::new("tau")
                .field("type", s(rd.kind()))
                .field("grading", json!(g))
                .columns(&["plus", "minus", "value"]);
            let plus = words_of_grading(&g, Side::Plus);
            let minus = words_of_grading(&g, Side::Minus);
            for a in &plus {
                for b in &minus {
                    r.row(vec![s(a), s(b), s(tau(rd, a, b)?)]);
                }
            }
            Ok(r)
        }
        _ => Err(Failure::Usage("give either --x and --y, or --grading".into())),
    }
}

/// `k_mu` for `mu` in `Q` with `sum |c_i| <= h` in simple-root coordinates.
pub fn cartan_probes(rd: &RootDatum, h: i64) -> Vec<UWord> {
    let rank = rd.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in -left..=left {
            cur[i] = v;
            rec(i + 1, left - v.abs(), cur, out);
        }
        cur[i] = 0;
    }
    let mut coords = Vec::new();
    rec(0, h, &mut cur, &mut coords);
    for c in coords {
        out.push(UWord::k(rd.root_to_weight(&c)));
    }
    out
}

fn theta_cmd(rd: &RootDatum, lam: &Weight, h: i64) -> Result<Report, Failure> {
    if !(0..=6).contains(&h) {
        return Err(Failure::Usage("probe height must lie in 0..=6".into()));
    }
    let module = WeylModule::build_full(rd, lam)?;
    let c = c_basis(rd, lam)?;
    let mut r = Report::new("verify-theta")
        .field("type", s(rd.kind()))
        .field("lambda", s(lam))
        .columns(&["probe", "trace", "pairing", "equal"]);
    let probes = cartan_probes(rd, h);
    for p in &probes {
        let tr = module.trace_against(p)?;
        let mu = match p.atoms.first() {
            Some(qrt::drinfeld::Atom::K(m)) => m.clone(),
            _ => Weight::zero(rd.rank()),
        };
        let mut pair = RatFunc::zero();
        for (nu, k) in c.terms() {
            let e = rd.form_exact(nu, &mu)?;
            pair = &pair + &(&RatFunc::from_laurent(k.clone()) * &RatFunc::q_pow(e));
        }
        let eq = tr == pair;
        r.check(eq);
        r.row(vec![s(p), s(&tr), s(&pair), json!(eq)]);
    }
    let all = verify_theta(rd, lam, &probes)?;
    r.check(all);
    r.push_field("verified", all);
    Ok(r)
}
