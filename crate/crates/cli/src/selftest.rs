//! Seeded invariant suite behind `qrt selftest`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use qrt::center::check_level;
use qrt::charring::{act_bullet, act_circ, c_basis, is_bullet_invariant, Basis, PChar};
use qrt::drinfeld::{serre_certificate, Atom, Order, Side, Tau, UWord};
use qrt::induction::verify_main_identity_truncated;
use qrt::ring::LaurentPoly;
use qrt::rootdata::{RootDatum, Weight, WeylElement};
use qrt::springer::{springer_total_cohomology_dim, Partition};
use qrt::verma::{verify_theta, WeylModule};

use crate::commands::cartan_probes;
use crate::report::Report;

type Check = Result<String, String>;

fn datum(t: &str) -> RootDatum {
    RootDatum::of(t).expect("built-in type")
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize, r: i64) -> Weight {
    Weight((0..rank).map(|_| rng.gen_range(-r..=r)).collect())
}

fn random_element(rng: &mut ChaCha8Rng, group: &[WeylElement]) -> WeylElement {
    group[rng.gen_range(0..group.len())].clone()
}

fn form_invariance(rng: &mut ChaCha8Rng, cases: usize) -> Check {
    for t in ["A2", "B2", "G2"] {
        let rd = datum(t);
        let group = rd.weyl_group();
        for _ in 0..cases {
            let a = random_weight(rng, 2, 5);
            let b = random_weight(rng, 2, 5);
            let w = random_element(rng, &group);
            if rd.form(&rd.act(&w, &a), &rd.act(&w, &b)) != rd.form(&a, &b) {
                return Err(format!("{} {} {} {}", t, w, a, b));
            }
        }
    }
    Ok(format!("{} cases per type", cases))
}

/// A word in `k_beta` (beta in `Q`) and generators of one side.
fn random_word(rng: &mut ChaCha8Rng, rd: &RootDatum, side: Side, len: usize) -> UWord {
    let mut atoms = Vec::new();
    for _ in 0..len {
        if rng.gen_bool(0.2) {
            let c: Vec<i64> = (0..rd.rank()).map(|_| rng.gen_range(-1..=1)).collect();
            atoms.push(Atom::K(rd.root_to_weight(&c)));
        } else {
            let i = rng.gen_range(0..rd.rank());
            let n = if rng.gen_bool(0.15) { 2 } else { 1 };
            atoms.push(match side {
                Side::Plus => Atom::E(i, n),
                Side::Minus => Atom::F(i, n),
            });
        }
    }
    UWord::new(atoms)
}

fn tau_order(rng: &mut ChaCha8Rng, cases: usize) -> Check {
    let mut nonzero = 0;
    for t in ["A2", "B2", "G2"] {
        let rd = datum(t);
        let mut a = Tau::new(&rd, Order::SplitMinusFirst).without_pruning();
        let mut b = Tau::new(&rd, Order::SplitPlusFirst).without_pruning();
        for _ in 0..cases {
            let lx = rng.gen_range(0..4);
            let x = random_word(rng, &rd, Side::Plus, lx);
            let ly = rng.gen_range(0..4);
            let y = random_word(rng, &rd, Side::Minus, ly);
            let va = a.eval(&x, &y).map_err(|e| e.to_string())?;
            let vb = b.eval(&x, &y).map_err(|e| e.to_string())?;
            if va != vb {
                return Err(format!("{}: tau({}, {})", t, x, y));
            }
            let gx = x.grading(rd.rank());
            let gy: Vec<i64> = y.grading(rd.rank()).iter().map(|c| -c).collect();
            if gx != gy && !va.is_zero() {
                return Err(format!("{}: tau({}, {}) breaks orthogonality", t, x, y));
            }
            if !va.is_zero() {
                nonzero += 1;
            }
        }
    }
    Ok(format!("{} cases per type, {} nonzero", cases, nonzero))
}

fn serre() -> Check {
    for t in ["A2", "B2"] {
        let rd = datum(t);
        for (i, j) in [(0, 1), (1, 0)] {
            for side in [Side::Plus, Side::Minus] {
                if !serre_certificate(&rd, i, j, side, 4).map_err(|e| e.to_string())? {
                    return Err(format!("{} ({}, {}) {:?}", t, i + 1, j + 1, side));
                }
            }
        }
    }
    Ok("A2, B2 to height 4".into())
}

fn random_pchar(rng: &mut ChaCha8Rng, rank: usize) -> PChar<LaurentPoly> {
    let mut f = PChar::zero(&(), Basis::E);
    for _ in 0..3 {
        // even weights so the dictionary to the chi-reading applies
        let w = random_weight(rng, rank, 3).scale(2);
        let c = LaurentPoly::monomial(rng.gen_range(-3i64..=3), rng.gen_range(-3..=3));
        f.add_term(w, c);
    }
    f
}

fn twisted_laws(rng: &mut ChaCha8Rng, cases: usize) -> Check {
    for t in ["A2", "B2"] {
        let rd = datum(t);
        let group = rd.weyl_group();
        for _ in 0..cases {
            let f = random_pchar(rng, 2);
            let a = random_element(rng, &group);
            let b = random_element(rng, &group);
            let ab = rd.compose(&a, &b);
            let lhs = act_circ(&rd, &a, &act_circ(&rd, &b, &f).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let rhs = act_circ(&rd, &ab, &f).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("{}: circ law fails for {}", t, f));
            }
            let g = f.translate().map_err(|e| e.to_string())?;
            let lhs = act_bullet(&rd, &a, &act_bullet(&rd, &b, &g).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let rhs = act_bullet(&rd, &ab, &g).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("{}: bullet law fails for {}", t, g));
            }
            // the dictionary intertwines the two actions
            let via = act_circ(&rd, &a, &f)
                .and_then(|x| x.translate())
                .map_err(|e| e.to_string())?;
            if via != act_bullet(&rd, &a, &g).map_err(|e| e.to_string())? {
                return Err(format!("{}: dictionary fails for {}", t, f));
            }
        }
    }
    Ok(format!("{} cases per type", cases))
}

fn c_invariance() -> Check {
    let mut n = 0;
    for t in ["A1", "A2", "B2"] {
        let rd = datum(t);
        for lam in rd.dominant_weights_up_to(3) {
            let c = c_basis(&rd, &lam).map_err(|e| e.to_string())?;
            if !is_bullet_invariant(&rd, &c).map_err(|e| e.to_string())? {
                return Err(format!("{} c({})", t, lam));
            }
            n += 1;
        }
    }
    Ok(format!("{} elements", n))
}

fn modules() -> Check {
    let mut n = 0;
    for (t, lvl) in [("A1", 4), ("A2", 2), ("B2", 2)] {
        let rd = datum(t);
        for lam in rd.dominant_weights_up_to(lvl) {
            let m = WeylModule::build_full(&rd, &lam).map_err(|e| e.to_string())?;
            let f = qrt::repchar::freudenthal(&rd, &lam).map_err(|e| e.to_string())?;
            if m.dims() != f.mults {
                return Err(format!("{} {}: dimensions", t, lam));
            }
            let bad = m.relation_failures().map_err(|e| e.to_string())?;
            if let Some(b) = bad.first() {
                return Err(format!("{} {}: {}", t, lam, b));
            }
            n += 1;
        }
    }
    Ok(format!("{} modules", n))
}

fn theta() -> Check {
    for t in ["A1", "A2"] {
        let rd = datum(t);
        let probes = cartan_probes(&rd, 2);
        for lam in rd.dominant_weights_up_to(2) {
            if !verify_theta(&rd, &lam, &probes).map_err(|e| e.to_string())? {
                return Err(format!("{} {}", t, lam));
            }
        }
    }
    Ok("A1, A2 to level 2".into())
}

fn main_identity() -> Check {
    for (t, n) in [("A1", 6), ("A2", 4)] {
        let rep = verify_main_identity_truncated(&datum(t), n).map_err(|e| e.to_string())?;
        if let Some(r) = rep.mismatches().first() {
            return Err(format!("{} at {}: {} vs {}", t, r.lambda, r.lhs, r.rhs));
        }
    }
    Ok("A1 N=6, A2 N=4".into())
}

fn levels() -> Check {
    for (t, l, accept) in [("G2", 9, false), ("A2", 9, false), ("A1", 25, true), ("A1", 15, false)] {
        let rep = check_level(&datum(t), l, None).map_err(|e| e.to_string())?;
        if rep.accept != accept {
            return Err(format!("{} l={}", t, l));
        }
    }
    Ok("4 levels".into())
}

fn springer() -> Check {
    for n in 1..=6u32 {
        let parts = Partition::all(n);
        for p in &parts {
            for q in &parts {
                if p.dominates(q) && springer_total_cohomology_dim(p) > springer_total_cohomology_dim(q) {
                    return Err(format!("{} vs {}", p, q));
                }
            }
        }
    }
    Ok("n <= 6".into())
}

pub fn run(seed: u64, cases: usize) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("selftest")
        .field("seed", seed)
        .field("cases", cases)
        .columns(&["check", "passed", "detail"]);
    let results: Vec<(&str, Check)> = vec![
        ("form_w_invariance", form_invariance(&mut rng, cases)),
        ("tau_order_independence", tau_order(&mut rng, cases)),
        ("serre_vanishing", serre()),
        ("twisted_action_laws", twisted_laws(&mut rng, cases)),
        ("c_basis_invariance", c_invariance()),
        ("weyl_module_relations", modules()),
        ("theta_trace", theta()),
        ("main_identity", main_identity()),
        ("level_table", levels()),
        ("springer_monotone", springer()),
    ];
    for (name, res) in results {
        let (ok, detail) = match res {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        r.check(ok);
        r.row(vec![json!(name), json!(ok), json!(detail)]);
    }
    r
}
