//! Worked examples with hand-derived expected values.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use qrt::center::{check_level, is_exceptional, is_regular, pair_compatible, xi_har};
use qrt::charring::{act_bullet, act_bullet_torus, act_circ, c_basis, is_bullet_invariant, Basis, PChar, TorusPoint};
use qrt::drinfeld::{kappa_words, serre_certificate, words_of_grading, Side, Tau, Order, UWord};
use qrt::induction::{euler_rind, ind_bh_weight_dims, verify_main_identity_truncated, GradedDims};
use qrt::repchar::{freudenthal, kostant_partition, tensor_decompose, weyl_dim, weyl_euler, FormalChar};
use qrt::ring::{cyclotomic, quantum_factorial, quantum_int, CycCtx, CycScalar, LaurentPoly, MultiLaurent, RatFunc};
use qrt::rootdata::{RootDatum, Weight};
use qrt::springer::{springer_total_cohomology_dim, Partition};
use qrt::verma::{verify_theta, WeylModule};

fn rd(t: &str) -> RootDatum {
    RootDatum::of(t).unwrap()
}

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    terms.iter().map(|&(c, e)| LaurentPoly::monomial(c, e)).sum()
}

#[test]
fn quantum_numbers() {
    let three = lp(&[(1, 2), (1, 0), (1, -2)]);
    assert_eq!(quantum_int(3, 1), three);
    assert_eq!(quantum_factorial(3, 1), &three * &lp(&[(1, 1), (1, -1)]));
}

#[test]
fn cyclotomic_values() {
    assert_eq!(cyclotomic(9), lp(&[(1, 6), (1, 3), (1, 0)]));
    assert_eq!(cyclotomic(6), lp(&[(1, 2), (-1, 1), (1, 0)]));
    assert_eq!(cyclotomic(9).eval_one(), 3.into());
    assert_eq!(cyclotomic(6).eval_one(), 1.into());
}

#[test]
fn root_data() {
    assert_eq!(rd("B2").weyl_group_order(), 8);
    let mut d = rd("G2").d().to_vec();
    d.sort();
    assert_eq!(d, vec![1, 3]);
    assert_eq!(rd("A1").fundamental_group_order(), 2);
    assert_eq!(rd("G2").fundamental_group_order(), 1);
    assert_eq!(rd("A2").fundamental_group_order(), 3);
    assert_eq!(rd("A2").weyl_orbit(&w(&[1, 1])).len(), 6);
}

#[test]
fn twisted_actions_in_rank_one() {
    let r = rd("A1");
    let s = r.weyl_element(&[0]);
    let e = PChar::monomial(&(), Basis::E, w(&[1]), LaurentPoly::one());
    assert_eq!(act_circ(&r, &s, &e).unwrap(), PChar::monomial(&(), Basis::E, w(&[-1]), LaurentPoly::q_pow(-1)));
    let chi = PChar::monomial(&(), Basis::Chi, w(&[1]), LaurentPoly::one());
    assert_eq!(act_bullet(&r, &s, &chi).unwrap(), PChar::monomial(&(), Basis::Chi, w(&[-1]), LaurentPoly::q_pow(2)));
    let e2 = PChar::monomial(&(), Basis::E, w(&[2]), LaurentPoly::one());
    let chim = PChar::monomial(&(), Basis::Chi, w(&[-1]), LaurentPoly::one());
    assert_eq!(e2.translate().unwrap(), chim);
    assert_eq!(act_circ(&r, &s, &e2).unwrap().translate().unwrap(), act_bullet(&r, &s, &chim).unwrap());
}

#[test]
fn torus_action_in_rank_one() {
    let r = rd("A1");
    let s = r.weyl_element(&[0]);
    // (s.t)(chi) = q^2 z^-1, so the fixed point is z = q
    let ctx = 1usize;
    let z = TorusPoint::new(&ctx, vec![MultiLaurent::var_pow(1, 1, 1)]).unwrap();
    let sz = act_bullet_torus(&r, &s, &z);
    let want = MultiLaurent::q_pow(1, 2).mul(&MultiLaurent::var_pow(1, 1, -1));
    assert_eq!(sz.values()[0], want);
    let fixed = TorusPoint::new(&(), vec![RatFunc::q_pow(1)]).unwrap();
    assert_eq!(act_bullet_torus(&r, &s, &fixed), fixed);
    assert!(!is_regular(&r, &fixed));
    for k in [-1, 3] {
        assert!(is_regular(&r, &TorusPoint::new(&(), vec![RatFunc::q_pow(k)]).unwrap()));
    }
}

#[test]
fn c_basis_examples() {
    let r = rd("A1");
    let c1 = c_basis(&r, &w(&[1])).unwrap();
    let mut want = PChar::zero(&(), Basis::Chi);
    want.add_term(w(&[1]), LaurentPoly::q_pow(-1));
    want.add_term(w(&[-1]), LaurentPoly::q_pow(1));
    assert_eq!(c1, want);
    let c2 = c_basis(&r, &w(&[2])).unwrap();
    let mut want = PChar::zero(&(), Basis::Chi);
    want.add_term(w(&[2]), LaurentPoly::q_pow(-2));
    want.add_term(w(&[0]), LaurentPoly::one());
    want.add_term(w(&[-2]), LaurentPoly::q_pow(2));
    assert_eq!(c2, want);
    assert!(is_bullet_invariant(&r, &c1).unwrap());
    let chi = PChar::monomial(&(), Basis::Chi, w(&[1]), LaurentPoly::one());
    assert!(!is_bullet_invariant(&r, &chi).unwrap());
}

#[test]
fn harish_chandra_character() {
    let r = rd("A1");
    let ctx = 1usize;
    let z = TorusPoint::new(&ctx, vec![MultiLaurent::var_pow(1, 1, 1)]).unwrap();
    let c = c_basis(&r, &w(&[1])).unwrap().base_change::<MultiLaurent>(&ctx);
    let want = MultiLaurent::q_pow(1, -1)
        .mul(&MultiLaurent::var_pow(1, 1, 1))
        .add(&MultiLaurent::q_pow(1, 1).mul(&MultiLaurent::var_pow(1, 1, -1)));
    assert_eq!(xi_har(&r, &z, &c).unwrap(), want);
    let sz = act_bullet_torus(&r, &r.weyl_element(&[0]), &z);
    assert_eq!(xi_har(&r, &sz, &c).unwrap(), want);
}

#[test]
fn representation_theory() {
    let a2 = rd("A2");
    assert_eq!(kostant_partition(&a2, &[1, 1]), 2);
    let t = freudenthal(&a2, &w(&[1, 1])).unwrap();
    assert_eq!(t.mult(&w(&[0, 0])), 2);
    assert_eq!(t.dim(), 8);
    assert_eq!(weyl_dim(&a2, &w(&[1, 1])).unwrap(), 8.into());
    let b2 = rd("B2");
    for lam in [w(&[1, 0]), w(&[0, 1])] {
        assert_eq!(weyl_dim(&b2, &lam).unwrap(), freudenthal(&b2, &lam).unwrap().dim().into());
    }
    let tensor = tensor_decompose(&a2, &w(&[1, 1]), &w(&[1, 1])).unwrap();
    let total: i64 = tensor.iter().map(|(l, c)| c * freudenthal(&a2, l).unwrap().dim()).sum();
    assert_eq!(total, 64);
    assert_eq!(weyl_euler(&rd("A1"), &w(&[-2])).unwrap(), FormalChar::monomial(w(&[0]), -1));
}

#[test]
fn shapovalov_examples() {
    let a1 = rd("A1");
    let m = WeylModule::build_full(&a1, &w(&[1])).unwrap();
    assert_eq!(m.dims(), BTreeMap::from([(w(&[1]), 1), (w(&[-1]), 1)]));
    assert_eq!(m.gram_det(&w(&[-1])), Some(RatFunc::one()));
    let m = WeylModule::build_full(&a1, &w(&[2])).unwrap();
    assert_eq!(m.gram_det(&w(&[0])), Some(RatFunc::from_laurent(quantum_int(2, 1))));
    let a2 = rd("A2");
    let m = WeylModule::build_full(&a2, &w(&[1, 1])).unwrap();
    let dims = m.dims();
    assert_eq!(dims.len(), 7);
    assert_eq!(dims[&w(&[0, 0])], 2);
    assert_eq!(m.dim(), 8);
}

#[test]
fn quantum_traces() {
    let a1 = rd("A1");
    let m = WeylModule::build_full(&a1, &w(&[1])).unwrap();
    assert_eq!(m.trace_against(&UWord::one()).unwrap(), &RatFunc::q_pow(-1) + &RatFunc::q_pow(1));
    // sum over nu = +-1 of q^{(nu, alpha) - 2(nu, rho)} = q^0 + q^0
    assert_eq!(m.trace_against(&UWord::k(w(&[2]))).unwrap(), RatFunc::from_int(2));
    let probes: Vec<UWord> = [0, 2, 4].iter().map(|&k| UWord::k(w(&[k]))).collect();
    assert!(verify_theta(&a1, &w(&[1]), &probes).unwrap());
    let a2 = rd("A2");
    let probes = vec![UWord::k(a2.simple_root(0)), UWord::k(a2.simple_root(1))];
    assert!(verify_theta(&a2, &w(&[1, 0]), &probes).unwrap());
}

#[test]
fn pairing_examples() {
    let a1 = rd("A1");
    let ee = UWord::e_word(&[0, 0]);
    let ff = UWord::f_word(&[0, 0]);
    let a = Tau::new(&a1, Order::SplitMinusFirst).eval(&ee, &ff).unwrap();
    let b = Tau::new(&a1, Order::SplitPlusFirst).eval(&ee, &ff).unwrap();
    assert_eq!(a, b);
    assert!(!a.is_zero());
    assert_eq!(words_of_grading(&[2, 1], Side::Minus).len(), 3);
    assert!(serre_certificate(&rd("A2"), 0, 1, Side::Plus, 3).unwrap());
    assert!(serre_certificate(&rd("B2"), 1, 0, Side::Plus, 4).unwrap());
    assert!(serre_certificate(&rd("B2"), 0, 1, Side::Minus, 4).unwrap());
    // kappa(k_mu, k_{2 lambda}) = q^{-(lambda, mu)}
    let a2 = rd("A2");
    let lam = w(&[1, 0]);
    let mu = a2.simple_root(0);
    let v = kappa_words(&a2, &UWord::k(mu.clone()), &UWord::k(lam.scale(2))).unwrap();
    assert_eq!(v, RatFunc::q_pow(-a2.form_exact(&lam, &mu).unwrap()));
}

#[test]
fn level_examples() {
    let rep = check_level(&rd("A2"), 9, None).unwrap();
    assert!(!rep.accept);
    assert_eq!(rep.failures(), vec!["a2"]);
    assert!(check_level(&rd("A1"), 25, None).unwrap().accept);
    let ctx2 = CycCtx::level(2);
    let minus_one = TorusPoint::new(&ctx2, vec![CycScalar::generator_pow(ctx2, 1)]).unwrap();
    assert!(is_exceptional(&rd("A1"), &minus_one).unwrap());
    let ctx5 = CycCtx::level(5);
    let zeta5 = TorusPoint::new(&ctx5, vec![CycScalar::generator_pow(ctx5, 1)]).unwrap();
    assert!(!is_exceptional(&rd("A1"), &zeta5).unwrap());
}

#[test]
fn compatibility_examples() {
    let a1 = rd("A1");
    let c5 = CycCtx::level(5);
    let t = TorusPoint::new(&c5, vec![CycScalar::generator_pow(c5, 1)]).unwrap();
    // t^2 = zeta^2 and h0 = zeta^-2 are swapped by s
    let h0 = TorusPoint::new(&c5, vec![CycScalar::generator_pow(c5, -2)]).unwrap();
    assert!(pair_compatible(&a1, &t, 2, &h0));
    let c35 = CycCtx::level(35);
    let t = TorusPoint::new(&c35, vec![CycScalar::generator_pow(c35, 7)]).unwrap();
    let h0 = TorusPoint::new(&c35, vec![CycScalar::generator_pow(c35, 5)]).unwrap();
    assert!(!pair_compatible(&a1, &t, 1, &h0));
}

#[test]
fn induction_examples() {
    let a2 = rd("A2");
    let d = GradedDims::delta(w(&[0, 0]));
    assert_eq!(ind_bh_weight_dims(&a2, &d, &a2.root_to_weight(&[1, 1]), 4).unwrap(), 2);
    let a1 = rd("A1");
    let m = GradedDims::finite((0..=3).map(|b| (w(&[2 * b]), 1)).collect());
    let e = euler_rind(&a1, &m);
    assert_eq!(e.coeffs, (0..=3).map(|b| (w(&[2 * b]), 1)).collect());
}

#[test]
fn main_identity_examples() {
    let rep = verify_main_identity_truncated(&rd("A1"), 6).unwrap();
    assert!(rep.passed());
    for b in 0..=3 {
        let row = rep.row(&w(&[2 * b])).unwrap();
        assert!(row.complete);
        assert_eq!((row.lhs, row.rhs), (1, 1));
    }
    let rep = verify_main_identity_truncated(&rd("A2"), 4).unwrap();
    let rho = rep.row(&w(&[1, 1])).unwrap();
    assert_eq!((rho.lhs, rho.rhs), (2, 2));
    for t in ["A1", "A2", "B2"] {
        let rep = verify_main_identity_truncated(&rd(t), 3).unwrap();
        let zero = rep.row(&Weight::zero(rd(t).rank())).unwrap();
        assert_eq!((zero.lhs, zero.rhs), (1, 1));
    }
}

#[test]
fn springer_examples() {
    assert_eq!(springer_total_cohomology_dim(&Partition::new(vec![2, 1])), BigUint::from(3u32));
    assert_eq!(springer_total_cohomology_dim(&Partition::new(vec![3])), BigUint::from(1u32));
    assert_eq!(springer_total_cohomology_dim(&Partition::new(vec![1, 1, 1, 1])), BigUint::from(24u32));
}
